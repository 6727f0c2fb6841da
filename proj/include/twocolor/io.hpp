#pragma once

#include <json.hpp>

#include "twocolor/core.hpp"

namespace twocolor {

using Json = nlohmann::ordered_json;

// Wire format:
//   TwoColorPartition  {"evens":[...],"greens":[...],"blues":[...]}
//   OddOverpartition   {"overlined":[...],"plain":[...]}
// Arrays are written in the canonical descending order. Missing keys read
// as empty arrays; unknown keys and invariant violations raise InvalidInput.

Json to_json(const TwoColorPartition& p);
Json to_json(const OddOverpartition& p);

TwoColorPartition two_color_from_json(const Json& j);
OddOverpartition overpartition_from_json(const Json& j);

// Parses text, mapping parse errors to InvalidInput.
Json parse_json_text(const std::string& text);

} // namespace twocolor
