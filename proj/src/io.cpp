#include "twocolor/io.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>

#include "twocolor/error.hpp"

namespace twocolor {

namespace {

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed)
{
    if (!j.is_object())
        throw InvalidInput("expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed)
            known = known || key == a;
        if (!known)
            throw InvalidInput("unknown key \"" + key + "\"");
    }
}

Parts read_parts(const Json& j, const char* key)
{
    Parts out;
    auto it = j.find(key);
    if (it == j.end() || it->is_null())
        return out;
    if (!it->is_array())
        throw InvalidInput(std::string(key) + ": expected an array of integers");
    for (const auto& v : *it) {
        if (!v.is_number_integer())
            throw InvalidInput(std::string(key) + ": expected an array of integers");
        if (v.is_number_unsigned() && v.get<std::uint64_t>() > std::uint64_t(max_weight))
            throw InvalidInput(std::string(key) + ": part exceeds the configured bound");
        out.push_back(v.get<Part>());
    }
    return out;
}

} // namespace

Json to_json(const TwoColorPartition& p)
{
    return Json{{"evens", p.evens()}, {"greens", p.greens()}, {"blues", p.blues()}};
}

Json to_json(const OddOverpartition& p)
{
    return Json{{"overlined", p.overlined()}, {"plain", p.plain()}};
}

TwoColorPartition two_color_from_json(const Json& j)
{
    reject_unknown_keys(j, {"evens", "greens", "blues"});
    return TwoColorPartition(read_parts(j, "evens"), read_parts(j, "greens"),
                             read_parts(j, "blues"));
}

OddOverpartition overpartition_from_json(const Json& j)
{
    reject_unknown_keys(j, {"overlined", "plain"});
    return OddOverpartition(read_parts(j, "overlined"), read_parts(j, "plain"));
}

Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace twocolor
