#pragma once

#include <cstdint>

#include "twocolor/core.hpp"
#include "twocolor/diagram.hpp"

namespace twocolor {

enum class EvensChange : std::uint8_t { grew, shrank };
const char* to_string(EvensChange c) noexcept;

struct TransformOutcome {
    TwoColorPartition result;
    StripReport strip;
    EvensChange direction = EvensChange::grew;
};

// True for the single-color staircases {2k-1,...,3,1} with no even parts,
// and for the empty partition.
bool is_exceptional(const TwoColorPartition& p) noexcept;

// The sign-reversing map on E(n):
//   1. draw the diagram of (greens, blues) and merge adjoined triangles;
//   2. work on columns when |greens| > |blues|, rows otherwise. With l the
//      longest all-square line and M the largest even part (0 if none):
//        2l > M         remove the line, add the even part 2l;
//        l > 0          remove M, insert M/2 squares just before that line;
//        l == 0         remove M, insert M/2 squares past the far edge;
//   3. redraw the diagonal and read the new greens and blues.
// Throws ExceptionalPartition for the staircases. The image is re-checked
// (weight, parity flip, color balance) and a violation raises
// MalformedDiagram.
TransformOutcome transform(const TwoColorPartition& p);

} // namespace twocolor
