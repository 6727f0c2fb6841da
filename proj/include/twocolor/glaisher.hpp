#pragma once

#include "twocolor/core.hpp"

namespace twocolor {

// Odd parts -> distinct parts. An odd value m occurring mu times is
// replaced by m * 2^e for every bit e set in mu.
Parts glaisher_split(const Parts& odd_multiset);

// Distinct parts -> odd parts; d = 2^e * m contributes 2^e copies of m.
Parts glaisher_merge(const Parts& distinct);

// Overlined parts turn green; the plain multiset goes through
// glaisher_split and is filed under evens or blues by parity.
TwoColorPartition overpartition_to_twocolor(const OddOverpartition& op);
OddOverpartition twocolor_to_overpartition(const TwoColorPartition& p);

} // namespace twocolor
