#include "twocolor/glaisher.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>

#include "twocolor/error.hpp"

namespace twocolor {

Parts glaisher_split(const Parts& odd_multiset)
{
    std::map<Part, std::int64_t> multiplicity;
    for (Part m : odd_multiset) {
        if (m <= 0 || m % 2 == 0)
            throw InvalidInput("glaisher_split: every part must be positive and odd");
        ++multiplicity[m];
    }

    Parts out;
    for (const auto& [m, mu] : multiplicity) {
        for (int e = 0; (mu >> e) != 0; ++e) {
            if ((mu >> e) & 1)
                out.push_back(m << e);
        }
    }
    // m * 2^e determines (m, e), so no part repeats.
    std::ranges::sort(out, std::greater<>{});
    return out;
}

Parts glaisher_merge(const Parts& distinct)
{
    Parts out;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        Part d = distinct[i];
        if (d <= 0)
            throw InvalidInput("glaisher_merge: every part must be positive");
        if (i > 0 && distinct[i - 1] <= d)
            throw InvalidInput("glaisher_merge: parts must be strictly decreasing");
        Part copies = 1;
        while (d % 2 == 0) {
            d /= 2;
            copies *= 2;
        }
        out.insert(out.end(), static_cast<std::size_t>(copies), d);
    }
    std::ranges::sort(out, std::greater<>{});
    return out;
}

TwoColorPartition overpartition_to_twocolor(const OddOverpartition& op)
{
    Parts evens;
    Parts blues;
    for (Part d : glaisher_split(op.plain()))
        (d % 2 == 0 ? evens : blues).push_back(d);
    return TwoColorPartition(std::move(evens), op.overlined(), std::move(blues));
}

OddOverpartition twocolor_to_overpartition(const TwoColorPartition& p)
{
    Parts blue_parts;
    blue_parts.reserve(p.evens().size() + p.blues().size());
    std::ranges::merge(p.evens(), p.blues(), std::back_inserter(blue_parts), std::greater<>{});
    return OddOverpartition(p.greens(), glaisher_merge(blue_parts));
}

} // namespace twocolor
