#include "twocolor/involution.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "twocolor/error.hpp"

namespace twocolor {

const char* to_string(EvensChange c) noexcept
{
    return c == EvensChange::grew ? "evens_grew" : "evens_shrank";
}

namespace {

bool is_staircase(const Parts& parts) noexcept
{
    if (parts.empty())
        return false;
    Part expected = 2 * static_cast<Part>(parts.size()) - 1;
    for (Part v : parts) {
        if (v != expected)
            return false;
        expected -= 2;
    }
    return true;
}

std::string staircase_message(const TwoColorPartition& p)
{
    const Parts& stairs = p.greens().empty() ? p.blues() : p.greens();
    std::string sum;
    for (Part v : stairs)
        sum += (sum.empty() ? "" : "+") + std::to_string(v);
    if (stairs.empty())
        return "the empty partition has no diagram to transform";
    return describe(p) + " is the staircase " + sum + " = "
           + std::to_string(stairs.size()) + "^2; it has no all-square row or column and no even part";
}

void check_image(const TwoColorPartition& in, const TransformOutcome& out)
{
    const TwoColorPartition& r = out.result;
    if (weight(r) != weight(in))
        throw MalformedDiagram("transform changed the weight of " + describe(in));
    const auto before = static_cast<std::int64_t>(in.evens().size());
    const auto after = static_cast<std::int64_t>(r.evens().size());
    if (after - before != (out.direction == EvensChange::grew ? 1 : -1))
        throw MalformedDiagram("transform did not move exactly one even part of " + describe(in));
    const auto balance = [](const TwoColorPartition& x) {
        return static_cast<std::int64_t>(x.greens().size())
               - static_cast<std::int64_t>(x.blues().size());
    };
    if (balance(r) != balance(in))
        throw MalformedDiagram("transform changed |greens|-|blues| of " + describe(in));
}

} // namespace

bool is_exceptional(const TwoColorPartition& p) noexcept
{
    if (!p.evens().empty())
        return false;
    if (p.greens().empty() && p.blues().empty())
        return true;
    return (is_staircase(p.greens()) && p.blues().empty())
           || (is_staircase(p.blues()) && p.greens().empty());
}

TransformOutcome transform(const TwoColorPartition& p)
{
    if (is_exceptional(p))
        throw ExceptionalPartition(staircase_message(p));

    ModularDiagram dia = merge_adjoined(build_diagram(p.greens(), p.blues()));
    const Orientation o = p.greens().size() > p.blues().size() ? Orientation::column
                                                               : Orientation::row;
    StripReport strip = longest_all_square_strip(dia, o);
    const Part largest_even = p.evens().empty() ? 0 : p.evens().front();

    Parts evens = p.evens();
    EvensChange direction;
    if (2 * Part{strip.length} > largest_even) {
        dia = remove_strip(dia, o, strip.position);
        evens.insert(evens.begin(), 2 * Part{strip.length});
        strip.action = StripAction::removed;
        direction = EvensChange::grew;
    } else {
        // largest_even >= 2 here, since 2l >= 0 was not above it.
        evens.erase(evens.begin());
        const int squares = static_cast<int>(largest_even / 2);
        if (strip.length > 0) {
            dia = insert_strip(dia, o, strip.position, squares);
            strip.action = StripAction::inserted;
        } else {
            strip.position = far_edge_position(dia, o);
            dia = insert_strip(dia, o, strip.position, squares);
            strip.action = StripAction::far_edge_inserted;
        }
        direction = EvensChange::shrank;
    }

    ColorParts read = split_and_read(dia);
    TransformOutcome out{
        TwoColorPartition(std::move(evens), std::move(read.greens), std::move(read.blues)),
        strip, direction};
    check_image(p, out);
    return out;
}

} // namespace twocolor
