#include "twocolor/core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "twocolor/error.hpp"

namespace twocolor {

const char* to_string(Parity p) noexcept
{
    return p == Parity::even ? "even" : "odd";
}

bool is_distinct_descending(const Parts& parts, Parity parity) noexcept
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0 || parity_of(parts[i]) != parity)
            return false;
        if (i > 0 && parts[i - 1] <= parts[i])
            return false;
    }
    return true;
}

namespace {

void check_bounded(const Parts& parts, const char* name)
{
    Part total = 0;
    for (Part v : parts) {
        if (v <= 0)
            throw InvalidPartition(std::string(name) + ": parts must be positive");
        if (v > max_weight || total > max_weight - v)
            throw InvalidPartition(std::string(name) + ": weight exceeds the configured bound");
        total += v;
    }
}

void check_distinct(const Parts& parts, Parity parity, const char* name)
{
    check_bounded(parts, name);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parity_of(parts[i]) != parity)
            throw InvalidPartition(std::string(name) + ": every part must be "
                                   + to_string(parity));
        if (i > 0 && parts[i - 1] <= parts[i])
            throw InvalidPartition(std::string(name) + ": parts must be strictly decreasing");
    }
}

void append_parts(std::ostringstream& os, const Parts& parts)
{
    os << '[';
    for (std::size_t i = 0; i < parts.size(); ++i)
        os << (i ? "," : "") << parts[i];
    os << ']';
}

// Largest sum reachable with distinct positive parts of `parity` that are
// all <= cap.
Part max_distinct_sum(Part cap, Parity parity)
{
    if (cap <= 0)
        return 0;
    if (parity == Parity::odd) {
        Part k = (cap + 1) / 2;
        return k * k;
    }
    Part k = cap / 2;
    return k * (k + 1);
}

// Visits strictly decreasing sequences of `parity` parts in descending
// lexicographic order. A sequence precedes its own proper prefixes.
// With `exact` only sequences summing to `budget` are visited, otherwise
// every sequence of sum <= budget.
class DistinctWalker {
public:
    DistinctWalker(Parity parity, bool exact, std::function<void(const Parts&)> visit)
        : parity_(parity), exact_(exact), visit_(std::move(visit))
    {}

    void run(Part budget)
    {
        prefix_.clear();
        descend(budget, budget);
    }

private:
    void descend(Part cap, Part remaining)
    {
        if (exact_ && remaining > max_distinct_sum(cap, parity_))
            return;
        Part p = std::min(cap, remaining);
        if (p > 0 && parity_of(p) != parity_)
            --p;
        for (; p > 0; p -= 2) {
            prefix_.push_back(p);
            descend(p - 2, remaining - p);
            prefix_.pop_back();
        }
        if (!exact_ || remaining == 0)
            visit_(prefix_);
    }

    Parity parity_;
    bool exact_;
    std::function<void(const Parts&)> visit_;
    Parts prefix_;
};

void check_enumeration_bound(std::int64_t n)
{
    if (n < 0)
        throw InvalidInput("weight must be nonnegative");
    if (n > max_weight)
        throw InvalidInput("weight exceeds the configured bound");
}

} // namespace

TwoColorPartition::TwoColorPartition(Parts evens, Parts greens, Parts blues)
    : evens_(std::move(evens)), greens_(std::move(greens)), blues_(std::move(blues))
{
    check_distinct(evens_, Parity::even, "evens");
    check_distinct(greens_, Parity::odd, "greens");
    check_distinct(blues_, Parity::odd, "blues");
    if (weight(evens_) + weight(greens_) + weight(blues_) > max_weight)
        throw InvalidPartition("weight exceeds the configured bound");
}

OddOverpartition::OddOverpartition(Parts overlined, Parts plain)
    : overlined_(std::move(overlined)), plain_(std::move(plain))
{
    check_distinct(overlined_, Parity::odd, "overlined");
    check_bounded(plain_, "plain");
    for (std::size_t i = 0; i < plain_.size(); ++i) {
        if (parity_of(plain_[i]) != Parity::odd)
            throw InvalidPartition("plain: every part must be odd");
        if (i > 0 && plain_[i - 1] < plain_[i])
            throw InvalidPartition("plain: parts must be weakly decreasing");
    }
    if (weight(overlined_) + weight(plain_) > max_weight)
        throw InvalidPartition("weight exceeds the configured bound");
}

std::int64_t weight(const Parts& parts)
{
    std::int64_t total = 0;
    for (Part v : parts)
        total += v;
    return total;
}

std::int64_t weight(const TwoColorPartition& p)
{
    return weight(p.evens()) + weight(p.greens()) + weight(p.blues());
}

std::int64_t weight(const OddOverpartition& p)
{
    return weight(p.overlined()) + weight(p.plain());
}

std::vector<TwoColorPartition> enumerate_two_color(std::int64_t n)
{
    check_enumeration_bound(n);

    std::vector<TwoColorPartition> out;
    Parts evens;
    Parts greens;
    DistinctWalker blue_walk(Parity::odd, true, [&](const Parts& blues) {
        out.emplace_back(evens, greens, blues);
    });
    DistinctWalker green_walk(Parity::odd, false, [&](const Parts& g) {
        greens = g;
        blue_walk.run(n - weight(evens) - weight(greens));
    });
    DistinctWalker(Parity::even, false, [&](const Parts& e) {
        evens = e;
        green_walk.run(n - weight(evens));
    }).run(n);
    return out;
}

namespace {

// Weakly decreasing odd parts summing exactly to `remaining`, largest first.
void walk_odd_multisets(Part cap, Part remaining, Parts& prefix,
                        const std::function<void(const Parts&)>& visit)
{
    if (remaining == 0) {
        visit(prefix);
        return;
    }
    Part top = std::min(cap, remaining);
    if (top % 2 == 0)
        --top;
    for (Part p = top; p > 0; p -= 2) {
        prefix.push_back(p);
        walk_odd_multisets(p, remaining - p, prefix, visit);
        prefix.pop_back();
    }
}

} // namespace

std::vector<OddOverpartition> enumerate_odd_overpartitions(std::int64_t n)
{
    check_enumeration_bound(n);

    std::vector<std::vector<Parts>> plain_by_weight(static_cast<std::size_t>(n) + 1);
    for (Part w = 0; w <= n; ++w) {
        Parts prefix;
        walk_odd_multisets(w, w, prefix, [&](const Parts& s) {
            plain_by_weight[static_cast<std::size_t>(w)].push_back(s);
        });
    }

    std::vector<OddOverpartition> out;
    DistinctWalker(Parity::odd, false, [&](const Parts& overlined) {
        const Part rest = n - weight(overlined);
        for (const Parts& plain : plain_by_weight[static_cast<std::size_t>(rest)])
            out.emplace_back(overlined, plain);
    }).run(n);
    return out;
}

ParityClass classify(const TwoColorPartition& p) noexcept
{
    return {parity_of(static_cast<std::int64_t>(p.evens().size())),
            parity_of(static_cast<std::int64_t>(p.part_count()))};
}

SquareWitness square_witness(std::int64_t n)
{
    if (n < 0)
        throw InvalidInput("square_witness: n must be nonnegative");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    if (r * r == n)
        return {true, r};
    return {false, 0};
}

std::string describe(const TwoColorPartition& p)
{
    std::ostringstream os;
    os << "{evens:";
    append_parts(os, p.evens());
    os << ",greens:";
    append_parts(os, p.greens());
    os << ",blues:";
    append_parts(os, p.blues());
    os << '}';
    return os.str();
}

std::string describe(const OddOverpartition& p)
{
    std::ostringstream os;
    os << "{overlined:";
    append_parts(os, p.overlined());
    os << ",plain:";
    append_parts(os, p.plain());
    os << '}';
    return os.str();
}

} // namespace twocolor
