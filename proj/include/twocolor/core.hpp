#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace twocolor {

using Part = std::int64_t;
using Parts = std::vector<Part>;

// Upper bound on the weight of any partition value; keeps sums far from
// the 64-bit limit.
inline constexpr Part max_weight = 1'000'000;

enum class Parity : std::uint8_t { even, odd };

constexpr Parity parity_of(std::int64_t v) noexcept
{
    return (v % 2 == 0) ? Parity::even : Parity::odd;
}

const char* to_string(Parity p) noexcept;

// An element of E(n): distinct parts, each green or blue, even parts blue
// only. Blue parts are kept split by parity so that `evens` is the part of
// the partition that the two-modular diagram does not draw.
class TwoColorPartition {
public:
    TwoColorPartition() = default;

    // Throws InvalidPartition naming the broken invariant.
    TwoColorPartition(Parts evens, Parts greens, Parts blues);

    const Parts& evens() const noexcept { return evens_; }
    const Parts& greens() const noexcept { return greens_; }
    const Parts& blues() const noexcept { return blues_; }

    std::size_t part_count() const noexcept
    {
        return evens_.size() + greens_.size() + blues_.size();
    }
    bool empty() const noexcept { return part_count() == 0; }

    // Compares (evens, greens, blues) lexicographically.
    friend auto operator<=>(const TwoColorPartition&, const TwoColorPartition&) = default;
    friend bool operator==(const TwoColorPartition&, const TwoColorPartition&) = default;

private:
    Parts evens_;
    Parts greens_;
    Parts blues_;
};

// An overpartition into odd parts. The overlined parts are the first
// occurrences that carry a bar; `plain` holds all remaining copies.
class OddOverpartition {
public:
    OddOverpartition() = default;
    OddOverpartition(Parts overlined, Parts plain);

    const Parts& overlined() const noexcept { return overlined_; }
    const Parts& plain() const noexcept { return plain_; }

    friend auto operator<=>(const OddOverpartition&, const OddOverpartition&) = default;
    friend bool operator==(const OddOverpartition&, const OddOverpartition&) = default;

private:
    Parts overlined_;
    Parts plain_;
};

struct ParityClass {
    Parity evens_count;  // E0 when even, E1 when odd
    Parity total_parts;  // E2 when even, E3 when odd

    friend bool operator==(const ParityClass&, const ParityClass&) = default;
};

struct SquareWitness {
    bool is_square = false;
    std::int64_t root = 0;  // meaningful only when is_square

    friend bool operator==(const SquareWitness&, const SquareWitness&) = default;
};

std::int64_t weight(const Parts& parts);
std::int64_t weight(const TwoColorPartition& p);
std::int64_t weight(const OddOverpartition& p);

// Every element of E(n) exactly once, in descending lexicographic order of
// (evens, greens, blues).
std::vector<TwoColorPartition> enumerate_two_color(std::int64_t n);

// Every overpartition of n into odd parts, descending lexicographic order of
// (overlined, plain).
std::vector<OddOverpartition> enumerate_odd_overpartitions(std::int64_t n);

ParityClass classify(const TwoColorPartition& p) noexcept;

SquareWitness square_witness(std::int64_t n);

// Strictly decreasing, positive, all of the given parity.
bool is_distinct_descending(const Parts& parts, Parity parity) noexcept;

std::string describe(const TwoColorPartition& p);
std::string describe(const OddOverpartition& p);

} // namespace twocolor
