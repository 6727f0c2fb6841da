#pragma once

// Brute-force counterparts of the library enumerators. They share no code
// with src/ beyond the value types, so agreement is an independent check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "twocolor/core.hpp"

namespace oracle {

using twocolor::OddOverpartition;
using twocolor::Part;
using twocolor::Parts;
using twocolor::TwoColorPartition;

// Every subset of the items {k blue : 1<=k<=n} u {k green : k odd <= n}
// whose values sum to n. Exponential; keep n small.
inline std::set<TwoColorPartition> two_color_by_subsets(int n)
{
    struct Item {
        Part value;
        bool green;
    };
    std::vector<Item> items;
    for (Part k = n; k >= 1; --k) {
        items.push_back({k, false});
        if (k % 2 == 1)
            items.push_back({k, true});
    }
    std::set<TwoColorPartition> out;
    const std::uint64_t masks = std::uint64_t{1} << items.size();
    for (std::uint64_t m = 0; m < masks; ++m) {
        Part sum = 0;
        for (std::size_t i = 0; i < items.size() && sum <= n; ++i)
            if (m >> i & 1)
                sum += items[i].value;
        if (sum != n)
            continue;
        Parts e, g, b;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (!(m >> i & 1))
                continue;
            const Item& it = items[i];
            (it.green ? g : (it.value % 2 == 0 ? e : b)).push_back(it.value);
        }
        out.emplace(e, g, b);
    }
    return out;
}

// All weakly decreasing sequences of positive integers summing to n.
inline std::vector<Parts> partitions(int n)
{
    std::vector<Parts> out;
    Parts cur;
    std::function<void(int, int)> go = [&](int rem, int cap) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            go(rem - p, p);
            cur.pop_back();
        }
    };
    go(n, n);
    return out;
}

// For each partition of n into odd parts, every way of barring one copy of
// each distinct value.
inline std::set<OddOverpartition> odd_overpartitions(int n)
{
    std::set<OddOverpartition> out;
    for (const Parts& p : partitions(n)) {
        bool all_odd = true;
        for (Part v : p)
            all_odd = all_odd && v % 2 == 1;
        if (!all_odd)
            continue;
        Parts distinct;
        for (Part v : p)
            if (distinct.empty() || distinct.back() != v)
                distinct.push_back(v);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << distinct.size()); ++m) {
            Parts bar, plain = p;
            for (std::size_t i = 0; i < distinct.size(); ++i) {
                if (!(m >> i & 1))
                    continue;
                bar.push_back(distinct[i]);
                plain.erase(std::find(plain.begin(), plain.end(), distinct[i]));
            }
            out.emplace(bar, plain);
        }
    }
    return out;
}

// |E(n)| = p_o(n) for n = 0..40, from a standalone Python subset-sum
// enumeration and a separate series expansion (both agreed).
inline constexpr std::int64_t frozen_counts[] = {
    1,    2,    2,    4,    6,    8,    12,   16,   22,   30,   40,   52,   68,   88,
    112,  144,  182,  228,  286,  356,  440,  544,  668,  816,  996,  1210, 1464, 1768,
    2128, 2552, 3056, 3648, 4342, 5160, 6116, 7232, 8538, 10056, 11820, 13872, 16248,
};

// Coefficient of q^200 in prod (1+q^(2k-1))/(1-q^(2k-1)), same Python run.
inline constexpr std::int64_t frozen_podd_200 = 171950973438;

} // namespace oracle
