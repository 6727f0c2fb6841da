#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "twocolor/core.hpp"
#include "twocolor/io.hpp"

namespace twocolor {

// Pass/fail of each identity part at one n:
//   a  E = p_o
//   b  2 E0 = p_o + 2[n square]
//   c  2 E1 = p_o - 2[n square]
//   d  2 E2 = p_o + 2(-1)^n [n square]
//   e  2 E3 = p_o - 2(-1)^n [n square]
struct TheoremChecks {
    bool a = false;
    bool b = false;
    bool c = false;
    bool d = false;
    bool e = false;

    bool all() const noexcept { return a && b && c && d && e; }
};

struct IdentityReport {
    std::int64_t n = 0;
    std::int64_t E = 0;
    std::int64_t E0 = 0;
    std::int64_t E1 = 0;
    std::int64_t E2 = 0;
    std::int64_t E3 = 0;
    std::int64_t p_o_bar = 0;
    SquareWitness square;
    // n = 0: p_o(0)/2 is not an integer, so no part is judged.
    bool exempt = false;
    TheoremChecks checks;

    bool passed() const noexcept { return exempt || checks.all(); }
    // Comma-separated failing parts, e.g. "b,c"; empty when passing.
    std::string failing_parts() const;
};

// Counts by full enumeration of E(n) and of the odd overpartitions of n.
IdentityReport identity_report(std::int64_t n);

// Rows for n = 1..n_max in ascending order. Throws InvalidInput if n_max < 1.
std::vector<IdentityReport> verify_theorem(std::int64_t n_max);

bool all_passed(std::span<const IdentityReport> rows) noexcept;

enum class TableFormat : std::uint8_t { csv, json, markdown };

// csv header: n,E,E0,E1,E2,E3,p_o_bar,is_square,pass
std::string format_table(std::span<const IdentityReport> rows, TableFormat format);
Json to_json(const IdentityReport& r);

struct InvolutionAudit {
    std::int64_t n = 0;
    std::size_t members = 0;
    std::size_t orbits = 0;
    std::vector<TwoColorPartition> exceptional;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

// Applies transform to every non-exceptional element of E(n) and checks
// that it pairs E0 with E1 and E2 with E3 without fixed points, and that
// the exceptional elements are exactly the staircases of weight n.
InvolutionAudit verify_involution(std::int64_t n);

struct BijectionAudit {
    std::int64_t n = 0;
    std::size_t overpartitions = 0;
    std::size_t two_color = 0;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

// Round trips both ways, injectivity, and image == E(n) as sets.
BijectionAudit verify_bijection(std::int64_t n);

struct SeriesAudit {
    int depth = 0;
    int enumeration_limit = 0;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

// series_E against series_podd through q^depth, and both against the
// enumeration counts through q^min(depth, enumeration_limit).
SeriesAudit verify_series(int depth, int enumeration_limit);

} // namespace twocolor
