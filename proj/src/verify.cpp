#include "twocolor/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "twocolor/error.hpp"
#include "twocolor/glaisher.hpp"
#include "twocolor/involution.hpp"
#include "twocolor/series.hpp"

namespace twocolor {

std::string IdentityReport::failing_parts() const
{
    if (exempt)
        return {};
    std::string out;
    auto add = [&](bool ok, const char* name) {
        if (!ok)
            out += (out.empty() ? "" : ",") + std::string(name);
    };
    add(checks.a, "a");
    add(checks.b, "b");
    add(checks.c, "c");
    add(checks.d, "d");
    add(checks.e, "e");
    return out;
}

IdentityReport identity_report(std::int64_t n)
{
    IdentityReport r;
    r.n = n;
    for (const TwoColorPartition& p : enumerate_two_color(n)) {
        const ParityClass cls = classify(p);
        ++r.E;
        ++(cls.evens_count == Parity::even ? r.E0 : r.E1);
        ++(cls.total_parts == Parity::even ? r.E2 : r.E3);
    }
    r.p_o_bar = static_cast<std::int64_t>(enumerate_odd_overpartitions(n).size());
    r.square = square_witness(n);
    r.exempt = n == 0;

    const std::int64_t sq = r.square.is_square ? 2 : 0;
    const std::int64_t sign = n % 2 == 0 ? 1 : -1;
    r.checks.a = r.E == r.p_o_bar;
    r.checks.b = 2 * r.E0 == r.p_o_bar + sq;
    r.checks.c = 2 * r.E1 == r.p_o_bar - sq;
    r.checks.d = 2 * r.E2 == r.p_o_bar + sign * sq;
    r.checks.e = 2 * r.E3 == r.p_o_bar - sign * sq;
    return r;
}

std::vector<IdentityReport> verify_theorem(std::int64_t n_max)
{
    if (n_max < 1)
        throw InvalidInput("verify_theorem: n_max must be at least 1");
    std::vector<IdentityReport> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    for (std::int64_t n = 1; n <= n_max; ++n)
        rows.push_back(identity_report(n));
    return rows;
}

bool all_passed(std::span<const IdentityReport> rows) noexcept
{
    return std::ranges::all_of(rows, [](const IdentityReport& r) { return r.passed(); });
}

Json to_json(const IdentityReport& r)
{
    Json checks = Json::object();
    if (!r.exempt) {
        checks["a"] = r.checks.a;
        checks["b"] = r.checks.b;
        checks["c"] = r.checks.c;
        checks["d"] = r.checks.d;
        checks["e"] = r.checks.e;
    }
    Json square{{"is_square", r.square.is_square}};
    if (r.square.is_square)
        square["k"] = r.square.root;
    return Json{{"n", r.n},   {"E", r.E},   {"E0", r.E0},           {"E1", r.E1},
                {"E2", r.E2}, {"E3", r.E3}, {"p_o_bar", r.p_o_bar}, {"square", square},
                {"exempt", r.exempt}, {"checks", checks}, {"pass", r.passed()}};
}

std::string format_table(std::span<const IdentityReport> rows, TableFormat format)
{
    std::ostringstream os;
    switch (format) {
    case TableFormat::csv:
        os << "n,E,E0,E1,E2,E3,p_o_bar,is_square,pass\n";
        for (const auto& r : rows) {
            os << r.n << ',' << r.E << ',' << r.E0 << ',' << r.E1 << ',' << r.E2 << ','
               << r.E3 << ',' << r.p_o_bar << ',' << (r.square.is_square ? "true" : "false")
               << ',' << (r.passed() ? "true" : "false") << '\n';
        }
        break;
    case TableFormat::json: {
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back(to_json(r));
        os << arr.dump(2) << '\n';
        break;
    }
    case TableFormat::markdown:
        os << "| n | E | E0 | E1 | E2 | E3 | p_o_bar | square | pass |\n";
        os << "|---:|---:|---:|---:|---:|---:|---:|:---:|:---:|\n";
        for (const auto& r : rows) {
            os << "| " << r.n << " | " << r.E << " | " << r.E0 << " | " << r.E1 << " | "
               << r.E2 << " | " << r.E3 << " | " << r.p_o_bar << " | ";
            if (r.square.is_square)
                os << r.square.root << "^2";
            os << " | ";
            if (r.exempt)
                os << "exempt";
            else
                os << (r.passed() ? "yes" : "no (" + r.failing_parts() + ")");
            os << " |\n";
        }
        break;
    }
    return os.str();
}

InvolutionAudit verify_involution(std::int64_t n)
{
    InvolutionAudit audit;
    audit.n = n;
    const std::vector<TwoColorPartition> members = enumerate_two_color(n);
    audit.members = members.size();

    auto fail = [&](const TwoColorPartition& p, const std::string& what) {
        audit.failures.push_back(describe(p) + ": " + what);
    };

    for (const TwoColorPartition& p : members) {
        if (is_exceptional(p)) {
            audit.exceptional.push_back(p);
            continue;
        }
        try {
            const TransformOutcome once = transform(p);
            const TwoColorPartition& q = once.result;
            if (q == p) {
                fail(p, "fixed point");
                continue;
            }
            if (weight(q) != n)
                fail(p, "weight not preserved");
            const ParityClass before = classify(p);
            const ParityClass after = classify(q);
            if (before.evens_count == after.evens_count)
                fail(p, "parity of the even-part count did not flip (E0/E1 pairing)");
            if (before.total_parts == after.total_parts)
                fail(p, "parity of the part count did not flip (E2/E3 pairing)");
            const auto balance = [](const TwoColorPartition& x) {
                return static_cast<std::int64_t>(x.greens().size())
                       - static_cast<std::int64_t>(x.blues().size());
            };
            if (balance(p) != balance(q))
                fail(p, "|greens|-|blues| changed");
            if (is_exceptional(q)) {
                fail(p, "image " + describe(q) + " is exceptional");
                continue;
            }
            if (transform(q).result != p)
                fail(p, "T(T(p)) != p");
            if (p < q)
                ++audit.orbits;
        } catch (const std::exception& e) {
            fail(p, std::string("transform threw: ") + e.what());
        }
    }

    const SquareWitness sq = square_witness(n);
    if (n == 0) {
        if (audit.exceptional.size() != 1)
            audit.failures.push_back("n=0: expected only the empty partition to be exceptional");
    } else if (!sq.is_square) {
        if (!audit.exceptional.empty())
            audit.failures.push_back("n=" + std::to_string(n)
                                     + " is not a square but has exceptional members");
    } else {
        const auto k = static_cast<std::size_t>(sq.root);
        const bool census = audit.exceptional.size() == 2
                            && std::ranges::all_of(audit.exceptional, [k](const auto& p) {
                                   return p.part_count() == k && p.evens().empty();
                               });
        if (!census)
            audit.failures.push_back("n=" + std::to_string(n)
                                     + ": expected exactly the two staircases with "
                                     + std::to_string(k) + " parts");
    }
    if (2 * audit.orbits + audit.exceptional.size() != audit.members && audit.failures.empty())
        audit.failures.push_back("orbits do not cover E(n)");
    return audit;
}

BijectionAudit verify_bijection(std::int64_t n)
{
    BijectionAudit audit;
    audit.n = n;
    const std::vector<OddOverpartition> over = enumerate_odd_overpartitions(n);
    const std::vector<TwoColorPartition> two = enumerate_two_color(n);
    audit.overpartitions = over.size();
    audit.two_color = two.size();

    std::set<TwoColorPartition> image;
    for (const OddOverpartition& op : over) {
        try {
            const TwoColorPartition p = overpartition_to_twocolor(op);
            if (weight(p) != n)
                audit.failures.push_back(describe(op) + ": weight not preserved");
            if (twocolor_to_overpartition(p) != op)
                audit.failures.push_back(describe(op) + ": round trip failed");
            if (!image.insert(p).second)
                audit.failures.push_back(describe(op) + ": image " + describe(p)
                                         + " already hit");
        } catch (const std::exception& e) {
            audit.failures.push_back(describe(op) + ": " + e.what());
        }
    }

    const std::set<TwoColorPartition> target(two.begin(), two.end());
    if (image != target)
        audit.failures.push_back("image differs from E(" + std::to_string(n) + ")");
    for (const TwoColorPartition& p : two) {
        try {
            if (overpartition_to_twocolor(twocolor_to_overpartition(p)) != p)
                audit.failures.push_back(describe(p) + ": inverse round trip failed");
        } catch (const std::exception& e) {
            audit.failures.push_back(describe(p) + ": " + e.what());
        }
    }
    return audit;
}

SeriesAudit verify_series(int depth, int enumeration_limit)
{
    SeriesAudit audit;
    audit.depth = depth;
    audit.enumeration_limit = enumeration_limit;
    if (depth < 0 || enumeration_limit < 0)
        throw InvalidInput("verify_series: depth and enumeration limit must be nonnegative");

    const PowerSeries e = series_E(depth);
    const PowerSeries p = series_podd(depth);
    for (int n = 0; n <= depth; ++n) {
        if (e[n] != p[n])
            audit.failures.push_back("q^" + std::to_string(n) + ": series_E " + std::to_string(e[n])
                                     + " != series_podd " + std::to_string(p[n]));
    }
    for (int n = 0; n <= std::min(depth, enumeration_limit); ++n) {
        const auto counted = static_cast<std::int64_t>(enumerate_two_color(n).size());
        const auto over = static_cast<std::int64_t>(enumerate_odd_overpartitions(n).size());
        if (counted != e[n])
            audit.failures.push_back("n=" + std::to_string(n) + ": |E(n)| " + std::to_string(counted)
                                     + " != series_E " + std::to_string(e[n]));
        if (over != p[n])
            audit.failures.push_back("n=" + std::to_string(n) + ": p_o(n) " + std::to_string(over)
                                     + " != series_podd " + std::to_string(p[n]));
    }
    return audit;
}

} // namespace twocolor
