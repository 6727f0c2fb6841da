// twocolor: enumerate, map, transform, render and verify two-color
// partitions with even parts blue.
//
// Exit codes: 0 success, 1 failed verification, 2 usage or input error,
// 3 exceptional (staircase) partition given to `transform`.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "twocolor/core.hpp"
#include "twocolor/diagram.hpp"
#include "twocolor/error.hpp"
#include "twocolor/glaisher.hpp"
#include "twocolor/involution.hpp"
#include "twocolor/io.hpp"
#include "twocolor/verify.hpp"

namespace {

using namespace twocolor;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_exceptional = 3;

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidInput("cannot open input file " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InvalidInput("cannot open output file " + path);
    out << text;
}

RenderFormat parse_render_format(const std::string& s)
{
    return s == "svg" ? RenderFormat::svg : RenderFormat::ascii;
}

const char* render_extension(RenderFormat f)
{
    return f == RenderFormat::svg ? ".svg" : ".txt";
}

// ---- table ---------------------------------------------------------------

struct TableArgs {
    std::int64_t max_n = 0;
    std::string format = "csv";
    std::string out;
};

int run_table(const TableArgs& a)
{
    const auto rows = verify_theorem(a.max_n);
    TableFormat f = TableFormat::csv;
    if (a.format == "json")
        f = TableFormat::json;
    else if (a.format == "md")
        f = TableFormat::markdown;
    write_text(a.out, format_table(rows, f));
    return all_passed(rows) ? exit_ok : exit_failed;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
    std::int64_t max_n = 0;
    std::vector<std::string> checks;
    int series_depth = 0;
    bool series_depth_given = false;
};

template <typename Audit>
void print_failures(const std::vector<Audit>& audits, std::size_t& budget)
{
    for (const auto& audit : audits) {
        for (const auto& f : audit.failures) {
            if (budget == 0)
                return;
            std::cout << "  n=" << audit.n << ": " << f << '\n';
            --budget;
        }
    }
}

int run_verify(const VerifyArgs& a)
{
    if (a.max_n < 1)
        throw InvalidInput("--max-n must be at least 1");

    std::vector<std::string> checks = a.checks;
    if (checks.empty())
        checks = {"theorem", "involution", "bijection"};
    if (a.series_depth_given && std::ranges::find(checks, "series") == checks.end())
        checks.emplace_back("series");

    bool ok = true;
    for (const std::string& check : checks) {
        std::size_t budget = 20;
        if (check == "theorem") {
            const IdentityReport zero = identity_report(0);
            std::cout << "theorem     n=0: E=" << zero.E << " p_o_bar=" << zero.p_o_bar
                      << " (exempt)\n";
            const auto rows = verify_theorem(a.max_n);
            const bool pass = all_passed(rows);
            ok = ok && pass;
            std::cout << "theorem     n=1.." << a.max_n << ": " << (pass ? "pass" : "FAIL") << '\n';
            for (const auto& r : rows) {
                if (!r.passed() && budget-- > 0)
                    std::cout << "  n=" << r.n << ": parts " << r.failing_parts() << " fail\n";
            }
        } else if (check == "involution") {
            std::vector<InvolutionAudit> audits;
            std::size_t orbits = 0;
            std::size_t exceptional = 0;
            bool pass = true;
            for (std::int64_t n = 0; n <= a.max_n; ++n) {
                audits.push_back(verify_involution(n));
                orbits += audits.back().orbits;
                exceptional += audits.back().exceptional.size();
                pass = pass && audits.back().passed();
            }
            ok = ok && pass;
            std::cout << "involution  n=0.." << a.max_n << ": " << (pass ? "pass" : "FAIL")
                      << " (" << orbits << " orbits, " << exceptional << " exceptional)\n";
            print_failures(audits, budget);
        } else if (check == "bijection") {
            std::vector<BijectionAudit> audits;
            std::size_t pairs = 0;
            bool pass = true;
            for (std::int64_t n = 0; n <= a.max_n; ++n) {
                audits.push_back(verify_bijection(n));
                pairs += audits.back().overpartitions;
                pass = pass && audits.back().passed();
            }
            ok = ok && pass;
            std::cout << "bijection   n=0.." << a.max_n << ": " << (pass ? "pass" : "FAIL")
                      << " (" << pairs << " pairs)\n";
            print_failures(audits, budget);
        } else if (check == "series") {
            const int depth = a.series_depth_given ? a.series_depth : 200;
            const SeriesAudit audit = verify_series(depth, static_cast<int>(a.max_n));
            ok = ok && audit.passed();
            std::cout << "series      depth=" << depth << ", enumerated n<="
                      << std::min<std::int64_t>(depth, a.max_n) << ": "
                      << (audit.passed() ? "pass" : "FAIL") << '\n';
            for (const auto& f : audit.failures) {
                if (budget-- == 0)
                    break;
                std::cout << "  " << f << '\n';
            }
        }
    }
    std::cout << (ok ? "all checks passed" : "verification FAILED") << '\n';
    return ok ? exit_ok : exit_failed;
}

// ---- transform -----------------------------------------------------------

struct TransformArgs {
    std::string input;
    std::string out;
    std::string render;
    std::string render_prefix = "transform";
    bool unicode = false;
    bool result_only = false;
};

int run_transform(const TransformArgs& a)
{
    const TwoColorPartition p = two_color_from_json(parse_json_text(read_input(a.input)));
    TransformOutcome outcome;
    try {
        outcome = transform(p);
    } catch (const ExceptionalPartition& e) {
        std::cerr << "error: exceptional partition: " << e.what() << '\n';
        return exit_exceptional;
    }

    const Json j{{"input", to_json(p)},
                 {"result", to_json(outcome.result)},
                 {"strip",
                  {{"orientation", to_string(outcome.strip.orientation)},
                   {"length", outcome.strip.length},
                   {"position", outcome.strip.position},
                   {"action", to_string(outcome.strip.action)}}},
                 {"direction", to_string(outcome.direction)}};
    write_text(a.out, (a.result_only ? j["result"].dump() : j.dump(2)) + "\n");

    if (!a.render.empty()) {
        const RenderFormat f = parse_render_format(a.render);
        const RenderOptions opts{a.unicode};
        const auto draw = [&](const TwoColorPartition& x) {
            return render(merge_adjoined(build_diagram(x.greens(), x.blues())), f, opts);
        };
        write_text(a.render_prefix + ".before" + render_extension(f), draw(p));
        write_text(a.render_prefix + ".after" + render_extension(f), draw(outcome.result));
    }
    return exit_ok;
}

// ---- map -----------------------------------------------------------------

struct MapArgs {
    std::string direction;
    std::string input;
    std::string out;
};

int run_map(const MapArgs& a)
{
    const Json in = parse_json_text(read_input(a.input));
    Json result;
    if (a.direction == "to-two-color")
        result = to_json(overpartition_to_twocolor(overpartition_from_json(in)));
    else
        result = to_json(twocolor_to_overpartition(two_color_from_json(in)));
    write_text(a.out, result.dump() + "\n");
    return exit_ok;
}

// ---- render --------------------------------------------------------------

struct RenderArgs {
    std::string input;
    std::string out;
    std::string format = "ascii";
    bool unicode = false;
    bool merged = false;
};

int run_render(const RenderArgs& a)
{
    const TwoColorPartition p = two_color_from_json(parse_json_text(read_input(a.input)));
    ModularDiagram dia = build_diagram(p.greens(), p.blues());
    if (a.merged)
        dia = merge_adjoined(dia);
    write_text(a.out, render(dia, parse_render_format(a.format), RenderOptions{a.unicode}));
    return exit_ok;
}

// ---- enumerate -----------------------------------------------------------

struct EnumerateArgs {
    std::int64_t n = 0;
    std::string cls = "all";
    std::string out;
};

int run_enumerate(const EnumerateArgs& a)
{
    std::ostringstream os;
    std::size_t count = 0;
    if (a.cls == "podd") {
        for (const auto& op : enumerate_odd_overpartitions(a.n)) {
            os << to_json(op).dump() << '\n';
            ++count;
        }
    } else {
        for (const auto& p : enumerate_two_color(a.n)) {
            const ParityClass c = classify(p);
            const bool keep = a.cls == "all"
                              || (a.cls == "E0" && c.evens_count == Parity::even)
                              || (a.cls == "E1" && c.evens_count == Parity::odd)
                              || (a.cls == "E2" && c.total_parts == Parity::even)
                              || (a.cls == "E3" && c.total_parts == Parity::odd);
            if (!keep)
                continue;
            os << to_json(p).dump() << '\n';
            ++count;
        }
    }
    os << "count " << count << '\n';
    write_text(a.out, os.str());
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Two-color partitions, odd overpartitions and two-modular diagrams"};
    app.require_subcommand(1);

    TableArgs table;
    auto* table_cmd = app.add_subcommand("table", "Per-n identity table from full enumeration");
    table_cmd->add_option("--max-n", table.max_n, "Largest n")->required()->check(CLI::Range(1, 1000));
    table_cmd->add_option("--format", table.format, "csv, json or md")
        ->check(CLI::IsMember({"csv", "json", "md"}));
    table_cmd->add_option("--out", table.out, "Output file (default stdout)");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run identity, involution, bijection and series audits");
    verify_cmd->add_option("--max-n", verify.max_n, "Largest n")->required()->check(CLI::Range(1, 1000));
    verify_cmd->add_option("--checks", verify.checks, "theorem, involution, bijection, series")
        ->delimiter(',')
        ->check(CLI::IsMember({"theorem", "involution", "bijection", "series"}));
    auto* depth_opt = verify_cmd->add_option("--series-depth", verify.series_depth,
                                             "Truncation order of the series cross-check")
                          ->check(CLI::Range(0, 100000));

    TransformArgs transform_args;
    auto* transform_cmd = app.add_subcommand("transform", "Apply the involution to a partition");
    transform_cmd->add_option("--input", transform_args.input, "Partition JSON (default stdin)");
    transform_cmd->add_option("--out", transform_args.out, "Output file (default stdout)");
    transform_cmd->add_option("--render", transform_args.render, "Also write before/after diagrams")
        ->check(CLI::IsMember({"ascii", "svg"}));
    transform_cmd->add_option("--render-prefix", transform_args.render_prefix,
                              "Path prefix for the rendered diagrams");
    transform_cmd->add_flag("--unicode", transform_args.unicode, "Unicode glyphs for ascii renders");
    transform_cmd->add_flag("--result-only", transform_args.result_only,
                            "Print only the image partition, ready to feed back in");

    MapArgs map;
    auto* map_cmd = app.add_subcommand("map", "Odd overpartition <-> two-color partition");
    map_cmd->add_option("--direction", map.direction, "to-two-color or to-overpartition")
        ->required()
        ->check(CLI::IsMember({"to-two-color", "to-overpartition"}));
    map_cmd->add_option("--input", map.input, "JSON input (default stdin)");
    map_cmd->add_option("--out", map.out, "Output file (default stdout)");

    RenderArgs render_args;
    auto* render_cmd = app.add_subcommand("render", "Draw the two-modular diagram of a partition");
    render_cmd->add_option("--input", render_args.input, "Partition JSON (default stdin)");
    render_cmd->add_option("--out", render_args.out, "Output file (default stdout)");
    render_cmd->add_option("--format", render_args.format, "ascii or svg")
        ->check(CLI::IsMember({"ascii", "svg"}));
    render_cmd->add_flag("--unicode", render_args.unicode, "Unicode glyphs for ascii output");
    render_cmd->add_flag("--merged", render_args.merged, "Merge adjoined triangles first");

    EnumerateArgs enumerate;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List E(n) or the odd overpartitions of n");
    enumerate_cmd->add_option("--n", enumerate.n, "Weight")->required()->check(CLI::Range(0, 200));
    enumerate_cmd->add_option("--class", enumerate.cls, "all, E0, E1, E2, E3 or podd")
        ->check(CLI::IsMember({"all", "E0", "E1", "E2", "E3", "podd"}));
    enumerate_cmd->add_option("--out", enumerate.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*table_cmd)
            return run_table(table);
        if (*verify_cmd) {
            verify.series_depth_given = depth_opt->count() > 0;
            return run_verify(verify);
        }
        if (*transform_cmd)
            return run_transform(transform_args);
        if (*map_cmd)
            return run_map(map);
        if (*render_cmd)
            return run_render(render_args);
        if (*enumerate_cmd)
            return run_enumerate(enumerate);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_usage;
}
