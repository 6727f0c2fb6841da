#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include "twocolor/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path scratch()
{
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("twocolor_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::string& text)
{
    std::ofstream(p, std::ios::binary) << text;
}

Run run(const std::string& args, const std::string& stdin_text = "")
{
    const fs::path in = scratch() / "stdin";
    const fs::path out = scratch() / "stdout";
    const fs::path err = scratch() / "stderr";
    spit(in, stdin_text);
    const std::string cmd = std::string("'") + TWOCOLOR_CLI + "' " + args + " < '" + in.string()
                            + "' > '" + out.string() + "' 2> '" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    Run r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::size_t lines(const std::string& s)
{
    return static_cast<std::size_t>(std::ranges::count(s, '\n'));
}

const std::string first_example = R"({"evens":[12,6],"greens":[13,9,5,3],"blues":[5,1]})";

} // namespace

TEST_CASE("table")
{
    const Run five = run("table --max-n 5 --format csv");
    CHECK(five.exit_code == 0);
    CHECK(lines(five.out) == 6);
    CHECK(five.out.find("5,8,4,4,4,4,8,false,true") != std::string::npos);

    const Run one = run("table --max-n 1");
    CHECK(one.exit_code == 0);
    CHECK(lines(one.out) == 2);

    CHECK(run("table --max-n 5 --format xml").exit_code == 2);
    CHECK(run("table --max-n 0").exit_code == 2);

    const Run md = run("table --max-n 3 --format md");
    CHECK(md.out.rfind("| n |", 0) == 0);
    const Run js = run("table --max-n 3 --format json");
    CHECK(twocolor::Json::parse(js.out).size() == 3);
}

TEST_CASE("verify")
{
    const Run ok = run("verify --max-n 20");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("all checks passed") != std::string::npos);
    CHECK(ok.out.find("series") == std::string::npos);

    CHECK(run("verify --max-n 0").exit_code == 2);
    CHECK(run("verify").exit_code == 2);
    CHECK(run("verify --max-n 5 --checks nonsense").exit_code == 2);

    const Run series = run("verify --max-n 20 --series-depth 100");
    CHECK(series.exit_code == 0);
    CHECK(series.out.find("series      depth=100") != std::string::npos);

    const Run only = run("verify --max-n 4 --checks bijection");
    CHECK(only.exit_code == 0);
    CHECK(only.out.find("theorem") == std::string::npos);
    CHECK(only.out.find("bijection") != std::string::npos);
}

TEST_CASE("transform")
{
    const Run r = run("transform", first_example);
    CHECK(r.exit_code == 0);
    const twocolor::Json j = twocolor::Json::parse(r.out);
    CHECK(j["result"].dump() == R"({"evens":[6],"greens":[15,11,7,5],"blues":[7,3]})");
    CHECK(j["strip"]["action"] == "inserted");
    CHECK(j["direction"] == "evens_shrank");

    const Run stairs = run("transform", R"({"greens":[5,3,1]})");
    CHECK(stairs.exit_code == 3);
    CHECK(stairs.err.find("5+3+1") != std::string::npos);

    const Run there = run("transform --result-only", first_example);
    const Run back = run("transform --result-only", there.out);
    CHECK(back.exit_code == 0);
    CHECK(back.out == first_example + "\n");

    const fs::path input = scratch() / "ex.json";
    spit(input, first_example);
    const fs::path prefix = scratch() / "ex";
    const Run rendered = run("transform --input '" + input.string() + "' --render svg --render-prefix '"
                             + prefix.string() + "'");
    CHECK(rendered.exit_code == 0);
    CHECK(slurp(prefix.string() + ".before.svg").rfind("<svg", 0) == 0);
    CHECK(slurp(prefix.string() + ".after.svg").rfind("<svg", 0) == 0);

    CHECK(run("transform", R"({"greens":[4]})").exit_code == 2);
    CHECK(run("transform", "not json").exit_code == 2);
    CHECK(run("transform --input /nonexistent/file.json").exit_code == 2);
}

TEST_CASE("map")
{
    const Run a = run("map --direction to-two-color", R"({"overlined":[3],"plain":[3,1,1]})");
    CHECK(a.exit_code == 0);
    CHECK(a.out == "{\"evens\":[2],\"greens\":[3],\"blues\":[3]}\n");

    const Run b = run("map --direction to-overpartition", R"({"evens":[4],"blues":[1]})");
    CHECK(b.out == "{\"overlined\":[],\"plain\":[1,1,1,1,1]}\n");

    const Run empty = run("map --direction to-overpartition", "{}");
    CHECK(empty.out == "{\"overlined\":[],\"plain\":[]}\n");

    CHECK(run("map --direction sideways", "{}").exit_code == 2);
    CHECK(run("map --direction to-two-color", R"({"overlined":[2]})").exit_code == 2);
}

TEST_CASE("render and enumerate")
{
    const Run ascii = run("render", first_example);
    CHECK(ascii.exit_code == 0);
    CHECK(lines(ascii.out) == 5);
    const Run svg = run("render --format svg", first_example);
    CHECK(svg.out.find("viewBox=\"0 0 224 160\"") != std::string::npos);

    const Run four = run("enumerate --n 4");
    CHECK(four.exit_code == 0);
    CHECK(lines(four.out) == 7);
    CHECK(four.out.ends_with("count 6\n"));

    const Run zero = run("enumerate --n 0");
    CHECK(zero.out == "{\"evens\":[],\"greens\":[],\"blues\":[]}\ncount 1\n");

    CHECK(run("enumerate --n 9 --class E0").out.ends_with("count 16\n"));
    CHECK(run("enumerate --n 9 --class E1").out.ends_with("count 14\n"));
    CHECK(run("enumerate --n 3 --class podd").out.ends_with("count 4\n"));
    CHECK(run("enumerate --n 3 --class E9").exit_code == 2);
}

TEST_CASE("output is deterministic")
{
    CHECK(run("table --max-n 12 --format json").out == run("table --max-n 12 --format json").out);
    CHECK(run("enumerate --n 10").out == run("enumerate --n 10").out);
    CHECK(run("render --format svg", first_example).out
          == run("render --format svg", first_example).out);
}
