#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oredango/cli.hpp"
#include "support/test_support.hpp"

using oredango::testing::fixture_path;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = {}) {
    std::istringstream in(stdin_text);
    auto* saved = std::cin.rdbuf(in.rdbuf());
    std::ostringstream out, err;
    const int code = oredango::cli::run(args, out, err);
    std::cin.rdbuf(saved);
    return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return fixture_path(name); }

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "oredango_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void put(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("validate", "[cli]") {
    auto r = run({"validate", fx("sample.odg")});
    CHECK(r.code == 0);
    CHECK(r.out == "VALID rows=4 cols=4 circles=13 skewers=4 clued=4\n");

    const auto bad = scratch("bad.odg");
    put(bad, "rows 1\ncols 3\ncircle 1 1\ncircle 1 3\nskewer 1 1 1 3\n");
    r = run({"validate", bad.string()});
    CHECK(r.code == 1);
    CHECK(r.out == "INVALID\n");
    CHECK(r.err.find("line 5") != std::string::npos);

    put(bad, "rows 1\ncols x\n");
    r = run({"validate", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
}

TEST_CASE("solve prints a valid sample grid", "[cli]") {
    const auto r = run({"solve", fx("sample.odg")});
    CHECK(r.code == 0);
    CHECK(r.out == "WBBW\nW.B.\nBW.B\nBBWB\n");
    CHECK(r.err.find("nodes=") != std::string::npos);
}

TEST_CASE("solve output piped into check is clean", "[cli]") {
    const auto solved = run({"solve", fx("sample.odg")});
    const auto checked = run({"check", fx("sample.odg"), "-"}, solved.out);
    CHECK(checked.code == 0);
    CHECK(checked.out == "OK\n");
}

TEST_CASE("check lists wrong-answer violations", "[cli]") {
    auto r = run({"check", fx("sample.odg"), fx("sample-wrong-ab.sol")});
    CHECK(r.code == 1);
    CHECK(r.out ==
          "rule A skewer 2: (1,4) (2,3) (3,4) (4,3) (4,2) (3,1) black=3 required=4\n"
          "rule B skewer 1 window 2: (1,2) (2,1) (3,2) black=3 required=1..2\n");
    r = run({"check", fx("sample.odg"), fx("sample-wrong-cd.sol")});
    CHECK(r.code == 1);
    CHECK(r.out ==
          "rule C row 3 window 1: (3,1) (3,2) (3,4) black=0 required=1..2\n"
          "rule C row 4 window 1: (4,1) (4,2) (4,3) black=3 required=1..2\n"
          "rule C row 4 window 2: (4,2) (4,3) (4,4) black=3 required=1..2\n"
          "rule D col 3 window 1: (1,3) (2,3) (4,3) black=3 required=1..2\n");
    r = run({"check", fx("sample.odg"), fx("sample.sol")});
    CHECK(r.code == 0);
    CHECK(r.out == "OK\n");
}

TEST_CASE("solve --all, --count and --limit", "[cli]") {
    auto r = run({"solve", "--all", fx("key.odg")});
    CHECK(r.code == 0);
    CHECK(r.out == "BWB\nBWB\n\nWBB\nWBB\n");
    r = run({"solve", "--count", fx("sample.odg")});
    CHECK(r.out == "4\n");
    r = run({"solve", "--count", "--limit", "2", fx("sample.odg")});
    CHECK(r.code == 0);
    CHECK(r.out == ">=2\n");
    r = run({"solve", "--all", "--limit", "1", fx("key.odg")});
    CHECK(r.out == "BWB\nBWB\n");
    r = run({"solve", "--all", "--count", fx("key.odg")});
    CHECK(r.code == 2);
}

TEST_CASE("unsatisfiable boards", "[cli]") {
    const auto unsat = scratch("unsat.odg");
    put(unsat, "rows 1\ncols 3\ncircle 1 1 1\ncircle 1 2 1\ncircle 1 3 1\n");
    auto r = run({"solve", unsat.string()});
    CHECK(r.code == 1);
    CHECK(r.out == "UNSAT\n");
    r = run({"solve", "--count", unsat.string()});
    CHECK(r.code == 1);
    CHECK(r.out == "0\n");
    r = run({"another", unsat.string()});
    CHECK(r.code == 1);
    CHECK(r.out == "NONE\n");
}

TEST_CASE("another on the key pattern", "[cli]") {
    auto r = run({"another", fx("key.odg"), fx("key-a.sol")});
    CHECK(r.code == 0);
    CHECK(r.out == "WBB\nWBB\n");
    r = run({"another", fx("key.odg"), fx("key-a.sol"), fx("key-b.sol")});
    CHECK(r.code == 1);
    CHECK(r.out == "NONE\n");
    r = run({"another", fx("key.odg")});
    CHECK(r.code == 0);
    CHECK(r.out == "BWB\nBWB\n");
    r = run({"another", fx("sample.odg"), fx("sample-wrong-ab.sol")});
    CHECK(r.code == 2);
}

TEST_CASE("lp writes the model", "[cli]") {
    auto r = run({"lp", fx("sample.odg")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("\\ ", 0) == 0);
    CHECK(r.out.find("Subject To\n") != std::string::npos);
    const auto path = scratch("sample.lp");
    r = run({"lp", fx("sample.odg"), "-o", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path) == run({"lp", fx("sample.odg")}).out);
}

TEST_CASE("reduce writes board and map", "[cli]") {
    const auto board = scratch("example.odg");
    const auto map = scratch("example.map");
    auto r = run({"reduce", fx("example.c13"), "-o", board.string(), "--map", map.string()});
    CHECK(r.code == 0);
    CHECK(slurp(map).find("var 1 1 2\n") != std::string::npos);
    r = run({"solve", "--count", board.string()});
    CHECK(r.out == "1\n");
    r = run({"validate", board.string()});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("VALID rows=14 cols=17 ", 0) == 0);
}

TEST_CASE("verify-reduction", "[cli]") {
    auto r = run({"verify-reduction", fx("example.c13")});
    CHECK(r.code == 0);
    CHECK(r.out == "PASS puzzle=1 assignments=1\n");
    const auto bad = scratch("absent.c13");
    put(bad, "p 1in3 4 1\n1 2 3 0\n");
    r = run({"verify-reduction", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("usage errors exit 2", "[cli]") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    auto r = run({"solve", "--bogus", fx("sample.odg")});
    CHECK(r.code == 2);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run({"solve", "/nonexistent/board.odg"}).code == 2);
    CHECK(run({"solve", "--limit", "0", fx("sample.odg")}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("--time reports milliseconds on stderr only", "[cli]") {
    const auto plain = run({"solve", fx("sample.odg")});
    const auto timed = run({"solve", "--time", fx("sample.odg")});
    CHECK(timed.code == 0);
    CHECK(timed.out == plain.out);
    CHECK(timed.err.find("time_ms=") != std::string::npos);
    CHECK(plain.err.find("time_ms=") == std::string::npos);
}
