#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "grseries/cli.hpp"
#include "grseries/io.hpp"

using namespace grseries;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("grseries_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    fs::path file(const std::string& name) const { return dir / name; }
};

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kSingleGeneric = R"({
  "model": {"rank": 1, "form": [2], "kappa": [0], "grading": [1]},
  "table": {
    "generic": [{"class": [1], "counts": {"0": 3, "1": 5}}],
    "exceptional": [],
    "tori": []
  }
}
)";

}  // namespace

TEST_CASE("build gt golden output") {
    TempDir tmp;
    write_file(tmp.file("in.json"), kSingleGeneric);
    const int rc = run_cli({"build", "gt", "--input", tmp.file("in.json").string(), "--order", "1",
                            "--s-order", "1", "--out", tmp.file("out.txt").string()});
    CHECK(rc == 0);
    CHECK(read_file(tmp.file("out.txt")) ==
          "1\n"
          "3 * t[1]\n"
          "5 * t[1] * s^1\n"
          "--\n"
          "Gr_0[1] = 5\n"
          "Gr_1[1] = 3\n");
}

TEST_CASE("build rt json output matches gt for a generic-only table") {
    TempDir tmp;
    write_file(tmp.file("in.json"), kSingleGeneric);
    const int rc_gt = run_cli({"build", "gt", "--input", tmp.file("in.json").string(), "--order",
                               "1", "--s-order", "1", "--format", "json", "--out",
                               tmp.file("gt.json").string()});
    const int rc_rt = run_cli({"build", "rt", "--input", tmp.file("in.json").string(), "--order",
                               "1", "--s-order", "1", "--format", "json", "--out",
                               tmp.file("rt.json").string()});
    CHECK(rc_gt == 0);
    CHECK(rc_rt == 0);
    const auto gt = nlohmann::json::parse(read_file(tmp.file("gt.json")));
    const auto rt = nlohmann::json::parse(read_file(tmp.file("rt.json")));
    CHECK(gt["series"] == rt["series"]);
    CHECK(gt["expansion"] == rt["expansion"]);
    CHECK(gt["series"]["terms"].size() == 3);
}

TEST_CASE("build on the empty table emits the unit series") {
    TempDir tmp;
    write_file(tmp.file("in.json"), R"({
  "model": {"rank": 1, "form": [2], "kappa": [0], "grading": [1]},
  "table": {"generic": [], "exceptional": [], "tori": []}
})");
    const int rc = run_cli({"build", "gt", "--input", tmp.file("in.json").string(), "--out",
                            tmp.file("out.txt").string()});
    CHECK(rc == 0);
    CHECK(read_file(tmp.file("out.txt")) == "1\n--\n");
}

TEST_CASE("schema violations exit with code 2") {
    TempDir tmp;
    // kappa has the wrong length
    write_file(tmp.file("bad.json"), R"({
  "model": {"rank": 2, "form": [0,1,1,0], "kappa": [0], "grading": [1,1]},
  "table": {"generic": [], "exceptional": [], "tori": []}
})");
    CHECK(run_cli({"build", "gt", "--input", tmp.file("bad.json").string()}) == 2);

    write_file(tmp.file("bad2.json"), "{ not json");
    CHECK(run_cli({"build", "gt", "--input", tmp.file("bad2.json").string()}) == 2);

    CHECK(run_cli({"build", "gt", "--input", (tmp.dir / "missing.json").string()}) == 2);

    // torus listed on a non-toroidal class
    write_file(tmp.file("bad3.json"), R"({
  "model": {"rank": 1, "form": [2], "kappa": [0], "grading": [1]},
  "table": {"generic": [], "exceptional": [], "tori": [{"class": [1], "sign": 1, "type": 0}]}
})");
    CHECK(run_cli({"build", "gt", "--input", tmp.file("bad3.json").string()}) == 2);
}

TEST_CASE("verify subcommands succeed") {
    TempDir tmp;
    CHECK(run_cli({"verify", "lattice-census", "--max-m", "40", "--out",
                   tmp.file("census.txt").string()}) == 0);
    CHECK(run_cli({"verify", "genfunc", "--order", "12", "--out",
                   tmp.file("genfunc.txt").string()}) == 0);
    CHECK(run_cli({"verify", "phi", "--order", "10", "--out", tmp.file("phi.txt").string()}) == 0);

    write_file(tmp.file("in.json"), kSingleGeneric);
    CHECK(run_cli({"verify", "theorem", "--input", tmp.file("in.json").string(), "--order", "4",
                   "--s-order", "4", "--out", tmp.file("thm.txt").string()}) == 0);
    const std::string report = read_file(tmp.file("thm.txt"));
    CHECK(report.find("PASS") != std::string::npos);
    CHECK(report.find("FAIL") == std::string::npos);

    CHECK(run_cli({"verify", "theorem", "--trials", "3", "--seed", "17", "--order", "5",
                   "--s-order", "5", "--format", "json", "--out",
                   tmp.file("thm.json").string()}) == 0);
    const auto j = nlohmann::json::parse(read_file(tmp.file("thm.json")));
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() == 6);  // two checks per trial
}

TEST_CASE("randomized theorem runs require a seed") {
    CHECK(run_cli({"verify", "theorem", "--trials", "2"}) == 2);
}

TEST_CASE("usage errors exit with code 2, help with 0") {
    CHECK(run_cli({"no-such-command"}) == 2);
    CHECK(run_cli({"verify"}) == 2);
    CHECK(run_cli({"--help"}) == 0);
    CHECK(run_cli({"verify", "genfunc", "--order", "0"}) == 2);
}

TEST_CASE("canonical problem serialization round-trips byte-identically") {
    TempDir tmp;
    write_file(tmp.file("in.json"), kSingleGeneric);
    const ProblemInput first = load_problem(tmp.file("in.json").string());
    const std::string canonical = canonical_problem_text(*first.model, first.table);
    write_file(tmp.file("canon.json"), canonical);
    const ProblemInput second = load_problem(tmp.file("canon.json").string());
    CHECK(canonical_problem_text(*second.model, second.table) == canonical);

    // a fuller table with every section populated
    write_file(tmp.file("full.json"), R"({
  "model": {"rank": 3, "form": [0,1,0,1,0,0,0,0,-1], "kappa": [0,0,-1], "grading": [1,1,1]},
  "table": {
    "generic": [{"class": [1,1,0], "counts": {"0": -2, "1": 4}}],
    "exceptional": [{"class": [0,0,1], "count": 1}],
    "tori": [{"class": [1,0,0], "sign": -1, "type": 2}]
  }
})");
    const ProblemInput full = load_problem(tmp.file("full.json").string());
    const std::string canon = canonical_problem_text(*full.model, full.table);
    write_file(tmp.file("full_canon.json"), canon);
    const ProblemInput reloaded = load_problem(tmp.file("full_canon.json").string());
    CHECK(canonical_problem_text(*reloaded.model, reloaded.table) == canon);
}
