#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

/// Runs the CLI with `args`, capturing stdout; stderr is discarded.
Run run(const std::string& args) {
    const std::string cmd = std::string(INDIGRAPH_EXE) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch() {
    auto dir = fs::temp_directory_path() / "indep_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze prints key=value lines") {
    const auto r = run("analyze --group cyclic15 --induced");
    CHECK(r.code == 0);
    CHECK(r.out.find("vertices=6\n") != std::string::npos);
    CHECK(r.out.find("planar=true\n") != std::string::npos);
    CHECK(r.out.find("parts={2,4}\n") != std::string::npos);
    CHECK(r.out.find("hamiltonian=no\n") != std::string::npos);
}

TEST_CASE("analyze JSON") {
    const auto r = run("analyze --group sym4 --kind rank --u 2 --format json");
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["clique"]["size"] == 4);
    CHECK(doc["independent"]["size"] == 12);
}

TEST_CASE("graph export to DOT and JSON files") {
    const auto dir = scratch();
    CHECK(run("graph --group C2xC2 --out " + (dir / "k.dot").string()).code == 0);
    const auto dot = slurp(dir / "k.dot");
    CHECK(dot.rfind("graph ", 0) == 0);
    CHECK(run("graph --group q8 --induced --out " + (dir / "q.json").string()).code == 0);
    const auto doc = nlohmann::json::parse(slurp(dir / "q.json"));
    CHECK(doc["vertex_count"] == 6);
    CHECK(run("graph --group sym3 --kind swap --format json").code == 0);
}

TEST_CASE("verify writes a report and signals failures through the exit code") {
    const auto dir = scratch();
    const auto report = (dir / "r.csv").string();
    CHECK(run("verify --max-order 8 --suite connectivity-main,isolated-characterization --report " + report).code ==
          0);
    const auto csv = slurp(report);
    CHECK(csv.rfind("group,order,check,status\n", 0) == 0);
    CHECK(csv.find("D4,8,connectivity-main,pass") != std::string::npos);
    // the degree formula fails for C2 x C6
    CHECK(run("verify --group C2xC6 --suite hamiltonian-nilpotent").code == 1);
}

TEST_CASE("verify output is reproducible") {
    const auto a = run("verify --max-order 10 --suite tarski-range,w-set");
    const auto b = run("verify --max-order 10 --suite tarski-range,w-set");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("catalog list and import") {
    const auto r = run("catalog list --max-order 8");
    CHECK(r.code == 0);
    CHECK(r.out.find("Q8\tquaternion8\t[Q8]") != std::string::npos);
    const auto dir = scratch();
    std::ofstream(dir / "c2.tbl") << "2\n0 1\n1 0\n";
    const auto imp = run("import " + (dir / "c2.tbl").string());
    CHECK(imp.code == 0);
    CHECK(imp.out.rfind("2\n0 1\n1 0\n", 0) == 0);
    CHECK(run("analyze --group " + (dir / "c2.tbl").string()).code == 0);
    std::ofstream(dir / "bad.tbl") << "2\n0 1\n";
    CHECK(run("import " + (dir / "bad.tbl").string()).code == 2);
}

TEST_CASE("usage errors and budgets") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("analyze").code == 2);
    CHECK(run("analyze --group sym4 --kind rank").code == 2);
    CHECK(run("analyze --group 'nonsense(3)'").code == 2);
    CHECK(run("verify --suite no-such-check").code == 2);
    CHECK(run("analyze --group sym4 --budget-nodes 3").code == 3);
}

}  // TEST_SUITE
