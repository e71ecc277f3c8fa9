#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include "anick/cli.hpp"
#include "oracles.hpp"

using namespace anick;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name + ".pres";
}

struct RunResult {
    int code;
    std::string out;
};

// library-level driver
RunResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("anick");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str() + err.str()};
}

// process-level driver through the installed binary
RunResult run_process(const std::string& args) {
    std::string cmd = std::string(CLI_BIN) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("chains command reproduces the 4-chain line") {
    auto r = run({"chains", fixture_path("t4"), "-w", "9"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[t|t3|t|t3|t] len=4 wt=9") != std::string::npos);
}

TEST_CASE("chains at weight 1 lists the arrows") {
    auto r = run({"chains", fixture_path("a3"), "-w", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[a] len=0 wt=1") != std::string::npos);
    CHECK(r.out.find("[b] len=0 wt=1") != std::string::npos);
}

TEST_CASE("chains -w 3 on the quadratic fixture shows two length-2 chains") {
    auto r = run({"chains", fixture_path("xx_xy"), "-w", "3"});
    CHECK(r.out.find("[x|x|x]") != std::string::npos);
    CHECK(r.out.find("[x|x|y]") != std::string::npos);
}

TEST_CASE("betti csv") {
    auto r = run({"betti", fixture_path("t4"), "-w", "9", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "n,w,count\n1,1,1\n2,4,1\n3,5,1\n4,8,1\n5,9,1\n");
}

TEST_CASE("model json matches the schema") {
    auto r = run({"model", fixture_path("t4"), "-w", "5", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"generator\": \"[t|t3|t]\"") != std::string::npos);
    CHECK(r.out.find("\"parts\"") != std::string::npos);
    // b(t5) = +(t4, t) - (t, t4)
    auto plus = r.out.find("\"sign\": 1");
    auto minus = r.out.find("\"sign\": -1");
    CHECK(plus != std::string::npos);
    CHECK(minus != std::string::npos);
}

TEST_CASE("model text on the A3 fixture") {
    auto r = run({"model", fixture_path("a3"), "-w", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[a|b] wt=2 len=1: b = -[a](x)[b]") != std::string::npos);
}

TEST_CASE("ext table contains the Green-Zacharia square") {
    auto r = run({"ext", fixture_path("xx_xy"), "-w", "6", "-n", "2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2,[x];[x],-1,[x|x]") != std::string::npos);
}

TEST_CASE("hh twisted equals hh classical on k[x]/(x^2)") {
    auto tw = run({"hh", fixture_path("t2"), "-d", "3", "-w", "0..6", "--engine", "twisted"});
    auto cl = run({"hh", fixture_path("t2"), "-d", "3", "-w", "0..6", "--engine", "classical"});
    CHECK(tw.code == 0);
    CHECK(tw.out == cl.out);
}

TEST_CASE("verify passes on fixtures and fails under sabotage") {
    auto ok = run({"verify", fixture_path("t3"), "-w", "8", "-n", "4"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("[FAIL]") == std::string::npos);

    auto bad = run({"verify", fixture_path("t4"), "-w", "8", "-n", "4", "--sabotage"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("[FAIL] b_squared") != std::string::npos);
}

TEST_CASE("exit codes: input and resource errors") {
    auto missing = run({"betti", fixture_path("nope")});
    CHECK(missing.code == kExitInput);
    auto syntax = run({"chains", fixture_path("bad_divisor")});
    CHECK(syntax.code == kExitInput);
    auto capped = run({"hh", fixture_path("t4"), "-d", "3", "-w", "0..3", "--cap", "0"});
    CHECK(capped.code == kExitResource);
}

TEST_CASE("byte-identical output regardless of parallelism") {
    auto one = run({"verify", fixture_path("xx_xy"), "-w", "7", "--threads", "1"});
    auto four = run({"verify", fixture_path("xx_xy"), "-w", "7", "--threads", "4"});
    CHECK(one.out == four.out);
    CHECK(one.code == four.code);
}

TEST_CASE("the real binary behaves like the library driver") {
    auto r = run_process("betti " + fixture_path("a3") + " -w 6 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out == "n,w,count\n1,1,2\n2,2,1\n");
    auto bad = run_process("chains " + fixture_path("nope"));
    CHECK(bad.code == kExitInput);
}
