#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "anick/presentation.hpp"

namespace anick {

struct RunConfig {
    std::string command;
    std::string input_path;
    std::string output_path;  // empty writes to stdout
    int max_weight = 8;
    int max_arity = 4;
    int max_degree = 3;
    int shift_lo = -4;
    int shift_hi = 4;
    std::string format = "text";    // text | csv | json
    std::string engine = "twisted";  // twisted | classical
    int threads = 1;
    Int cap = 2'000'000;
    bool sabotage = false;
};

struct Certificate {
    std::string suite;
    std::string digest;
    std::string bounds;
    bool pass = true;
    std::vector<std::string> counterexamples;
};

// exit codes: 0 pass, 1 verification failure, 2 resource limit, 3 input error
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitResource = 2;
constexpr int kExitInput = 3;

std::string cmd_chains(const RunConfig& cfg, const Presentation& p);
std::string cmd_betti(const RunConfig& cfg, const Presentation& p);
std::string cmd_model(const RunConfig& cfg, const Presentation& p);
std::string cmd_ext(const RunConfig& cfg, const Presentation& p);
std::string cmd_hh(const RunConfig& cfg, const Presentation& p);
std::string cmd_verify(const RunConfig& cfg, const Presentation& p,
                       std::vector<Certificate>& certs, bool& all_pass);

// Full driver: parses argv, runs the command, writes the report.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace anick
