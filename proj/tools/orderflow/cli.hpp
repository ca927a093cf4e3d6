#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "orderflow/orderflow.hpp"

namespace orderflow::cli {

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

/// Everything needed to reproduce a run. Printed to the error stream before each subcommand.
struct RunConfig {
    std::string subcommand;
    std::size_t window = 3;
    std::size_t ground = 50;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "json";
    std::size_t max_window = 5;
    unsigned workers = 0;
    std::string kind;
    std::string code;
    std::string order_file;
    std::string fixture;
    bool reverse_pair = false;
};

std::string describe(const RunConfig& rc);

struct CheckResult {
    std::string name;
    std::string params;
    bool passed = false;
};

/// The invariant suite behind `orderflow verify`, for windows up to rc.max_window.
/// Stops at the first failure.
std::vector<CheckResult> run_invariant_suite(const RunConfig& rc);

/// Entry point shared by the binary and the tests. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orderflow::cli
