#pragma once

#include "nesthilb/toric.hpp"
#include "nesthilb/verify.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nesthilb::cli {

enum ExitCode : int {
    kPass = 0,
    kMismatch = 1,
    kUsage = 2,
    kStructural = 3,
};

struct RunConfig {
    std::string surface = "p2";  // p2 | p1xp1 | fa:<a> | file:<path>
    std::string bundle = "O";    // comma-separated divisor coefficients or a label
    std::string check = "all";   // theorem7 | theorem5 | case2 | case3 | zprod | all
    int nmax = 2;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::string format = "text"; // text | json
    std::string output;          // empty: standard output
    bool timing = false;         // report wall-clock millis; off keeps output reproducible
};

struct RunResult {
    std::string surface;
    std::vector<int> bundle;
    std::string bundle_label;
    std::uint64_t seed = 0;
    std::vector<CheckReport> checks;

    /// True iff every asserted check passed.
    bool pass() const;
};

/// Throws nesthilb::Error (InvalidSurface, WrongCoefficientCount) on bad selectors.
ToricSurface resolve_surface(const std::string &selector);
EquivariantLineBundle resolve_bundle(const ToricSurface &s, const std::string &selector);

/// Validates the config and runs the selected checks. Throws nesthilb::Error
/// or std::invalid_argument.
RunResult execute(const RunConfig &config);

std::string to_json(const RunResult &result);
std::string to_text(const RunResult &result);

/// Executes, writes the report and maps the outcome to an exit code. Errors
/// are reported on err.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

} // namespace nesthilb::cli
