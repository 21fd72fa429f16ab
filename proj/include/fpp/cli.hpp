#pragma once

#include "fpp/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fpp::cli {

enum ExitCode : int {
    kExitPass = 0,
    kExitClaimFailed = 1,
    kExitUsage = 2,
};

struct RunConfig {
    std::string subcommand;  // "ring describe", "lefschetz", "verify-fpp", ...
    std::string ring;
    std::string matrix_path;
    std::string complex_path;
    std::optional<std::int64_t> chi;
    std::optional<std::string> mode;
    std::size_t n = 0;
    unsigned jobs = 1;
    bool json = false;
    bool table1 = false;
    bool timing = false;
    unsigned cap_bits = kDefaultEnumerationCapBits;
    std::size_t poset_cap = kDefaultPosetCap;
};

// Report envelope: {schema_version, command, inputs, results, pass, timing_ms}.
// Throws fpp::Error on bad input.
Json execute(const RunConfig& config);

// Runs every acceptance criterion in order. Each entry of results.criteria
// carries id, name, kind ("hard" or "adjudication"), pass, results and timing_ms.
Json verify_all(unsigned jobs);

// Drops every "timing_ms" key, recursively.
Json strip_timing(Json j);

// Parses argv (without the program name), writes the text or JSON report to
// out and diagnostics to err, and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpp::cli
