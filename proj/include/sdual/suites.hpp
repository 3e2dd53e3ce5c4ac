#pragma once

#include "sdual/duality.hpp"

#include <string>
#include <vector>

namespace sdual {

struct CheckResult {
    std::string anchor; // content description, or "plumbing"
    std::string status; // pass | fail | skipped
    std::string witness;
};

// Line-oriented, byte-deterministic verification report.
struct Report {
    std::string suite;
    uint64_t seed = 0;
    std::vector<std::pair<std::string, int>> convention; // signs in force
    std::vector<CheckResult> checks;

    bool ok() const;
    std::string str() const;
};

std::vector<std::string> suite_names(); // includes "all"

// Runs the named suite with the given frozen sign convention; throws on an
// unknown suite name.  The seed feeds every randomized property check.
Report run_suite(const std::string& name, const SignConvention& conv, uint64_t seed);

} // namespace sdual
