#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vecpack/caps.hpp"

namespace vecpack::suite {

inline constexpr int kCriteria = 10;

struct Options {
    std::uint64_t seed = 1;
    SearchCaps caps;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    double budget_seconds = 0;
    double seconds = 0;             // wall time; not part of the report
    std::vector<std::string> details;  // deterministic given the seed
};

/// Runs one criterion (1..kCriteria). Throws std::out_of_range otherwise.
CriterionResult run(int id, const Options& options);

/// Runs criteria 1..kCriteria in order. The determinism criterion reuses the
/// first pass over 1..kCriteria-1 as one of its two runs.
std::vector<CriterionResult> run_all(const Options& options);

/// Fixed-format report without timings, so equal seeds give equal bytes.
std::string report(const std::vector<CriterionResult>& results, const Options& options);

/// "PASS"/"FAIL" line with timing, for interactive output.
std::string summary_line(const CriterionResult& result);

}  // namespace vecpack::suite
