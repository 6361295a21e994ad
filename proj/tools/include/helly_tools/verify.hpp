#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace helly::verify {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;     ///< deterministic summary of what was measured
    double seconds = 0.0;   ///< wall time, never printed on stdout
    double budget = 0.0;    ///< seconds allowed; exceeding it fails the criterion
};

/// Criteria run by a suite: theorem1, theorem2, theorem3 or all.
/// Unknown names raise MalformedInput.
std::vector<int> suite_criteria(const std::string& suite);

/// Runs one acceptance criterion (1..9) with draws seeded from `seed`.
CriterionResult run_criterion(int id, std::uint64_t seed);

/// One fixed-width table row, identical across runs for identical results.
std::string format_row(const CriterionResult& r);

}  // namespace helly::verify
