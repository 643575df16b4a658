#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace f2add {

/// One verification criterion outcome. `failures` holds at most a handful
/// of descriptions; `checks` counts individual comparisons performed.
struct CheckResult {
    int criterion = 0;
    std::string name;
    bool passed = false;
    std::uint64_t checks = 0;
    std::vector<std::string> failures;
    double seconds = 0.0;
};

/// Criteria 1..9 are the acceptance gate; 10 is the flatness property
/// sweep exposed through `verify flatness`. `scale` multiplies instance
/// counts (1.0 = full budgets).
CheckResult run_criterion(int index, double scale, std::uint64_t base_seed);

inline constexpr int kAcceptanceCriteria = 9;
inline constexpr std::uint64_t kDefaultSeed = 20250809;

/// Suites the CLI exposes: fourier, energy, analytic, flatness,
/// extraction, pipelines.
std::vector<int> suite_criteria(const std::string& suite);

}  // namespace f2add
