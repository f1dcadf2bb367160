#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lgd {

struct CriterionResult {
    std::string id;     // "AC1" .. "AC10"
    std::string title;
    bool passed = false;  // correctness and runtime limit both met
    bool correct = false;
    double seconds = 0;
    double limit_seconds = 0;
    std::string detail;
};

inline constexpr std::uint64_t kAcceptanceSeed = 20240611;

/// Runs every criterion in order; `on_result` sees each result as it completes.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kAcceptanceSeed,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// One line: "AC3 PASS  <title>  (0.41 s, limit 30 s)  <detail>".
std::string format_result(const CriterionResult& r);

}  // namespace lgd
