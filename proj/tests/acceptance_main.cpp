// Runs every acceptance criterion and prints one line per criterion.

#include "lgd/acceptance.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : lgd::kAcceptanceSeed;
    bool all = true;
    lgd::run_acceptance(seed, [&](const lgd::CriterionResult& r) {
        std::cout << lgd::format_result(r) << std::endl;
        all = all && r.passed;
    });
    std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
    return all ? 0 : 1;
}
