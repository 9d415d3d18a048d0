#include <iostream>

#include "helpers.hpp"

#include "cambrian/selftest.hpp"

using namespace cambrian;

TEST_CASE("acceptance criteria") {
    std::vector<std::string> failures;
    for (const Criterion& criterion : all_criteria()) {
        CriterionResult result = run_criterion(criterion);
        if (result.pass) {
            std::cout << "[PASS] " << result.name << " (" << result.millis << " ms)\n";
        } else {
            std::cout << "[FAIL] " << result.name << ": " << result.detail << "\n";
            failures.push_back(result.name + ": " + result.detail);
        }
    }
    std::cout.flush();
    INFO("failed criteria: " << failures.size());
    for (const std::string& f : failures) INFO(f);
    REQUIRE(failures.empty());
}
