#pragma once

#include <string>
#include <vector>

#include "hitq/cache.hpp"

namespace hitq {

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

// paper-dims, paper-invariants, paper-transfer, lambda-props, duality
const std::vector<std::string>& suite_names();
// "all" runs every suite; throws std::invalid_argument for unknown names
std::vector<CheckResult> run_suite(const std::string& name, const HitCache* cache = nullptr);

} // namespace hitq
