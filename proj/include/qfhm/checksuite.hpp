#pragma once

#include <string>
#include <vector>

namespace qfhm {

struct CheckResult {
    std::string section;
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Built-in self checks exercising every module against frozen reference
// values and cross-route identities.  Deterministic: fixed seeds, fixed
// grids, fixed ordering of results.
std::vector<CheckResult> run_checks(bool oracle_only = false);

}  // namespace qfhm
