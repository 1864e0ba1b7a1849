#pragma once

#include <string>
#include <vector>

#include "oscount/engine.hpp"

namespace oscount {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Self-contained regression suite: published values, inverse round trips,
// brute-force cross-checks, the Schubert and jet computations, and an
// integrality audit. Every expected value is a literal in the manifest.
std::vector<CheckResult> run_verification(const EngineOptions& options = {});

}  // namespace oscount
