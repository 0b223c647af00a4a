#pragma once

// Desk-scale self checks run by `fss verify`. Each check is a named property
// over a fixed range; a failure carries the first witness found.

#include <string>
#include <vector>

namespace fss {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = true;
    long cases = 0;
    std::string witness;
    double seconds = 0;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::string json() const;
};

/// Suite names: all, complex, homology, ring, maps, braid.
const std::vector<std::string>& verify_suites();

/// Throws std::invalid_argument for an unknown suite.
VerifyReport run_verify(const std::string& suite);

}  // namespace fss
