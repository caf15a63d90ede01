#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace defeasance {

// One differential or property suite over seeded random instances.
// Known ids: T6 T7 T8 C27 T31 T32 T33 F1 F11 F30 L10 L12 L28 CHAIN.
struct CheckConfig {
    std::string theorem;
    int trials = 300;
    std::uint64_t seed = 1;
    int max_atoms = 3;
    int max_premises = 4;
    int max_omega = 3;
    int max_rules = 5;
    int max_kb = 4;
};

struct CheckResult {
    int trials = 0;
    int failures = 0;
    std::string first_counterexample;  // problem file text with comment header
    bool ok() const { return failures == 0; }
    std::string summary() const;  // "300/300 pass"
};

const std::vector<std::string>& check_ids();
bool known_check(const std::string& id);

CheckResult run_check(const CheckConfig& cfg);

}  // namespace defeasance
