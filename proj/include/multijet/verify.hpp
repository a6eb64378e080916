#pragma once

// Randomized verification suites that drive the invariants of every module.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace multijet {

struct CheckResult {
    std::string suite;
    std::string name;
    int trials = 0;
    int passed = 0;
    std::vector<std::string> failures;  // at most a few, in trial order
    bool pass() const { return passed == trials; }
};

struct VerifyConfig {
    std::string suite = "all";  // all | identities | oracles | coalesce
    std::uint64_t seed = 20240101;
    int trials = 100;
    unsigned precision_bits = 128;
    unsigned threads = 0;       // 0: hardware concurrency
};

struct VerifyReport {
    VerifyConfig config;
    std::vector<CheckResult> checks;
    bool pass() const;
};

std::vector<std::string> suite_names();
/// Throws Error for an unknown suite name.
VerifyReport run_verify(const VerifyConfig& config);

nlohmann::ordered_json to_json(const VerifyReport& r);

}  // namespace multijet
