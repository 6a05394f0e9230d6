#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tubecc {

struct VerifyConfig {
    int max_rank = 4;
    int max_length = 9;
    std::uint64_t seed = 1;
    std::size_t fuel = 10000;
    /// Random instances per randomized check.
    std::size_t samples = 100;
};

struct SuiteReport {
    std::string suite;
    std::size_t checked = 0;
    std::size_t failures = 0;
    /// Full data of the first failing instance, empty when none failed.
    std::string first_failure;
    /// Instances per sub-check (e.g. per inductive case).
    std::map<std::string, std::size_t> coverage;
};

/// Suite names accepted by run_verification, excluding "all".
const std::vector<std::string>& verification_suites();

/// Runs one suite, or every suite for "all". Deterministic in (config, suite).
/// Throws a validation error for an unknown suite name.
std::vector<SuiteReport> run_verification(const std::string& suite, const VerifyConfig& config);

std::string to_string(const SuiteReport& report);
std::string to_json(const std::vector<SuiteReport>& reports);

}  // namespace tubecc
