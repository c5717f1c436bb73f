#pragma once

/**
 * @file verify.hpp
 * @brief The invariant battery behind `leibform verify`.
 *
 * Each suite draws its instances from its own stream seeded by (seed, suite name),
 * so selecting a subset of suites does not change the instances of the others.
 * Reports contain no timing unless asked for, which keeps them byte-identical.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "leibform/random.hpp"

namespace leibform {

struct VerifyConfig {
    std::uint64_t seed = 1;
    std::string ring = "poly";  // ring for the cartan and leibniz suites
    int n = 0;                  // 0: alternate 3 and 4 in the form suites
    RandomCaps caps;
    std::vector<std::string> suites;  // empty: all
    bool timing = false;
};

struct Failure {
    std::string check;
    nlohmann::ordered_json payload;
};

struct SuiteResult {
    std::string name;
    std::size_t instances = 0;
    std::vector<Failure> failures;
    double seconds = 0;

    bool ok() const { return failures.empty(); }
};

struct Report {
    VerifyConfig config;
    std::vector<SuiteResult> suites;

    std::size_t failure_count() const;
    bool ok() const { return failure_count() == 0; }
};

/// Suite names in run order.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument on an unknown suite or ring name.
void validate(const VerifyConfig& config);

SuiteResult run_suite(const std::string& name, const VerifyConfig& config);
Report run_suites(const VerifyConfig& config);

nlohmann::ordered_json report_json(const Report& r);
std::string report_tsv(const Report& r);

/// Stream seed for a suite: splitmix64 of the user seed mixed with the name.
std::uint64_t suite_seed(std::uint64_t seed, const std::string& name);

}  // namespace leibform
