#pragma once

// Verification suites: the invariant batteries run by `verify` and by the acceptance test.

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cacti {

class SuiteError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Zero or negative fields mean "use the suite default"; an empty algebra means the suite's default set.
struct SuiteConfig {
    int n = 0;
    int max_degree = -1;
    std::string algebra;
    std::uint64_t seed = 1;
    int trials = 0;
};

struct CheckResult {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string witness; // first failing case in case order, replayable text
    std::string info;    // observed values, if the check reports any
    bool pass() const { return failures == 0; }
};

struct SuiteReport {
    std::string suite;
    SuiteConfig config;
    std::vector<CheckResult> checks;
    double seconds = 0;
    bool pass() const;
    long cases() const;
    long failures() const;
};

const std::vector<std::string>& suite_names();

// Throws SuiteError for an unknown suite or an invalid config.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config = {});

// Worker count: CACTI_THREADS if set and positive, else the hardware concurrency.
int thread_count();

nlohmann::json to_json(const SuiteReport& r);
std::string format_report(const SuiteReport& r);

} // namespace cacti
