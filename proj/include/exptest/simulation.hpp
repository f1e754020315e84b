#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exptest/competitors.hpp"
#include "exptest/distributions.hpp"
#include "exptest/report.hpp"

namespace exptest {

// Tests compared in the Monte Carlo studies. `ndse` is the departure-measure
// test with its exact (or, beyond the supported range, simulated) null
// threshold; the rest are the benchmark tests from competitors.hpp.
enum class TestKind { ndse, cn, tn, w2, sstar, klc };

const char* to_string(TestKind k);
TestKind test_kind_from_string(const std::string& name);

// An alternative hypothesis: a sampling law plus the rejection direction the
// departure-measure test should use against it. For laws whose survival
// extropy is not monotone in either direction, `two_sided` splits alpha
// equally between the two tails of the null law (direction is then ignored).
struct AltSpec {
    DistributionSpec dist;
    Alternative direction;
    bool two_sided = false;
};

struct SimConfig {
    std::uint64_t seed = 0;
    std::int64_t reps = 10000;
    std::vector<int> sizes;
    double alpha = 0.05;
    std::vector<TestKind> tests;
    int workers = 1;
    // Replications used to calibrate simulated null thresholds.
    std::int64_t threshold_reps = 100000;
    int klc_window = 0; // 0 = round(sqrt(n)) default
};

struct CriticalRow {
    int n = 0;
    double alpha = 0.0;
    double value = 0.0;
};

struct PowerCell {
    TestKind test;
    std::string family; // sampling law description
    int n = 0;
    double power = 0.0;
    double mc_se = 0.0; // binomial standard error sqrt(p(1-p)/reps)
};

// Exact critical values of the departure-measure statistic (simulated beyond
// the supported exact range, using mc_reps replications).
std::vector<CriticalRow> critical_table(const std::vector<int>& sizes,
                                        const std::vector<double>& alphas,
                                        Alternative alt,
                                        std::int64_t mc_reps = 100000,
                                        std::uint64_t seed = 0, int workers = 1);

// Empirical rejection rates of the configured tests against each alternative.
// Samples for a given (family, n, replication) are shared across tests, and
// the replication streams do not depend on the worker count.
std::vector<PowerCell> power_study(const SimConfig& config,
                                   const std::vector<AltSpec>& alternatives);

// Rejection rates under the standard exponential null (empirical size).
std::vector<PowerCell> size_study(const SimConfig& config, Alternative alt);

std::string to_tsv(const std::vector<CriticalRow>& rows);
std::string to_json(const std::vector<CriticalRow>& rows);
std::string to_tsv(const std::vector<PowerCell>& cells);
std::string to_json(const std::vector<PowerCell>& cells);

} // namespace exptest
