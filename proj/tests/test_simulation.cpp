#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "exptest/errors.hpp"
#include "exptest/simulation.hpp"

using namespace exptest;

TEST_CASE("critical table matches published values") {
    auto rows = critical_table({3, 12}, {0.01, 0.05}, Alternative::indse);
    REQUIRE(rows.size() == 4);
    CHECK(std::fabs(rows[0].value - (-1.71190)) < 0.03); // n=3, 0.01
    CHECK(std::fabs(rows[3].value - (-0.47744)) < 0.015); // n=12, 0.05

    // monotone toward zero in n at fixed alpha
    std::vector<int> sizes;
    for (int n = 3; n <= 20; ++n) sizes.push_back(n);
    auto table = critical_table(sizes, {0.05}, Alternative::indse);
    for (std::size_t i = 1; i < table.size(); ++i)
        CHECK(table[i].value > table[i - 1].value);
}

TEST_CASE("size brackets the nominal level") {
    SimConfig config;
    config.seed = 5;
    config.reps = 4000;
    config.sizes = {15};
    config.alpha = 0.05;
    config.tests = {TestKind::ndse};
    config.threshold_reps = 20000;
    auto cells = size_study(config, Alternative::indse);
    REQUIRE(cells.size() == 1);
    CHECK(std::fabs(cells[0].power - 0.05) < 0.012);
    CHECK(cells[0].mc_se > 0.0);

    // two-sided region also holds its size (alpha/2 in each exact tail)
    auto two = power_study(config, {{DistributionSpec::exponential(1.0),
                                     Alternative::indse, true}});
    REQUIRE(two.size() == 1);
    CHECK(std::fabs(two[0].power - 0.05) < 0.012);
}

TEST_CASE("power spot checks") {
    SimConfig config;
    config.seed = 5;
    config.reps = 3000;
    config.sizes = {10};
    config.alpha = 0.05;
    config.tests = {TestKind::ndse, TestKind::w2};
    config.threshold_reps = 20000;
    std::vector<AltSpec> alts = {
        {constrained_scale(Family::weibull, 2.0), Alternative::indse},
        {constrained_scale(Family::gamma, 5.0), Alternative::indse}};
    auto cells = power_study(config, alts);
    REQUIRE(cells.size() == 4);
    // published: weibull beta=2 n=10 -> 0.7552; gamma beta=5 n=10 -> 0.9656
    CHECK(std::fabs(cells[0].power - 0.7552) < 0.03);
    CHECK(std::fabs(cells[2].power - 0.9656) < 0.02);
}

TEST_CASE("power is nondecreasing in n") {
    SimConfig config;
    config.seed = 9;
    config.reps = 3000;
    config.sizes = {5, 10, 20};
    config.alpha = 0.05;
    config.tests = {TestKind::ndse};
    config.threshold_reps = 20000;
    auto cells = power_study(
        config, {{constrained_scale(Family::weibull, 2.0), Alternative::indse}});
    REQUIRE(cells.size() == 3);
    CHECK(cells[1].power + cells[1].mc_se > cells[0].power);
    CHECK(cells[2].power + cells[2].mc_se > cells[1].power);
}

TEST_CASE("worker count does not change the tables") {
    SimConfig config;
    config.seed = 31;
    config.reps = 1000;
    config.sizes = {8, 15};
    config.alpha = 0.05;
    config.tests = {TestKind::ndse, TestKind::tn, TestKind::klc};
    config.threshold_reps = 5000;
    std::vector<AltSpec> alts = {
        {constrained_scale(Family::weibull, 2.0), Alternative::indse}};

    config.workers = 1;
    std::string serial = to_tsv(power_study(config, alts));
    config.workers = 4;
    std::string parallel = to_tsv(power_study(config, alts));
    CHECK(serial == parallel);
}

TEST_CASE("serialization") {
    std::vector<CriticalRow> rows = {{5, 0.05, -0.8529}};
    CHECK(to_tsv(rows) == "n\talpha\tcritical_value\n5\t0.05\t-0.8529\n");
    CHECK(to_json(rows).find("\"critical_value\"") != std::string::npos);

    std::vector<PowerCell> cells = {{TestKind::ndse, "weibull(2)", 10, 0.75, 0.01}};
    std::string tsv = to_tsv(cells);
    CHECK(tsv.find("ndse\tweibull(2)\t10\t0.75\t0.01") != std::string::npos);
    CHECK(to_json(cells).find("\"power\"") != std::string::npos);
}

TEST_CASE("config validation") {
    SimConfig config;
    config.tests = {TestKind::ndse};
    config.sizes = {};
    CHECK_THROWS_AS(
        power_study(config,
                    {{DistributionSpec::exponential(1.0), Alternative::indse}}),
        input_error);
    config.sizes = {2};
    CHECK_THROWS_AS(
        power_study(config,
                    {{DistributionSpec::exponential(1.0), Alternative::indse}}),
        input_error);
    CHECK_THROWS_AS(test_kind_from_string("bogus"), input_error);
    CHECK(test_kind_from_string("sstar") == TestKind::sstar);
}
