#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "exptest/distributions.hpp"
#include "exptest/errors.hpp"
#include "exptest/quadrature.hpp"
#include "exptest/rng.hpp"

using namespace exptest;

namespace {

// quadrature cross-checks of the closed-form moments
void check_moments(const DistributionSpec& spec, double tol = 1e-6) {
    double hi = spec.quantile(1.0 - 1e-12);
    double m1 = integrate([&](double x) { return x * spec.pdf(x); }, 0.0, hi);
    double m2 =
        integrate([&](double x) { return x * x * spec.pdf(x); }, 0.0, hi);
    CHECK(spec.mean() == doctest::Approx(m1).epsilon(tol));
    CHECK(spec.second_moment() == doctest::Approx(m2).epsilon(tol));
}

} // namespace

TEST_CASE("pdf integrates to one and cdf matches") {
    for (const auto& spec :
         {DistributionSpec::exponential(1.3), DistributionSpec::weibull(2.0, 1.5),
          DistributionSpec::gamma(0.5, 2.0), DistributionSpec::lognormal(0.2, 0.7),
          DistributionSpec::uniform(3.0), DistributionSpec::rayleigh(1.2),
          DistributionSpec::log_logistic(3.0, 1.0)}) {
        double hi = spec.quantile(1.0 - 1e-13);
        double mass = integrate([&](double x) { return spec.pdf(x); }, 0.0, hi);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
        for (double p : {0.1, 0.5, 0.9}) {
            double q = spec.quantile(p);
            CHECK(spec.cdf(q) == doctest::Approx(p).epsilon(1e-8));
            CHECK(spec.survival(q) == doctest::Approx(1.0 - p).epsilon(1e-7));
        }
    }
}

TEST_CASE("closed-form moments") {
    check_moments(DistributionSpec::exponential(2.0));
    check_moments(DistributionSpec::weibull(2.0, 1.0));
    check_moments(DistributionSpec::gamma(5.0, 0.3));
    check_moments(DistributionSpec::lognormal(0.4, 0.5));
    check_moments(DistributionSpec::uniform(2.0));
    check_moments(DistributionSpec::rayleigh(0.8));

    CHECK(DistributionSpec::exponential(2.0).mean() == doctest::Approx(0.5));
    CHECK(DistributionSpec::weibull(2.0, 1.0).mean() ==
          doctest::Approx(std::sqrt(std::acos(-1.0)) / 2.0));
}

TEST_CASE("constrained scale makes E(X^2) = 2 E(X)") {
    for (auto [fam, par] : {std::pair{Family::weibull, 2.0},
                            std::pair{Family::weibull, 0.5},
                            std::pair{Family::gamma, 5.0},
                            std::pair{Family::gamma, 0.5},
                            std::pair{Family::lognormal, 0.4}}) {
        DistributionSpec spec = constrained_scale(fam, par);
        CHECK(spec.second_moment() / (2.0 * spec.mean()) ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
    CHECK_THROWS_AS(constrained_scale(Family::lognormal, 1.0), input_error);
}

TEST_CASE("sampling matches the analytic mean") {
    for (const auto& spec :
         {DistributionSpec::exponential(1.0), DistributionSpec::weibull(2.0, 1.0),
          DistributionSpec::gamma(0.5, 1.0), DistributionSpec::gamma(5.0, 1.0),
          DistributionSpec::lognormal(0.2, 0.7), DistributionSpec::uniform(2.0),
          DistributionSpec::rayleigh(1.0)}) {
        RngStream rng(99, 1);
        const std::size_t n = 200000;
        double acc = 0.0, acc2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double x = spec.sample(rng);
            CHECK(x > 0.0);
            acc += x;
            acc2 += x * x;
        }
        double mean = acc / static_cast<double>(n);
        double var = acc2 / static_cast<double>(n) - mean * mean;
        double se = std::sqrt(var / static_cast<double>(n));
        CHECK(std::fabs(mean - spec.mean()) < 4.0 * se);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(DistributionSpec::exponential(0.0), input_error);
    CHECK_THROWS_AS(DistributionSpec::weibull(-1.0, 1.0), input_error);
    CHECK_THROWS_AS(DistributionSpec::gamma(1.0, 0.0), input_error);
    CHECK_THROWS_AS(DistributionSpec::lognormal(0.0, -1.0), input_error);
    CHECK_THROWS_AS(family_from_string("cauchy"), input_error);
    CHECK(family_from_string("weibull") == Family::weibull);
}
