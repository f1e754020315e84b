#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "exptest/errors.hpp"
#include "exptest/ndse.hpp"

using namespace exptest;

TEST_CASE("ndse of an exponential law is constant -1/(4 beta)") {
    auto e1 = DistributionSpec::exponential(1.0);
    CHECK(ndse_at(e1, 1.0) == doctest::Approx(-0.25).epsilon(1e-9));
    auto e2 = DistributionSpec::exponential(2.0);
    CHECK(ndse_at(e2, 0.37) == doctest::Approx(-0.125).epsilon(1e-9));
    double lo = 1e9, hi = -1e9;
    for (int i = 1; i <= 100; ++i) {
        double v = ndse_at(e1, 0.05 * i);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(hi - lo < 1e-9);
}

TEST_CASE("uniform ndse closed form") {
    auto u = DistributionSpec::uniform(1.0);
    // -(1-(1-t)^3)/(6 t (2-t)) at t = 1 is -1/6
    CHECK(ndse_at(u, 1.0) == doctest::Approx(-1.0 / 6.0).epsilon(1e-9));
    CHECK(ndse_at(u, 0.5) ==
          doctest::Approx(-(1.0 - 0.125) / (6.0 * 0.5 * 1.5)).epsilon(1e-9));
}

TEST_CASE("ndse is nonpositive and rejects t outside the support") {
    for (const auto& spec :
         {DistributionSpec::weibull(2.0, 1.0), DistributionSpec::gamma(0.5, 1.0),
          DistributionSpec::rayleigh(1.0)}) {
        for (double t : {0.2, 0.7, 1.5}) CHECK(ndse_at(spec, t) <= 0.0);
    }
    CHECK_THROWS_AS(ndse_at(DistributionSpec::uniform(1.0), 1.5), input_error);
}

TEST_CASE("age replacement survival equals ndse") {
    for (const auto& spec :
         {DistributionSpec::exponential(1.0), DistributionSpec::weibull(2.0, 1.0),
          DistributionSpec::gamma(0.5, 1.0), DistributionSpec::lognormal(0.0, 0.5)}) {
        for (double t : {0.3, 0.5, 1.0, 1.8, 2.5}) {
            AgeReplacementSurvival ar{spec, t};
            CHECK(age_replacement_crj(ar) ==
                  doctest::Approx(ndse_at(spec, t)).epsilon(1e-8));
        }
    }
}

TEST_CASE("age replacement survival function shape") {
    AgeReplacementSurvival ar{DistributionSpec::weibull(2.0, 1.0), 0.8};
    CHECK(ar(0.0) == doctest::Approx(1.0));
    double prev = 1.0;
    for (double x = 0.1; x < 5.0; x += 0.1) {
        double v = ar(x);
        CHECK(v <= prev + 1e-12);
        prev = v;
    }
}

TEST_CASE("delta_fn sign catalog") {
    auto grid = [](double a, double b, int k) {
        std::vector<double> g;
        for (int i = 0; i < k; ++i)
            g.push_back(a + (b - a) * i / (k - 1.0));
        return g;
    };

    // exponential: identically zero
    auto e = DistributionSpec::exponential(1.0);
    for (double x : grid(0.1, 5.0, 50)) CHECK(std::fabs(delta_fn(e, x)) < 1e-9);

    CHECK(delta_fn(DistributionSpec::weibull(2.0, 1.0), 1.0) < 0.0);
    CHECK(delta_fn(DistributionSpec::weibull(0.5, 1.0), 1.0) > 0.0);

    CHECK(classify(e, grid(0.1, 5.0, 50)) == MonotoneClass::constant_exponential);
    CHECK(classify(DistributionSpec::rayleigh(1.0), grid(0.1, 5.0, 50)) ==
          MonotoneClass::indse);
    auto g05 = DistributionSpec::gamma(0.5, 1.0);
    CHECK(classify(g05, default_classify_grid(g05)) == MonotoneClass::dndse);
    auto w2 = DistributionSpec::weibull(2.0, 1.0);
    CHECK(classify(w2, default_classify_grid(w2)) == MonotoneClass::indse);
    // log-logistic with shape > 1: delta < 0 over the bulk of the law, but the
    // heavy tail flips it positive (delta -> Fbar - 2 f int Fbar^2 > 0 since
    // f/Fbar ~ shape/x), so a full-range grid correctly reports mixed
    auto ll = DistributionSpec::log_logistic(3.0, 1.0);
    CHECK(delta_fn(ll, 1.0) < 0.0);
    CHECK(delta_fn(ll, 8.0) > 0.0);
    CHECK(classify(ll, grid(0.1, 3.0, 60)) == MonotoneClass::indse);
    CHECK(classify(ll, default_classify_grid(ll)) == MonotoneClass::mixed);
    auto ll05 = DistributionSpec::log_logistic(0.5, 1.0);
    // infinite-mean law still classifies by the local sign of delta
    CHECK(delta_fn(ll05, 1.0) > 0.0);
}

TEST_CASE("departure functional") {
    auto e = DistributionSpec::exponential(2.0);
    CHECK(delta_functional(e).delta == doctest::Approx(0.0).epsilon(1e-9));

    // min of three Weibulls is Weibull with scale lambda 3^{-1/beta}
    auto w = DistributionSpec::weibull(2.0, 1.0);
    DepartureMeasure d = delta_functional(w);
    CHECK(d.delta_star == doctest::Approx(1.0 - 3.0 / std::sqrt(3.0)).epsilon(1e-8));
    CHECK(d.delta < 0.0); // INDSE family

    CHECK(delta_functional(DistributionSpec::gamma(0.5, 1.0)).delta > 0.0);
}
