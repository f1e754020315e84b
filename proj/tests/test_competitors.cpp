#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "exptest/competitors.hpp"
#include "exptest/errors.hpp"
#include "exptest/rng.hpp"

using namespace exptest;

TEST_CASE("cn hand values") {
    CHECK(cn_statistic(Sample({3.7})) == doctest::Approx(std::exp(-1.0)));
    CHECK(cn_statistic(Sample({1, 1, 1, 1})) == doctest::Approx(std::exp(-1.0)));

    // E[(X/mu) e^{-X/mu}] = 1/4 under the null
    RngStream rng(2, 0);
    std::vector<double> x(100000);
    for (auto& v : x) v = rng.next_exponential();
    CHECK(std::fabs(cn_statistic(Sample(std::move(x))) - 0.25) < 0.003);
}

TEST_CASE("tn hand value") {
    // sorted (1,2): spacing term (1/2)ln(1/2), m_hat = 5/6
    double expect = 1.0 - 0.5 * std::log(2.0) / (5.0 / 6.0);
    CHECK(tn_statistic(Sample({1, 2})) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(tn_statistic(Sample({2, 1})) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("w2 hand value and lower bound") {
    // n=1: (1 - e^{-1} - 1/2)^2 + 1/12
    double expect = std::pow(0.5 - std::exp(-1.0), 2) + 1.0 / 12.0;
    CHECK(w2_statistic(Sample({4.2})) == doctest::Approx(expect).epsilon(1e-12));

    RngStream rng(8, 0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> x(10);
        for (auto& v : x) v = rng.next_exponential();
        CHECK(w2_statistic(Sample(std::move(x))) >= 1.0 / 120.0);
    }
}

TEST_CASE("sstar hand value") {
    CHECK(sstar_statistic(Sample({1.0})) ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
    RngStream rng(8, 1);
    std::vector<double> x(15);
    for (auto& v : x) v = rng.next_exponential();
    CHECK(sstar_statistic(Sample(std::move(x))) > 0.0);
}

TEST_CASE("klc window handling") {
    CHECK(klc_default_window(9) == 3);
    CHECK(klc_default_window(20) == 4);
    CHECK(klc_default_window(5) == 2);
    CHECK(klc_default_window(3) == 1);
    CHECK(klc_default_window(4) == 1);

    Sample s({0.3, 0.9, 1.4, 2.2, 3.1, 4.0, 5.5});
    CHECK(klc_statistic(s, 2) > 0.0);
    CHECK_THROWS_AS(klc_statistic(s, 0), input_error);
    CHECK_THROWS_AS(klc_statistic(s, 4), input_error);
}

TEST_CASE("all five statistics are scale invariant") {
    RngStream rng(44, 0);
    std::vector<double> x(25);
    for (auto& v : x) v = rng.next_exponential();
    Sample s(x);
    for (auto& v : x) v *= 987.0;
    Sample cs(x);

    CHECK(cn_statistic(cs) == doctest::Approx(cn_statistic(s)).epsilon(1e-10));
    CHECK(tn_statistic(cs) == doctest::Approx(tn_statistic(s)).epsilon(1e-10));
    CHECK(w2_statistic(cs) == doctest::Approx(w2_statistic(s)).epsilon(1e-10));
    CHECK(sstar_statistic(cs) ==
          doctest::Approx(sstar_statistic(s)).epsilon(1e-10));
    CHECK(klc_statistic(cs, 5) ==
          doctest::Approx(klc_statistic(s, 5)).epsilon(1e-10));
}

TEST_CASE("cn normal threshold") {
    // z_{0.975} / sqrt(382 n / 5)
    CHECK(cn_normal_threshold(10, 0.05) ==
          doctest::Approx(1.959964 / std::sqrt(764.0)).epsilon(1e-5));
}

TEST_CASE("monte carlo thresholds deliver the nominal size") {
    const int n = 10;
    const double alpha = 0.05;
    const std::int64_t reps = 4000;
    for (Competitor kind : {Competitor::cn, Competitor::tn, Competitor::w2,
                            Competitor::sstar, Competitor::klc}) {
        int window = kind == Competitor::klc ? klc_default_window(n) : 0;
        double threshold =
            mc_competitor_quantile(kind, n, alpha, 20000, 3, 1, window);
        std::int64_t hits = 0;
        std::uint64_t ns = stream_id(55, label_hash(to_string(kind)));
        for (std::int64_t r = 0; r < reps; ++r) {
            RngStream rng(ns, static_cast<std::uint64_t>(r));
            std::vector<double> x(n);
            for (auto& v : x) v = rng.next_exponential();
            Sample s(std::move(x));
            double stat = 0.0;
            switch (kind) {
                case Competitor::cn: stat = cn_statistic(s); break;
                case Competitor::tn: stat = tn_statistic(s); break;
                case Competitor::w2: stat = w2_statistic(s); break;
                case Competitor::sstar: stat = sstar_statistic(s); break;
                case Competitor::klc: stat = klc_statistic(s, window); break;
            }
            hits += competitor_rejects(kind, stat, threshold) ? 1 : 0;
        }
        double size = static_cast<double>(hits) / static_cast<double>(reps);
        CHECK(std::fabs(size - alpha) < 0.015);
    }
    CHECK_THROWS_AS(mc_competitor_quantile(Competitor::w2, 10, 0.05, 10, 1),
                    input_error);
}
