#pragma once

#include <cstdint>
#include <vector>

#include "exptest/report.hpp"

namespace exptest {

// Exact finite-sample null law of the scale-invariant statistic under
// exponentiality. The statistic is a spacings mixture sum d_i G_i / sum G_i
// with G_1..G_{n-2} ~ chi2(2) and G_{n-1} ~ chi2(4); its survival function is
// a Lagrange-type expression over the coefficients d_{i,n}, evaluated in
// extended precision because the terms grow like 10^(0.85 n) before
// cancelling.
class ExactNull {
public:
    // Exact evaluation is supported for n in [3, max_supported_n]; Monte
    // Carlo quantiles take over beyond that.
    static constexpr int max_supported_n = 100;

    explicit ExactNull(int n);

    int n() const { return n_; }
    // d_{i,n} for i = 1..n-1, strictly increasing from -2 to 1.
    const std::vector<double>& coeffs() const { return d_; }

    double survival(double x) const; // P(statistic > x)
    double cdf(double x) const;      // P(statistic <= x)

    double p_value(double observed, Alternative alt) const;
    double critical_value(double alpha, Alternative alt) const;

private:
    int n_;
    std::vector<double> d_;
};

// Empirical alpha-quantile of the statistic over `reps` simulated standard
// exponential samples of size n. Cross-validates the exact law and serves as
// the fallback beyond max_supported_n.
double mc_null_quantile(int n, double alpha, std::int64_t reps,
                        std::uint64_t seed, int workers = 1);

// Empirical quantile helper shared by the Monte Carlo routines: the
// ceil(p * reps)-th order statistic.
double empirical_quantile(std::vector<double>& values, double p);

} // namespace exptest
