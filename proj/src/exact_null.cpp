#include "exptest/exact_null.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "exptest/errors.hpp"
#include "exptest/estimator.hpp"
#include "exptest/parallel.hpp"
#include "exptest/rng.hpp"

namespace exptest {

namespace {

// 160 significant decimal digits: the largest intermediate term at n = 100 is
// ~1e85, so this leaves ~70 digits for the cancelled result.
using big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<160>>;

big coeff_big(int i, int n) {
    big num = big(3 * i - 3 * n + 6) * (n - i + 1) + big(n) * n - 3 * n - 4;
    return num / (big(n - 1) * (n - 2));
}

// Survival of sum_i (d_i - x) G_i > 0 with G_i ~ chi2(2) for i <= n-2 and a
// doubled root at d_{n-1} (chi2(4)). Residue expansion at the positive roots:
//
//   P = sum_{j<=n-2, x<=d_j} ((d_j-x)/(d_j-d_{n-1}))^2
//           prod_{i<=n-2, i!=j} (d_j-x)/(d_j-d_i)
//     + (1 + mu1) prod_{i<=n-2} (d_{n-1}-x)/(d_{n-1}-d_i),  x <= d_{n-1},
//   mu1 = sum_{i<=n-2} (x-d_i)/(d_{n-1}-d_i).
//
// The doubled root contributes the squared factor in the first sum; it is the
// derivative term of the order-2 residue.
big survival_big(int n, const std::vector<big>& d, const big& x) {
    const int m = n - 1; // number of mixture components
    const big& dn1 = d[m - 1];
    big total = 0;

    for (int j = 0; j < m - 1; ++j) {
        if (x > d[j]) continue;
        big r = (d[j] - x) / (d[j] - dn1);
        big p = r * r;
        for (int i = 0; i < m - 1; ++i)
            if (i != j) p *= (d[j] - x) / (d[j] - d[i]);
        total += p;
    }
    if (x <= dn1) {
        big mu1 = 0;
        big p = 1;
        for (int i = 0; i < m - 1; ++i) {
            mu1 += (x - d[i]) / (dn1 - d[i]);
            p *= (dn1 - x) / (dn1 - d[i]);
        }
        total += (1 + mu1) * p;
    }
    return total;
}

} // namespace

ExactNull::ExactNull(int n) : n_(n) {
    if (n < 3) throw input_error("exact null law requires n >= 3");
    if (n > max_supported_n)
        throw input_error("exact null law supported for n <= 100; use the Monte Carlo quantile");
    auto all = coefficients(n);
    d_.assign(all.begin(), all.end() - 1); // d_{n-1,n} == d_{n,n}
}

double ExactNull::survival(double x) const {
    if (x <= -2.0) return 1.0;
    if (x >= 1.0) return 0.0;
    std::vector<big> d(n_ - 1);
    for (int i = 1; i <= n_ - 1; ++i) d[i - 1] = coeff_big(i, n_);
    big v = survival_big(n_, d, big(x));
    double out = static_cast<double>(v);
    return std::min(1.0, std::max(0.0, out));
}

double ExactNull::cdf(double x) const { return 1.0 - survival(x); }

double ExactNull::p_value(double observed, Alternative alt) const {
    return alt == Alternative::indse ? cdf(observed) : survival(observed);
}

double ExactNull::critical_value(double alpha, Alternative alt) const {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw input_error("critical_value: alpha must be in (0,1)");
    // survival is continuous and strictly decreasing on (-2, 1); bisect for
    // the point where the relevant tail probability equals alpha.
    double target = alt == Alternative::indse ? 1.0 - alpha : alpha;
    double lo = -2.0, hi = 1.0;
    while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        if (survival(mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double empirical_quantile(std::vector<double>& values, double p) {
    if (values.empty()) throw input_error("empirical_quantile: no values");
    auto k = static_cast<std::size_t>(
        std::ceil(p * static_cast<double>(values.size())));
    if (k > 0) --k;
    std::nth_element(values.begin(), values.begin() + k, values.end());
    return values[k];
}

double mc_null_quantile(int n, double alpha, std::int64_t reps,
                        std::uint64_t seed, int workers) {
    if (reps < 1000) throw input_error("mc_null_quantile: need at least 1000 replications");
    if (n < 3) throw input_error("mc_null_quantile: need n >= 3");
    const std::uint64_t ns = stream_id(seed, label_hash("null-quantile") ^ static_cast<std::uint64_t>(n));
    std::vector<double> stats(static_cast<std::size_t>(reps));
    parallel_for(reps, workers, [&](std::int64_t r) {
        RngStream rng(ns, static_cast<std::uint64_t>(r));
        std::vector<double> x(static_cast<std::size_t>(n));
        for (auto& v : x) v = rng.next_exponential();
        stats[static_cast<std::size_t>(r)] = statistic(Sample(std::move(x)));
    });
    return empirical_quantile(stats, alpha);
}

} // namespace exptest
