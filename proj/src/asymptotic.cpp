#include "exptest/asymptotic.hpp"

#include <cmath>

#include "exptest/errors.hpp"
#include "exptest/quadrature.hpp"
#include "exptest/special.hpp"

namespace exptest {

AsymptoticReport asymptotic_test(const Sample& s, double alpha, Alternative alt) {
    double stat = statistic(s);
    double n = static_cast<double>(s.size());
    double z = std::sqrt(1.25 * n) * stat;
    double p = alt == Alternative::indse ? normal_cdf(z) : normal_sf(z);
    return {stat, z, p, alt, p < alpha, static_cast<int>(s.size())};
}

double sigma1_sq(const DistributionSpec& spec) {
    double m2 = spec.second_moment();
    if (!std::isfinite(m2))
        throw numeric_error("sigma1_sq requires a finite second moment");

    const double hi = spec.quantile(1.0 - 1e-12);

    // T(x) accumulated cumulatively along the outer grid would couple the
    // quadratures; instead evaluate it per outer node with its own panel.
    auto inner = [&](double x) {
        return integrate(
            [&](double y) { return y * spec.pdf(y) * spec.survival(y); }, 0.0, x,
            1e-10);
    };
    auto g = [&](double x) {
        double s = spec.survival(x);
        return x - 9.0 * x * s * s - 18.0 * inner(x);
    };

    double m1g = integrate([&](double x) { return g(x) * spec.pdf(x); }, 0.0, hi,
                           1e-8);
    double m2g = integrate(
        [&](double x) {
            double v = g(x);
            return v * v * spec.pdf(x);
        },
        0.0, hi, 1e-8);
    return (m2g - m1g * m1g) / 9.0;
}

Interval null_ci(int n, double alpha) {
    if (n < 3) throw input_error("null_ci: need n >= 3");
    double half = normal_quantile(1.0 - alpha / 2.0) *
                  std::sqrt(4.0 / (5.0 * static_cast<double>(n)));
    return {-half, half};
}

} // namespace exptest
