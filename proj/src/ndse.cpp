#include "exptest/ndse.hpp"

#include <algorithm>
#include <cmath>

#include "exptest/errors.hpp"
#include "exptest/quadrature.hpp"

namespace exptest {

namespace {

double upper_truncation(const DistributionSpec& spec) {
    return spec.quantile(1.0 - 1e-12);
}

double survival_sq_integral(const DistributionSpec& spec, double a, double b) {
    return integrate([&](double u) { double s = spec.survival(u); return s * s; },
                     a, b);
}

} // namespace

const char* to_string(MonotoneClass c) {
    switch (c) {
        case MonotoneClass::indse: return "INDSE";
        case MonotoneClass::dndse: return "DNDSE";
        case MonotoneClass::constant_exponential: return "constant-exponential";
        case MonotoneClass::mixed: return "mixed";
    }
    return "?";
}

double AgeReplacementSurvival::operator()(double x) const {
    if (x <= 0.0) return 1.0;
    const double t = replacement_time;
    double n = std::floor(x / t);
    double st = base.survival(t);
    return std::pow(st, n) * base.survival(x - n * t);
}

double ndse_at(const DistributionSpec& spec, double t) {
    if (!(t > 0.0)) throw input_error("ndse_at: t must be positive");
    if (spec.family() == Family::uniform && t > spec.shape())
        throw input_error("ndse_at: t lies beyond the upper support bound");
    double st = spec.survival(t);
    double denom = 1.0 - st * st;
    if (denom <= 0.0)
        throw numeric_error("ndse_at: t lies outside the support of the law");
    return -0.5 * survival_sq_integral(spec, 0.0, t) / denom;
}

double age_replacement_crj(const AgeReplacementSurvival& ar) {
    const double t = ar.replacement_time;
    if (!(t > 0.0))
        throw input_error("age_replacement_crj: replacement time must be positive");
    double cycle = survival_sq_integral(ar.base, 0.0, t);
    double q = ar.base.survival(t);
    q *= q;
    double sum = 0.0;
    double term = 1.0;
    while (term >= 1e-14) { // geometric tail below quadrature tolerance
        sum += term;
        term *= q;
    }
    return -0.5 * cycle * sum;
}

double delta_fn(const DistributionSpec& spec, double x) {
    if (!(x > 0.0)) throw input_error("delta_fn: x must be positive");
    double s = spec.survival(x);
    return (1.0 - s * s) * s - 2.0 * spec.pdf(x) * survival_sq_integral(spec, 0.0, x);
}

MonotoneClass classify(const DistributionSpec& spec,
                       const std::vector<double>& grid) {
    if (grid.empty()) throw input_error("classify: grid must be nonempty");
    const double tol = 1e-9 * spec.mean();

    bool any_pos = false, any_neg = false;
    double acc = 0.0; // running int_0^x Fbar^2, accumulated across grid points
    double prev = 0.0;
    for (double x : grid) {
        if (!(x > prev))
            throw input_error("classify: grid must be strictly increasing and positive");
        acc += survival_sq_integral(spec, prev, x);
        prev = x;
        double s = spec.survival(x);
        double d = (1.0 - s * s) * s - 2.0 * spec.pdf(x) * acc;
        if (d > tol) any_pos = true;
        if (d < -tol) any_neg = true;
    }
    if (any_pos && any_neg) return MonotoneClass::mixed;
    if (any_neg) return MonotoneClass::indse;
    if (any_pos) return MonotoneClass::dndse;
    return MonotoneClass::constant_exponential;
}

std::vector<double> default_classify_grid(const DistributionSpec& spec) {
    const int npts = 200;
    double lo = spec.quantile(0.001);
    double hi = spec.quantile(0.999);
    if (!(lo > 0.0)) lo = hi * 1e-6;
    std::vector<double> grid(npts);
    double lr = std::log(lo), step = (std::log(hi) - lr) / (npts - 1);
    for (int i = 0; i < npts; ++i) grid[i] = std::exp(lr + i * step);
    return grid;
}

DepartureMeasure delta_functional(const DistributionSpec& spec) {
    double mu = spec.mean();
    double hi = upper_truncation(spec);
    double emin3 = integrate(
        [&](double x) {
            double s = spec.survival(x);
            return s * s * s;
        },
        0.0, hi);
    double delta = mu - 3.0 * emin3;
    return {delta, delta / mu};
}

} // namespace exptest
