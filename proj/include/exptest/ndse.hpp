#pragma once

#include <vector>

#include "exptest/distributions.hpp"

namespace exptest {

enum class MonotoneClass { indse, dndse, constant_exponential, mixed };

const char* to_string(MonotoneClass c);

// Survival function of the age-replacement lifetime: the item is renewed at
// failure or at age t, whichever comes first.
struct AgeReplacementSurvival {
    DistributionSpec base;
    double replacement_time;

    double operator()(double x) const;
};

// Normalized dynamic survival extropy at t:
//   eta(t) = -1/2 * int_0^t Fbar^2(u) du / (1 - Fbar^2(t)).
// Requires t inside the support (Fbar(t) < 1).
double ndse_at(const DistributionSpec& spec, double t);

// Cumulative residual extropy -1/2 int_0^inf R_t^2 of the age-replacement
// lifetime, summed term by term over the renewal cycles. Coincides with
// ndse_at for every base law and replacement time.
double age_replacement_crj(const AgeReplacementSurvival& ar);

// Sign function of monotonicity: negative iff the NDSE is increasing at x.
//   delta(x) = (1 - Fbar^2(x)) Fbar(x) - 2 f(x) int_0^x Fbar^2.
double delta_fn(const DistributionSpec& spec, double x);

MonotoneClass classify(const DistributionSpec& spec,
                       const std::vector<double>& grid);

// 200 log-spaced points between the 0.1% and 99.9% quantiles.
std::vector<double> default_classify_grid(const DistributionSpec& spec);

struct DepartureMeasure {
    double delta;      // Delta(F) = mu - 3 E[min(X1,X2,X3)]
    double delta_star; // Delta(F) / mu
};

DepartureMeasure delta_functional(const DistributionSpec& spec);

} // namespace exptest
