#pragma once

#include "exptest/distributions.hpp"
#include "exptest/estimator.hpp"
#include "exptest/report.hpp"

namespace exptest {

struct AsymptoticReport {
    double statistic;   // the scale-invariant departure estimate
    double z;           // sqrt(5n/4) * statistic
    double p;           // one-sided normal p-value per the alternative
    Alternative alternative;
    bool reject;
    int n;
};

// Large-sample test: under the null sqrt(n) * statistic is N(0, 4/5).
// Rejects for z < -z_alpha (INDSE) or z > z_alpha (DNDSE).
AsymptoticReport asymptotic_test(const Sample& s, double alpha, Alternative alt);

// Projection variance of the U-statistic: sqrt(n)(Delta_hat - Delta(F)) is
// asymptotically N(0, 9 sigma1^2) with
//   sigma1^2 = 1/9 Var(X - 9 X Fbar^2(X) - 18 T(X)),
//   T(x) = int_0^x y f(y) Fbar(y) dy.
// Validation aid; the test decision never uses it. For the exponential law
// 9 sigma1^2 = (4/5) mean^2.
double sigma1_sq(const DistributionSpec& spec);

struct Interval {
    double lo, hi;
};

// Two-sided null band for the statistic: +-z_{alpha/2} sqrt(4 / (5n)).
Interval null_ci(int n, double alpha);

} // namespace exptest
