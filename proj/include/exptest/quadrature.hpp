#pragma once

#include <functional>

namespace exptest {

// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b] with an
// absolute-error target. Callers integrating to infinity truncate the upper
// limit at a far quantile first.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10);

} // namespace exptest
