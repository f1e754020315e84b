#pragma once

namespace exptest {

// Standard normal cdf Phi(z), accurate to ~1e-16 via erfc.
double normal_cdf(double z);

// Upper tail 1 - Phi(z); keeps relative accuracy deep in the tail, so
// extreme p-values do not underflow to zero prematurely.
double normal_sf(double z);

// Inverse of Phi, refined to full double precision.
double normal_quantile(double p);

// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Inverse of P(a, .): smallest x with P(a,x) = p. Quantile of Gamma(a, 1).
double gamma_p_inv(double a, double p);

} // namespace exptest
