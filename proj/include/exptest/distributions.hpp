#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "exptest/rng.hpp"

namespace exptest {

enum class Family {
    exponential,
    weibull,
    gamma,
    lognormal,
    uniform,
    rayleigh,
    log_logistic,
};

const char* to_string(Family f);
Family family_from_string(const std::string& name);

// An immutable parametric lifetime law. Construction validates parameters;
// evaluators assume a valid spec and never re-check.
class DistributionSpec {
public:
    static DistributionSpec exponential(double rate);
    static DistributionSpec weibull(double shape, double scale);
    static DistributionSpec gamma(double shape, double scale);
    static DistributionSpec lognormal(double mu, double sigma);
    static DistributionSpec uniform(double upper); // Uniform(0, upper)
    static DistributionSpec rayleigh(double sigma);
    static DistributionSpec log_logistic(double shape, double scale);

    Family family() const { return family_; }
    // First parameter: shape, or mu for lognormal, rate for exponential.
    double shape() const { return a_; }
    // Second parameter: scale, or sigma for lognormal; unused for
    // exponential/uniform/rayleigh families that carry one parameter in a_.
    double scale() const { return b_; }

    double pdf(double x) const;
    double cdf(double x) const;
    double survival(double x) const;
    double quantile(double p) const; // p in [0, 1)
    double mean() const;
    double second_moment() const;

    double sample(RngStream& rng) const;
    std::vector<double> sample(std::size_t n, RngStream& rng) const;

    std::string describe() const;

private:
    DistributionSpec(Family f, double a, double b) : family_(f), a_(a), b_(b) {}

    Family family_;
    double a_;
    double b_;
};

// Scale choice making E(X^2) / (2 E(X)) = 1 for Weibull/gamma (given shape)
// and lognormal (given mu, which must be < ln 2).
DistributionSpec constrained_scale(Family family, double shape_or_mu);

} // namespace exptest
