#include "exptest/distributions.hpp"

#include <cmath>
#include <sstream>

#include "exptest/errors.hpp"
#include "exptest/special.hpp"

namespace exptest {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw input_error(std::string(what) + " must be a positive finite number");
}
} // namespace

const char* to_string(Family f) {
    switch (f) {
        case Family::exponential: return "exponential";
        case Family::weibull: return "weibull";
        case Family::gamma: return "gamma";
        case Family::lognormal: return "lognormal";
        case Family::uniform: return "uniform";
        case Family::rayleigh: return "rayleigh";
        case Family::log_logistic: return "log-logistic";
    }
    return "?";
}

Family family_from_string(const std::string& name) {
    if (name == "exponential") return Family::exponential;
    if (name == "weibull") return Family::weibull;
    if (name == "gamma") return Family::gamma;
    if (name == "lognormal") return Family::lognormal;
    if (name == "uniform") return Family::uniform;
    if (name == "rayleigh") return Family::rayleigh;
    if (name == "log-logistic" || name == "loglogistic")
        return Family::log_logistic;
    throw input_error("unknown distribution family: " + name);
}

DistributionSpec DistributionSpec::exponential(double rate) {
    require_positive(rate, "exponential rate");
    return {Family::exponential, rate, 0.0};
}

DistributionSpec DistributionSpec::weibull(double shape, double scale) {
    require_positive(shape, "weibull shape");
    require_positive(scale, "weibull scale");
    return {Family::weibull, shape, scale};
}

DistributionSpec DistributionSpec::gamma(double shape, double scale) {
    require_positive(shape, "gamma shape");
    require_positive(scale, "gamma scale");
    return {Family::gamma, shape, scale};
}

DistributionSpec DistributionSpec::lognormal(double mu, double sigma) {
    if (!std::isfinite(mu)) throw input_error("lognormal mu must be finite");
    require_positive(sigma, "lognormal sigma");
    return {Family::lognormal, mu, sigma};
}

DistributionSpec DistributionSpec::uniform(double upper) {
    require_positive(upper, "uniform upper bound");
    return {Family::uniform, upper, 0.0};
}

DistributionSpec DistributionSpec::rayleigh(double sigma) {
    require_positive(sigma, "rayleigh sigma");
    return {Family::rayleigh, sigma, 0.0};
}

DistributionSpec DistributionSpec::log_logistic(double shape, double scale) {
    require_positive(shape, "log-logistic shape");
    require_positive(scale, "log-logistic scale");
    return {Family::log_logistic, shape, scale};
}

double DistributionSpec::survival(double x) const {
    if (x <= 0.0) return 1.0;
    switch (family_) {
        case Family::exponential: return std::exp(-a_ * x);
        case Family::weibull: return std::exp(-std::pow(x / b_, a_));
        case Family::gamma: return gamma_q(a_, x / b_);
        case Family::lognormal: return normal_sf((std::log(x) - a_) / b_);
        case Family::uniform: return x >= a_ ? 0.0 : 1.0 - x / a_;
        case Family::rayleigh: return std::exp(-x * x / (2.0 * a_ * a_));
        case Family::log_logistic: return 1.0 / (1.0 + std::pow(x / b_, a_));
    }
    return 0.0;
}

double DistributionSpec::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    switch (family_) {
        case Family::exponential: return -std::expm1(-a_ * x);
        case Family::weibull: return -std::expm1(-std::pow(x / b_, a_));
        case Family::gamma: return gamma_p(a_, x / b_);
        case Family::lognormal: return normal_cdf((std::log(x) - a_) / b_);
        case Family::uniform: return x >= a_ ? 1.0 : x / a_;
        case Family::rayleigh: return -std::expm1(-x * x / (2.0 * a_ * a_));
        case Family::log_logistic: {
            double r = std::pow(x / b_, a_);
            return r / (1.0 + r);
        }
    }
    return 1.0;
}

double DistributionSpec::pdf(double x) const {
    if (x <= 0.0) return 0.0;
    switch (family_) {
        case Family::exponential: return a_ * std::exp(-a_ * x);
        case Family::weibull: {
            double r = x / b_;
            return (a_ / b_) * std::pow(r, a_ - 1.0) * std::exp(-std::pow(r, a_));
        }
        case Family::gamma:
            return std::exp((a_ - 1.0) * std::log(x / b_) - x / b_ -
                            std::lgamma(a_)) /
                   b_;
        case Family::lognormal: {
            double z = (std::log(x) - a_) / b_;
            return std::exp(-0.5 * z * z) / (x * b_ * std::sqrt(2.0 * kPi));
        }
        case Family::uniform: return x >= a_ ? 0.0 : 1.0 / a_;
        case Family::rayleigh:
            return (x / (a_ * a_)) * std::exp(-x * x / (2.0 * a_ * a_));
        case Family::log_logistic: {
            double r = std::pow(x / b_, a_);
            double d = 1.0 + r;
            return (a_ / b_) * std::pow(x / b_, a_ - 1.0) / (d * d);
        }
    }
    return 0.0;
}

double DistributionSpec::quantile(double p) const {
    if (!(p >= 0.0 && p < 1.0))
        throw input_error("quantile: p must be in [0,1)");
    if (p == 0.0) return 0.0;
    switch (family_) {
        case Family::exponential: return -std::log1p(-p) / a_;
        case Family::weibull: return b_ * std::pow(-std::log1p(-p), 1.0 / a_);
        case Family::gamma: return b_ * gamma_p_inv(a_, p);
        case Family::lognormal: return std::exp(a_ + b_ * normal_quantile(p));
        case Family::uniform: return a_ * p;
        case Family::rayleigh: return a_ * std::sqrt(-2.0 * std::log1p(-p));
        case Family::log_logistic: return b_ * std::pow(p / (1.0 - p), 1.0 / a_);
    }
    return 0.0;
}

double DistributionSpec::mean() const {
    switch (family_) {
        case Family::exponential: return 1.0 / a_;
        case Family::weibull: return b_ * std::tgamma(1.0 + 1.0 / a_);
        case Family::gamma: return a_ * b_;
        case Family::lognormal: return std::exp(a_ + 0.5 * b_ * b_);
        case Family::uniform: return 0.5 * a_;
        case Family::rayleigh: return a_ * std::sqrt(kPi / 2.0);
        case Family::log_logistic: {
            if (a_ <= 1.0)
                throw numeric_error("log-logistic mean requires shape > 1");
            double t = kPi / a_;
            return b_ * t / std::sin(t);
        }
    }
    return 0.0;
}

double DistributionSpec::second_moment() const {
    switch (family_) {
        case Family::exponential: return 2.0 / (a_ * a_);
        case Family::weibull: return b_ * b_ * std::tgamma(1.0 + 2.0 / a_);
        case Family::gamma: return a_ * (a_ + 1.0) * b_ * b_;
        case Family::lognormal: return std::exp(2.0 * a_ + 2.0 * b_ * b_);
        case Family::uniform: return a_ * a_ / 3.0;
        case Family::rayleigh: return 2.0 * a_ * a_;
        case Family::log_logistic: {
            if (a_ <= 2.0)
                throw numeric_error("log-logistic second moment requires shape > 2");
            double t = 2.0 * kPi / a_;
            return b_ * b_ * t / std::sin(t);
        }
    }
    return 0.0;
}

namespace {

// Marsaglia-Tsang squeeze sampler for Gamma(shape, 1); shape < 1 is boosted
// through Gamma(shape + 1) and a power of a uniform.
double sample_std_gamma(double shape, RngStream& rng) {
    if (shape < 1.0) {
        double u = rng.next_unit();
        return sample_std_gamma(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = rng.next_normal();
        double t = 1.0 + c * x;
        if (t <= 0.0) continue;
        double v = t * t * t;
        double u = rng.next_unit();
        double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

} // namespace

double DistributionSpec::sample(RngStream& rng) const {
    switch (family_) {
        case Family::exponential: return rng.next_exponential() / a_;
        case Family::weibull:
            return b_ * std::pow(rng.next_exponential(), 1.0 / a_);
        case Family::gamma: return b_ * sample_std_gamma(a_, rng);
        case Family::lognormal: return std::exp(a_ + b_ * rng.next_normal());
        case Family::uniform: return a_ * rng.next_unit();
        case Family::rayleigh:
            return a_ * std::sqrt(2.0 * rng.next_exponential());
        case Family::log_logistic: {
            double u = rng.next_unit();
            return b_ * std::pow(u / (1.0 - u), 1.0 / a_);
        }
    }
    return 0.0;
}

std::vector<double> DistributionSpec::sample(std::size_t n, RngStream& rng) const {
    std::vector<double> out(n);
    for (auto& v : out) v = sample(rng);
    return out;
}

std::string DistributionSpec::describe() const {
    std::ostringstream os;
    os << to_string(family_) << "(";
    switch (family_) {
        case Family::exponential: os << "rate=" << a_; break;
        case Family::uniform: os << "0," << a_; break;
        case Family::rayleigh: os << "sigma=" << a_; break;
        case Family::lognormal: os << "mu=" << a_ << ",sigma=" << b_; break;
        default: os << "shape=" << a_ << ",scale=" << b_; break;
    }
    os << ")";
    return os.str();
}

DistributionSpec constrained_scale(Family family, double shape_or_mu) {
    switch (family) {
        case Family::weibull: {
            double beta = shape_or_mu;
            require_positive(beta, "weibull shape");
            double lambda = 2.0 * std::tgamma(1.0 + 1.0 / beta) /
                            std::tgamma(1.0 + 2.0 / beta);
            return DistributionSpec::weibull(beta, lambda);
        }
        case Family::gamma: {
            double beta = shape_or_mu;
            require_positive(beta, "gamma shape");
            return DistributionSpec::gamma(beta, 2.0 / (1.0 + beta));
        }
        case Family::lognormal: {
            double mu = shape_or_mu;
            double ln2 = std::log(2.0);
            if (!(mu < ln2))
                throw input_error("constrained lognormal requires mu < ln 2");
            double sigma2 = (2.0 / 3.0) * (ln2 - mu);
            return DistributionSpec::lognormal(mu, std::sqrt(sigma2));
        }
        default:
            throw input_error(
                "constrained_scale supports weibull, gamma and lognormal only");
    }
}

} // namespace exptest
