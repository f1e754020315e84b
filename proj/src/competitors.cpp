#include "exptest/competitors.hpp"

#include <algorithm>
#include <cmath>

#include "exptest/errors.hpp"
#include "exptest/exact_null.hpp"
#include "exptest/parallel.hpp"
#include "exptest/rng.hpp"
#include "exptest/special.hpp"

namespace exptest {

const char* to_string(Competitor k) {
    switch (k) {
        case Competitor::cn: return "cn";
        case Competitor::tn: return "tn";
        case Competitor::w2: return "w2";
        case Competitor::sstar: return "sstar";
        case Competitor::klc: return "klc";
    }
    return "?";
}

double cn_statistic(const Sample& s) {
    double xbar = s.mean();
    double acc = 0.0;
    for (double x : s.values()) {
        double r = x / xbar;
        acc += r * std::exp(-r);
    }
    return acc / static_cast<double>(s.size());
}

double tn_statistic(const Sample& s) {
    const auto& x = s.sorted();
    const std::size_t n = x.size();
    if (n < 2) throw input_error("tn_statistic: need n >= 2");
    double sum = 0.0, sumsq = 0.0;
    for (double v : x) {
        sum += v;
        sumsq += v * v;
    }
    double half_ratio = sumsq / (2.0 * sum);
    double spacing_term = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        double f = static_cast<double>(n - i) / static_cast<double>(n);
        spacing_term += f * std::log(f) * (x[i] - x[i - 1]);
    }
    return (spacing_term + half_ratio) / half_ratio;
}

double w2_statistic(const Sample& s) {
    const auto& x = s.sorted();
    const std::size_t n = x.size();
    double lambda = s.mean();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double f0 = -std::expm1(-x[i] / lambda);
        double d = f0 - (2.0 * static_cast<double>(i + 1) - 1.0) /
                            (2.0 * static_cast<double>(n));
        acc += d * d;
    }
    return acc + 1.0 / (12.0 * static_cast<double>(n));
}

double sstar_statistic(const Sample& s) {
    const auto& x = s.sorted();
    const std::size_t n = x.size();
    double lambda = s.mean();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double f0 = -std::expm1(-x[i] / lambda);
        double lo = std::fabs(f0 - static_cast<double>(i) / static_cast<double>(n));
        double hi =
            std::fabs(f0 - static_cast<double>(i + 1) / static_cast<double>(n));
        acc += std::max(lo, hi);
    }
    return acc;
}

int klc_default_window(int n) {
    int m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    int max_m = (n + 1) / 2 - 1; // largest integer < n/2
    return std::clamp(m, 1, std::max(1, max_m));
}

double klc_statistic(const Sample& s, int window) {
    const auto& x = s.sorted();
    const int n = static_cast<int>(x.size());
    if (n < 3) throw input_error("klc_statistic: need n >= 3");
    if (window < 1 || 2 * window >= n)
        throw input_error("klc window must satisfy 1 <= m < n/2");

    auto at = [&](int j) { // boundary padding
        if (j < 1) return x[0];
        if (j > n) return x[static_cast<std::size_t>(n - 1)];
        return x[static_cast<std::size_t>(j - 1)];
    };

    double cmn = 0.0;
    for (int i = 1; i <= n; ++i) {
        double wmean = 0.0;
        for (int j = i - window; j <= i + window; ++j) wmean += at(j);
        wmean /= 2.0 * window + 1.0;
        double num = 0.0, den = 0.0;
        for (int j = i - window; j <= i + window; ++j) {
            num += (at(j) - at(i)) * static_cast<double>(j - i);
            double d = at(j) - wmean;
            den += d * d;
        }
        cmn += std::log(num / (static_cast<double>(n) * den));
    }
    cmn = -cmn / static_cast<double>(n);
    return std::exp(cmn) / (std::exp(1.0) * s.mean());
}

double cn_normal_threshold(int n, double alpha) {
    return normal_quantile(1.0 - alpha / 2.0) /
           std::sqrt(382.0 * static_cast<double>(n) / 5.0);
}

double mc_competitor_quantile(Competitor kind, int n, double alpha,
                              std::int64_t reps, std::uint64_t seed,
                              int workers, int window) {
    if (reps < 1000)
        throw input_error("mc_competitor_quantile: need at least 1000 replications");
    if (kind == Competitor::klc && window == 0) window = klc_default_window(n);

    const std::uint64_t ns =
        stream_id(seed, label_hash(to_string(kind)) ^
                            (static_cast<std::uint64_t>(n) << 8) ^
                            static_cast<std::uint64_t>(window));
    std::vector<double> stats(static_cast<std::size_t>(reps));
    parallel_for(reps, workers, [&](std::int64_t r) {
        RngStream rng(ns, static_cast<std::uint64_t>(r));
        std::vector<double> x(static_cast<std::size_t>(n));
        for (auto& v : x) v = rng.next_exponential();
        Sample sample(std::move(x));
        double v = 0.0;
        switch (kind) {
            case Competitor::cn: v = std::fabs(cn_statistic(sample) - 0.25); break;
            case Competitor::tn: v = tn_statistic(sample); break;
            case Competitor::w2: v = w2_statistic(sample); break;
            case Competitor::sstar: v = sstar_statistic(sample); break;
            case Competitor::klc: v = klc_statistic(sample, window); break;
        }
        stats[static_cast<std::size_t>(r)] = v;
    });
    double p = kind == Competitor::klc ? alpha : 1.0 - alpha;
    return empirical_quantile(stats, p);
}

bool competitor_rejects(Competitor kind, double stat, double threshold) {
    switch (kind) {
        case Competitor::cn: return std::fabs(stat - 0.25) > threshold;
        case Competitor::tn:
        case Competitor::w2:
        case Competitor::sstar: return stat > threshold;
        case Competitor::klc: return stat < threshold;
    }
    return false;
}

} // namespace exptest
