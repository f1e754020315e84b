#include "exptest/censored.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "exptest/errors.hpp"
#include "exptest/estimator.hpp"
#include "exptest/exact_null.hpp"
#include "exptest/parallel.hpp"
#include "exptest/rng.hpp"

namespace exptest {

CensoredSample::CensoredSample(std::vector<double> times, std::vector<int> events)
    : times_(std::move(times)), events_(std::move(events)) {
    if (times_.empty()) throw input_error("censored sample is empty");
    if (times_.size() != events_.size())
        throw input_error("times and event indicators differ in length");
    n_events_ = 0;
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (!(times_[i] > 0.0) || !std::isfinite(times_[i]))
            throw input_error("censored times must be strictly positive finite numbers");
        if (events_[i] != 0 && events_[i] != 1)
            throw input_error("event indicators must be 0 (censored) or 1 (event)");
        n_events_ += static_cast<std::size_t>(events_[i]);
    }
}

CensoredSample CensoredSample::without(std::size_t index) const {
    std::vector<double> t;
    std::vector<int> e;
    t.reserve(times_.size() - 1);
    e.reserve(times_.size() - 1);
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (i == index) continue;
        t.push_back(times_[i]);
        e.push_back(events_[i]);
    }
    return {std::move(t), std::move(e)};
}

StepSurvival::StepSurvival(std::vector<double> jump_times,
                           std::vector<double> values)
    : times_(std::move(jump_times)), values_(std::move(values)) {}

double StepSurvival::value(double t) const {
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    if (it == times_.begin()) return 1.0;
    return values_[static_cast<std::size_t>(it - times_.begin()) - 1];
}

double StepSurvival::left_limit(double t) const {
    auto it = std::lower_bound(times_.begin(), times_.end(), t);
    if (it == times_.begin()) return 1.0;
    return values_[static_cast<std::size_t>(it - times_.begin()) - 1];
}

StepSurvival km_censoring(const CensoredSample& cs) {
    const std::size_t n = cs.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return cs.times()[a] < cs.times()[b];
    });

    std::vector<double> jumps, vals;
    double surv = 1.0;
    std::size_t i = 0;
    while (i < n) {
        double t = cs.times()[order[i]];
        std::size_t at_risk = n - i;
        std::size_t censored = 0, failures = 0;
        while (i < n && cs.times()[order[i]] == t) {
            if (cs.events()[order[i]] == 1)
                ++failures;
            else
                ++censored;
            ++i;
        }
        if (censored == 0) continue;
        // failures at a tied time leave the risk set before the censorings
        std::size_t risk = at_risk - failures;
        surv *= risk > 0 ? 1.0 - static_cast<double>(censored) / static_cast<double>(risk)
                         : 0.0;
        jumps.push_back(t);
        vals.push_back(surv);
    }
    return {std::move(jumps), std::move(vals)};
}

namespace {

struct WeightedObs {
    double x;
    double w;
};

// IPCW weights delta_i / K_c(X*_i -), sorted by observation time.
std::vector<WeightedObs> sorted_weights(const CensoredSample& cs) {
    if (cs.n_events() == 0)
        throw input_error("no uncensored observations");
    StepSurvival km = km_censoring(cs);
    std::vector<WeightedObs> obs(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        double w = 0.0;
        if (cs.events()[i] == 1) {
            double k = km.left_limit(cs.times()[i]);
            if (!(k > 0.0))
                throw numeric_error(
                    "degenerate IPCW weight: censoring survival vanished at an "
                    "uncensored observation");
            w = 1.0 / k;
        }
        obs[i] = {cs.times()[i], w};
    }
    std::sort(obs.begin(), obs.end(),
              [](const WeightedObs& a, const WeightedObs& b) { return a.x < b.x; });
    return obs;
}

double triple_normalizer(std::size_t n) {
    double nn = static_cast<double>(n);
    return nn * (nn - 1.0) * (nn - 2.0);
}

} // namespace

double ipcw_delta(const CensoredSample& cs) {
    if (cs.n_events() < 3)
        throw input_error("need at least 3 uncensored observations");
    auto obs = sorted_weights(cs);
    const std::size_t n = obs.size();

    double s1 = 0.0, s2 = 0.0;
    for (const auto& o : obs) {
        s1 += o.w;
        s2 += o.w * o.w;
    }
    const double e2_all = 0.5 * (s1 * s1 - s2);

    // sum over triples of (x_i + x_j + x_k) w_i w_j w_k
    double term_sum = 0.0;
    for (const auto& o : obs)
        term_sum += o.x * o.w * (e2_all - o.w * (s1 - o.w));

    // strict-minimum mass: pairs of weights among strictly larger values
    double term_min = 0.0;
    double sg1 = 0.0, sg2 = 0.0; // suffix sums over strictly larger values
    std::size_t i = n;
    while (i > 0) {
        std::size_t j = i;
        while (j > 0 && obs[j - 1].x == obs[i - 1].x) --j; // tie block [j, i)
        double e2_greater = 0.5 * (sg1 * sg1 - sg2);
        for (std::size_t k = j; k < i; ++k) {
            term_min += obs[k].x * obs[k].w * e2_greater;
            sg1 += obs[k].w;
            sg2 += obs[k].w * obs[k].w;
        }
        i = j;
    }

    return (2.0 * term_sum - 18.0 * term_min) / triple_normalizer(n);
}

double ipcw_delta_brute(const CensoredSample& cs) {
    if (cs.n_events() < 3)
        throw input_error("need at least 3 uncensored observations");
    auto obs = sorted_weights(cs);
    const std::size_t n = obs.size();
    double acc = 0.0;
    for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                acc += kernel_h(obs[i].x, obs[j].x, obs[k].x) * obs[i].w *
                       obs[j].w * obs[k].w;
    return 6.0 * acc / triple_normalizer(n);
}

double ipcw_mean(const CensoredSample& cs) {
    auto obs = sorted_weights(cs);
    double acc = 0.0;
    for (const auto& o : obs) acc += o.x * o.w;
    return acc / static_cast<double>(obs.size());
}

double censored_statistic(const CensoredSample& cs) {
    return ipcw_delta(cs) / ipcw_mean(cs);
}

double censored_jackknife_se(const CensoredSample& cs) {
    const std::size_t n = cs.size();
    std::vector<double> loo(n);
    for (std::size_t i = 0; i < n; ++i)
        loo[i] = censored_statistic(cs.without(i));
    double mean = std::accumulate(loo.begin(), loo.end(), 0.0) /
                  static_cast<double>(n);
    double ss = 0.0;
    for (double v : loo) ss += (v - mean) * (v - mean);
    return std::sqrt((static_cast<double>(n) - 1.0) / static_cast<double>(n) * ss);
}

namespace {

// inverse-cdf draw from a step survival curve; the mass the curve never
// releases (largest event uncensored) maps to +infinity, i.e. no censoring
double sample_step_survival(const std::vector<double>& jumps,
                            const std::vector<double>& vals, double u) {
    auto it = std::partition_point(vals.begin(), vals.end(),
                                   [&](double v) { return v >= u; });
    if (it == vals.end()) return std::numeric_limits<double>::infinity();
    return jumps[static_cast<std::size_t>(it - vals.begin())];
}

} // namespace

TestReport censored_test(const CensoredSample& cs, double alpha, Alternative alt,
                         std::uint64_t seed, std::int64_t mc_reps, int workers) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw input_error("censored_test: alpha must be in (0,1)");
    if (mc_reps < 100)
        throw input_error("censored_test: need at least 100 null replications");
    const std::size_t n = cs.size();
    TestReport report;
    report.method = "censored-ipcw";
    report.n = static_cast<int>(n);
    report.alpha = alpha;
    report.alternative = alt;

    double stat = censored_statistic(cs);
    report.statistic = stat;
    if (n < 10)
        report.warnings.push_back(
            "fewer than 10 observations; the simulated null law is coarse");

    double total = std::accumulate(cs.times().begin(), cs.times().end(), 0.0);
    double rate = static_cast<double>(cs.n_events()) / total;
    StepSurvival kc = km_censoring(cs);
    const std::vector<double>& jumps = kc.jump_times();
    const std::vector<double>& vals = kc.values();

    const std::uint64_t ns = stream_id(seed, label_hash("censored-null"));
    std::vector<double> null_stats(static_cast<std::size_t>(mc_reps),
                                   std::numeric_limits<double>::quiet_NaN());
    parallel_for(mc_reps, workers, [&](std::int64_t r) {
        RngStream rng(ns, static_cast<std::uint64_t>(r));
        std::vector<double> t(n);
        std::vector<int> e(n);
        for (std::size_t i = 0; i < n; ++i) {
            double x = rng.next_exponential() / rate;
            double c = sample_step_survival(jumps, vals, rng.next_unit());
            t[i] = std::min(x, c);
            e[i] = x <= c ? 1 : 0;
        }
        try {
            null_stats[static_cast<std::size_t>(r)] =
                censored_statistic(CensoredSample(std::move(t), std::move(e)));
        } catch (const std::exception&) {
            // resample too censored to evaluate; dropped below
        }
    });

    std::vector<double> valid;
    valid.reserve(null_stats.size());
    for (double v : null_stats)
        if (std::isfinite(v)) valid.push_back(v);
    // a replication degenerates when it draws fewer than 3 events; if more
    // than a quarter do, the censoring is too heavy to calibrate the null law
    if (valid.size() < 3 * static_cast<std::size_t>(mc_reps) / 4) {
        report.p_value = std::numeric_limits<double>::quiet_NaN();
        report.decision = Decision::fail_to_reject;
        report.warnings.push_back(
            "degenerate null simulation: too many replications had fewer than "
            "3 events");
        return report;
    }

    std::size_t extreme = 0;
    for (double v : valid) {
        if (alt == Alternative::indse ? v <= stat : v >= stat) ++extreme;
    }
    report.p_value = (1.0 + static_cast<double>(extreme)) /
                     (1.0 + static_cast<double>(valid.size()));
    report.critical_value = empirical_quantile(
        valid, alt == Alternative::indse ? alpha : 1.0 - alpha);
    report.decision =
        report.p_value < alpha ? Decision::reject : Decision::fail_to_reject;
    return report;
}

} // namespace exptest
