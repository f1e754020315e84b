#include "exptest/simulation.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "exptest/errors.hpp"
#include "exptest/estimator.hpp"
#include "exptest/exact_null.hpp"
#include "exptest/parallel.hpp"
#include "exptest/rng.hpp"

namespace exptest {

const char* to_string(TestKind k) {
    switch (k) {
        case TestKind::ndse: return "ndse";
        case TestKind::cn: return "cn";
        case TestKind::tn: return "tn";
        case TestKind::w2: return "w2";
        case TestKind::sstar: return "sstar";
        case TestKind::klc: return "klc";
    }
    return "?";
}

TestKind test_kind_from_string(const std::string& name) {
    if (name == "ndse") return TestKind::ndse;
    if (name == "cn") return TestKind::cn;
    if (name == "tn") return TestKind::tn;
    if (name == "w2") return TestKind::w2;
    if (name == "sstar") return TestKind::sstar;
    if (name == "klc") return TestKind::klc;
    throw input_error("unknown test: " + name);
}

std::vector<CriticalRow> critical_table(const std::vector<int>& sizes,
                                        const std::vector<double>& alphas,
                                        Alternative alt, std::int64_t mc_reps,
                                        std::uint64_t seed, int workers) {
    std::vector<CriticalRow> rows;
    for (int n : sizes) {
        for (double alpha : alphas) {
            if (!(alpha > 0.0 && alpha < 1.0))
                throw input_error("critical_table: alpha must be in (0,1)");
            double value;
            if (n <= ExactNull::max_supported_n) {
                value = ExactNull(n).critical_value(alpha, alt);
            } else {
                double p = alt == Alternative::indse ? alpha : 1.0 - alpha;
                value = mc_null_quantile(n, p, mc_reps, seed, workers);
            }
            rows.push_back({n, alpha, value});
        }
    }
    return rows;
}

namespace {

Competitor as_competitor(TestKind k) {
    switch (k) {
        case TestKind::cn: return Competitor::cn;
        case TestKind::tn: return Competitor::tn;
        case TestKind::w2: return Competitor::w2;
        case TestKind::sstar: return Competitor::sstar;
        case TestKind::klc: return Competitor::klc;
        default: throw input_error("not a benchmark test");
    }
}

// A rejection region: one-sided tests use `lo` only, the two-sided
// departure-measure test fills both tails.
struct Cutoff {
    double lo = 0.0;
    double hi = 0.0;
};

// Null thresholds keyed by (test, n), calibrated once per study.
class ThresholdCache {
public:
    ThresholdCache(const SimConfig& config, Alternative ndse_direction,
                   bool ndse_two_sided)
        : config_(config),
          ndse_direction_(ndse_direction),
          ndse_two_sided_(ndse_two_sided) {}

    Cutoff get(TestKind test, int n) {
        auto key = std::make_pair(test, n);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Cutoff value = compute(test, n);
        cache_.emplace(key, value);
        return value;
    }

private:
    double ndse_quantile(int n, double p) const {
        if (n <= ExactNull::max_supported_n) {
            ExactNull law(n);
            return p <= 0.5 ? law.critical_value(p, Alternative::indse)
                            : law.critical_value(1.0 - p, Alternative::dndse);
        }
        return mc_null_quantile(n, p, config_.threshold_reps, config_.seed,
                                config_.workers);
    }

    Cutoff compute(TestKind test, int n) const {
        if (test == TestKind::ndse) {
            if (ndse_two_sided_)
                return {ndse_quantile(n, config_.alpha / 2.0),
                        ndse_quantile(n, 1.0 - config_.alpha / 2.0)};
            double p = ndse_direction_ == Alternative::indse ? config_.alpha
                                                             : 1.0 - config_.alpha;
            return {ndse_quantile(n, p), 0.0};
        }
        int window = test == TestKind::klc
                         ? (config_.klc_window > 0 ? config_.klc_window
                                                   : klc_default_window(n))
                         : 0;
        return {mc_competitor_quantile(as_competitor(test), n, config_.alpha,
                                       config_.threshold_reps, config_.seed,
                                       config_.workers, window),
                0.0};
    }

    const SimConfig& config_;
    Alternative ndse_direction_;
    bool ndse_two_sided_;
    std::map<std::pair<TestKind, int>, Cutoff> cache_;
};

bool rejects(TestKind test, const Sample& sample, const Cutoff& cut,
             const AltSpec& alt, int klc_window) {
    const double threshold = cut.lo;
    switch (test) {
        case TestKind::ndse: {
            double stat = statistic(sample);
            if (alt.two_sided) return stat < cut.lo || stat > cut.hi;
            return alt.direction == Alternative::indse ? stat < threshold
                                                       : stat > threshold;
        }
        case TestKind::cn:
            return competitor_rejects(Competitor::cn, cn_statistic(sample),
                                      threshold);
        case TestKind::tn:
            return tn_statistic(sample) > threshold;
        case TestKind::w2:
            return w2_statistic(sample) > threshold;
        case TestKind::sstar:
            return sstar_statistic(sample) > threshold;
        case TestKind::klc:
            return klc_statistic(sample, klc_window) < threshold;
    }
    return false;
}

} // namespace

std::vector<PowerCell> power_study(const SimConfig& config,
                                   const std::vector<AltSpec>& alternatives) {
    if (config.reps < 1) throw input_error("power_study: reps must be positive");
    if (config.sizes.empty()) throw input_error("power_study: no sample sizes");
    if (config.tests.empty()) throw input_error("power_study: no tests selected");
    for (int n : config.sizes)
        if (n < 3) throw input_error("power_study: need n >= 3");

    std::vector<PowerCell> cells;
    const std::size_t reps = static_cast<std::size_t>(config.reps);

    for (const auto& alt : alternatives) {
        ThresholdCache thresholds(config, alt.direction, alt.two_sided);
        const std::uint64_t family_hash = label_hash(alt.dist.describe().c_str());
        for (int n : config.sizes) {
            std::vector<Cutoff> cutoff(config.tests.size());
            std::vector<int> windows(config.tests.size(), 0);
            for (std::size_t t = 0; t < config.tests.size(); ++t) {
                cutoff[t] = thresholds.get(config.tests[t], n);
                if (config.tests[t] == TestKind::klc)
                    windows[t] = config.klc_window > 0 ? config.klc_window
                                                       : klc_default_window(n);
            }

            // One byte per (replication, test); replication streams depend
            // only on (seed, family, n, r), so every test sees the same data
            // and results are identical for any worker count.
            std::vector<std::uint8_t> rej(reps * config.tests.size());
            const std::uint64_t ns = stream_id(
                config.seed, label_hash("power") ^ family_hash ^
                                 (static_cast<std::uint64_t>(n) << 20));
            parallel_for(config.reps, config.workers, [&](std::int64_t r) {
                RngStream rng(ns, static_cast<std::uint64_t>(r));
                Sample sample(alt.dist.sample(static_cast<std::size_t>(n), rng));
                for (std::size_t t = 0; t < config.tests.size(); ++t)
                    rej[static_cast<std::size_t>(r) * config.tests.size() + t] =
                        rejects(config.tests[t], sample, cutoff[t], alt,
                                windows[t])
                            ? 1
                            : 0;
            });

            for (std::size_t t = 0; t < config.tests.size(); ++t) {
                std::size_t hits = 0;
                for (std::size_t r = 0; r < reps; ++r)
                    hits += rej[r * config.tests.size() + t];
                double p = static_cast<double>(hits) / static_cast<double>(reps);
                double se = std::sqrt(p * (1.0 - p) / static_cast<double>(reps));
                cells.push_back(
                    {config.tests[t], alt.dist.describe(), n, p, se});
            }
        }
    }
    return cells;
}

std::vector<PowerCell> size_study(const SimConfig& config, Alternative alt) {
    return power_study(config, {{DistributionSpec::exponential(1.0), alt}});
}

std::string to_tsv(const std::vector<CriticalRow>& rows) {
    std::ostringstream out;
    out.precision(10);
    out << "n\talpha\tcritical_value\n";
    for (const auto& r : rows)
        out << r.n << '\t' << r.alpha << '\t' << r.value << '\n';
    return out.str();
}

std::string to_json(const std::vector<CriticalRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
        arr.push_back({{"n", r.n}, {"alpha", r.alpha}, {"critical_value", r.value}});
    return arr.dump(2);
}

std::string to_tsv(const std::vector<PowerCell>& cells) {
    std::ostringstream out;
    out.precision(6);
    out << "test\tfamily\tn\tpower\tmc_se\n";
    for (const auto& c : cells)
        out << to_string(c.test) << '\t' << c.family << '\t' << c.n << '\t'
            << c.power << '\t' << c.mc_se << '\n';
    return out.str();
}

std::string to_json(const std::vector<PowerCell>& cells) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : cells)
        arr.push_back({{"test", to_string(c.test)},
                       {"family", c.family},
                       {"n", c.n},
                       {"power", c.power},
                       {"mc_se", c.mc_se}});
    return arr.dump(2);
}

} // namespace exptest
