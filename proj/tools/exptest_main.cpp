// Command-line front end for the exponentiality test suite.
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "exptest/asymptotic.hpp"
#include "exptest/censored.hpp"
#include "exptest/competitors.hpp"
#include "exptest/dataio.hpp"
#include "exptest/datasets.hpp"
#include "exptest/errors.hpp"
#include "exptest/estimator.hpp"
#include "exptest/exact_null.hpp"
#include "exptest/fit_test.hpp"
#include "exptest/ndse.hpp"
#include "exptest/parallel.hpp"
#include "exptest/report.hpp"
#include "exptest/rng.hpp"
#include "exptest/simulation.hpp"
#include "exptest/special.hpp"

namespace {

using namespace exptest;

std::vector<double> load_values(const std::string& source) {
    for (const auto& name : builtin_dataset_names())
        if (source == name) return builtin_dataset(name);
    return read_values(source);
}

// "family:shape[:scale]"; the scale defaults to the moment-constrained choice
// for weibull/gamma/lognormal and is the sole parameter otherwise
// (exponential rate, uniform upper bound, rayleigh sigma).
DistributionSpec parse_dist(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw input_error("empty distribution spec");
    Family fam = family_from_string(parts[0]);
    auto num = [&](std::size_t i) {
        try {
            return std::stod(parts.at(i));
        } catch (const std::exception&) {
            throw input_error("bad distribution parameter in '" + text + "'");
        }
    };
    switch (fam) {
        case Family::exponential:
            return DistributionSpec::exponential(parts.size() > 1 ? num(1) : 1.0);
        case Family::uniform:
            return DistributionSpec::uniform(parts.size() > 1 ? num(1) : 1.0);
        case Family::rayleigh:
            return DistributionSpec::rayleigh(parts.size() > 1 ? num(1) : 1.0);
        case Family::weibull:
            if (parts.size() < 2) throw input_error("weibull needs a shape");
            return parts.size() > 2 ? DistributionSpec::weibull(num(1), num(2))
                                    : constrained_scale(fam, num(1));
        case Family::gamma:
            if (parts.size() < 2) throw input_error("gamma needs a shape");
            return parts.size() > 2 ? DistributionSpec::gamma(num(1), num(2))
                                    : constrained_scale(fam, num(1));
        case Family::lognormal:
            if (parts.size() < 2) throw input_error("lognormal needs mu");
            return parts.size() > 2 ? DistributionSpec::lognormal(num(1), num(2))
                                    : constrained_scale(fam, num(1));
        case Family::log_logistic:
            if (parts.size() < 3)
                throw input_error("log_logistic needs shape and scale");
            return DistributionSpec::log_logistic(num(1), num(2));
    }
    throw input_error("unknown family in '" + text + "'");
}

void emit_report(const TestReport& report, const std::string& format) {
    if (format == "json")
        std::cout << to_json(report) << "\n";
    else
        std::cout << to_text(report);
}

TestReport competitor_fit_test(const Sample& sample, Competitor kind,
                               double alpha, std::uint64_t seed,
                               std::int64_t reps, int workers, int window) {
    const int n = static_cast<int>(sample.size());
    TestReport report;
    report.method = to_string(kind);
    report.n = n;
    report.alpha = alpha;
    report.alternative = Alternative::indse; // direction is fixed per statistic

    if (kind == Competitor::cn) {
        double stat = cn_statistic(sample);
        report.statistic = stat;
        double z = std::fabs(stat - 0.25) *
                   std::sqrt(382.0 * static_cast<double>(n) / 5.0);
        report.p_value = 2.0 * normal_sf(z);
        report.critical_value = cn_normal_threshold(n, alpha);
        report.decision = competitor_rejects(kind, stat, report.critical_value)
                              ? Decision::reject
                              : Decision::fail_to_reject;
        report.warnings.push_back(
            "critical_value applies to |statistic - 1/4|");
        return report;
    }

    if (kind == Competitor::klc && window == 0) window = klc_default_window(n);
    double stat = 0.0;
    switch (kind) {
        case Competitor::tn: stat = tn_statistic(sample); break;
        case Competitor::w2: stat = w2_statistic(sample); break;
        case Competitor::sstar: stat = sstar_statistic(sample); break;
        case Competitor::klc: stat = klc_statistic(sample, window); break;
        default: break;
    }
    report.statistic = stat;
    report.critical_value = mc_competitor_quantile(kind, n, alpha, reps, seed,
                                                   workers, window);

    // simulated p-value over the same null replications layout
    const std::uint64_t ns =
        stream_id(seed, label_hash("pvalue") ^ label_hash(to_string(kind)) ^
                            (static_cast<std::uint64_t>(n) << 8) ^
                            static_cast<std::uint64_t>(window));
    std::int64_t extreme = 0;
    std::vector<std::uint8_t> flags(static_cast<std::size_t>(reps));
    parallel_for(reps, workers, [&](std::int64_t r) {
        RngStream rng(ns, static_cast<std::uint64_t>(r));
        std::vector<double> x(static_cast<std::size_t>(n));
        for (auto& v : x) v = rng.next_exponential();
        Sample null_sample(std::move(x));
        double v = 0.0;
        switch (kind) {
            case Competitor::tn: v = tn_statistic(null_sample); break;
            case Competitor::w2: v = w2_statistic(null_sample); break;
            case Competitor::sstar: v = sstar_statistic(null_sample); break;
            case Competitor::klc: v = klc_statistic(null_sample, window); break;
            default: break;
        }
        bool beyond = kind == Competitor::klc ? v <= stat : v >= stat;
        flags[static_cast<std::size_t>(r)] = beyond ? 1 : 0;
    });
    for (auto f : flags) extreme += f;
    report.p_value = (static_cast<double>(extreme) + 1.0) /
                     (static_cast<double>(reps) + 1.0);
    report.decision = competitor_rejects(kind, stat, report.critical_value)
                          ? Decision::reject
                          : Decision::fail_to_reject;
    return report;
}

int run(int argc, char** argv) {
    CLI::App app{"Goodness-of-fit tests for exponentiality based on a "
                 "survival-extropy departure measure"};
    app.require_subcommand(1);

    std::string input, format = "text", alternative = "indse";
    std::string method = "exact";
    double alpha = 0.05;
    std::uint64_t seed = 0;
    std::int64_t reps = 100000;
    int workers = 1;
    int window = 0;

    auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--alpha", alpha, "significance level")
            ->check(CLI::Range(1e-6, 0.999999));
        cmd->add_option("--seed", seed, "random seed");
        cmd->add_option("--workers", workers,
                        "worker threads (1 = serial, 0 = all cores)");
        if (with_format)
            cmd->add_option("--format", format, "output format")
                ->check(CLI::IsMember({"text", "tsv", "json"}));
    };

    // fit-test
    auto* fit = app.add_subcommand(
        "fit-test", "test a complete sample for exponentiality");
    fit->add_option("input", input,
                    "data file or builtin dataset (proschan, locomotive)")
        ->required();
    fit->add_option("--method", method,
                    "exact | asymptotic | cn | tn | w2 | sstar | klc");
    fit->add_option("--alternative", alternative, "indse | dndse")
        ->check(CLI::IsMember({"indse", "dndse"}));
    fit->add_option("--reps", reps, "replications for simulated null laws");
    fit->add_option("--window", window, "spacings window for klc (0 = auto)");
    add_common(fit);

    // fit-test-censored
    auto* fitc = app.add_subcommand(
        "fit-test-censored", "test a right-censored sample (time,status CSV)");
    fitc->add_option("input", input, "two-column CSV file")->required();
    fitc->add_option("--alternative", alternative, "indse | dndse")
        ->check(CLI::IsMember({"indse", "dndse"}));
    fitc->add_option("--reps", reps, "replications for the simulated null law");
    add_common(fitc);

    // critical-values
    std::vector<int> sizes;
    std::vector<double> alphas = {0.01, 0.05};
    std::string cv_method = "exact";
    auto* cv = app.add_subcommand("critical-values",
                                  "null critical values of the statistic");
    cv->add_option("--sizes", sizes, "sample sizes")->required();
    cv->add_option("--alphas", alphas, "significance levels");
    cv->add_option("--method", cv_method, "exact | mc")
        ->check(CLI::IsMember({"exact", "mc"}));
    cv->add_option("--alternative", alternative, "indse | dndse")
        ->check(CLI::IsMember({"indse", "dndse"}));
    cv->add_option("--reps", reps, "replications for the mc method");
    add_common(cv);

    // power
    std::vector<std::string> alt_dists;
    std::vector<std::string> test_names = {"ndse", "cn", "tn", "w2", "sstar", "klc"};
    std::int64_t threshold_reps = 100000;
    auto* pw = app.add_subcommand("power",
                                  "Monte Carlo power/size study");
    pw->add_option("--dist", alt_dists,
                   "alternative laws, family:shape[:scale] (repeatable); "
                   "exponential:1 measures size")
        ->required();
    pw->add_option("--sizes", sizes, "sample sizes")->required();
    pw->add_option("--tests", test_names, "tests to include");
    pw->add_option("--reps", reps, "power replications");
    pw->add_option("--threshold-reps", threshold_reps,
                   "replications for simulated null thresholds");
    pw->add_option("--alternative", alternative,
                   "rejection direction for the ndse test; two-sided splits "
                   "alpha between both tails")
        ->check(CLI::IsMember({"indse", "dndse", "two-sided"}));
    pw->add_option("--window", window, "spacings window for klc (0 = auto)");
    add_common(pw);

    // ndse
    std::string dist_text;
    double tmin = 0.0, tmax = 0.0;
    int points = 50;
    auto* nd = app.add_subcommand(
        "ndse", "evaluate the survival-extropy curve and monotone class");
    nd->add_option("--dist", dist_text, "family:shape[:scale]")->required();
    nd->add_option("--tmin", tmin, "grid start (default: 0.1% quantile)");
    nd->add_option("--tmax", tmax, "grid end (default: 99.9% quantile)");
    nd->add_option("--points", points, "grid size")->check(CLI::Range(2, 100000));
    nd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "tsv", "json"}));

    CLI11_PARSE(app, argc, argv);

    const bool two_sided = alternative == "two-sided";
    Alternative alt =
        two_sided ? Alternative::indse : alternative_from_string(alternative);

    if (fit->parsed()) {
        Sample sample(load_values(input));
        TestReport report;
        if (method == "exact")
            report = exact_fit_test(sample, alpha, alt, seed, reps, workers);
        else if (method == "asymptotic")
            report = asymptotic_fit_test(sample, alpha, alt);
        else if (method == "cn" || method == "tn" || method == "w2" ||
                 method == "sstar" || method == "klc") {
            Competitor kind = method == "cn"      ? Competitor::cn
                              : method == "tn"    ? Competitor::tn
                              : method == "w2"    ? Competitor::w2
                              : method == "sstar" ? Competitor::sstar
                                                  : Competitor::klc;
            report = competitor_fit_test(sample, kind, alpha, seed, reps,
                                         workers, window);
        }
        else
            throw input_error("unknown method: " + method);
        emit_report(report, format);
        return 0;
    }

    if (fitc->parsed()) {
        CensoredRecords rec = read_censored(input);
        CensoredSample cs(rec.times, rec.events);
        if (cs.n_events() == 0) throw input_error("no uncensored observations");
        TestReport report = censored_test(cs, alpha, alt, seed, reps, workers);
        emit_report(report, format);
        if (std::isnan(report.p_value)) return 3;
        return 0;
    }

    if (cv->parsed()) {
        std::vector<CriticalRow> rows;
        if (cv_method == "exact") {
            rows = critical_table(sizes, alphas, alt, reps, seed, workers);
        } else {
            for (int n : sizes)
                for (double a : alphas) {
                    double p = alt == Alternative::indse ? a : 1.0 - a;
                    rows.push_back(
                        {n, a, mc_null_quantile(n, p, reps, seed, workers)});
                }
        }
        std::cout << (format == "json" ? to_json(rows) : to_tsv(rows));
        if (format == "json") std::cout << "\n";
        return 0;
    }

    if (pw->parsed()) {
        SimConfig config;
        config.seed = seed;
        config.reps = reps;
        config.sizes = sizes;
        config.alpha = alpha;
        config.workers = workers;
        config.threshold_reps = threshold_reps;
        config.klc_window = window;
        for (const auto& name : test_names)
            config.tests.push_back(test_kind_from_string(name));
        std::vector<AltSpec> alternatives;
        for (const auto& text : alt_dists)
            alternatives.push_back({parse_dist(text), alt, two_sided});
        auto cells = power_study(config, alternatives);
        std::cout << (format == "json" ? to_json(cells) : to_tsv(cells));
        if (format == "json") std::cout << "\n";
        return 0;
    }

    if (nd->parsed()) {
        DistributionSpec spec = parse_dist(dist_text);
        if (tmin <= 0.0) tmin = spec.quantile(0.001);
        if (tmax <= 0.0) tmax = spec.quantile(0.999);
        if (!(tmax > tmin)) throw input_error("need tmax > tmin");
        std::vector<double> grid(static_cast<std::size_t>(points));
        for (int i = 0; i < points; ++i)
            grid[static_cast<std::size_t>(i)] =
                tmin + (tmax - tmin) * static_cast<double>(i) /
                           static_cast<double>(points - 1);
        MonotoneClass cls = classify(spec, grid);
        DepartureMeasure dep = delta_functional(spec);

        if (format == "json") {
            nlohmann::json out;
            out["distribution"] = spec.describe();
            out["class"] = to_string(cls);
            out["delta"] = dep.delta;
            out["delta_star"] = dep.delta_star;
            nlohmann::json curve = nlohmann::json::array();
            for (double t : grid)
                curve.push_back({{"t", t},
                                 {"ndse", ndse_at(spec, t)},
                                 {"delta_fn", delta_fn(spec, t)}});
            out["curve"] = curve;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "# " << spec.describe() << "  class=" << to_string(cls)
                      << "  delta=" << dep.delta
                      << "  delta_star=" << dep.delta_star << "\n";
            std::cout << "t\tndse\tdelta_fn\n";
            std::cout.precision(10);
            for (double t : grid)
                std::cout << t << '\t' << ndse_at(spec, t) << '\t'
                          << delta_fn(spec, t) << '\n';
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const exptest::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const exptest::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
