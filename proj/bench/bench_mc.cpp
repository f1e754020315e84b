// Compares the serial reference Monte Carlo path (workers = 1) against the
// OpenMP path (workers = 0, all cores) and checks that both produce the same
// numbers.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "exptest/distributions.hpp"
#include "exptest/exact_null.hpp"
#include "exptest/simulation.hpp"

using namespace exptest;

namespace {

template <typename F>
double time_seconds(F&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

} // namespace

int main(int argc, char** argv) {
    std::int64_t reps = argc > 1 ? std::atoll(argv[1]) : 20000;
    const int n = 50;
    const std::uint64_t seed = 7;

    std::printf("Monte Carlo null quantile, n=%d, reps=%lld\n", n,
                static_cast<long long>(reps));
    double q_serial = 0.0, q_parallel = 0.0;
    double t_serial = time_seconds(
        [&] { q_serial = mc_null_quantile(n, 0.05, reps, seed, 1); });
    double t_parallel = time_seconds(
        [&] { q_parallel = mc_null_quantile(n, 0.05, reps, seed, 0); });
    std::printf("  serial    %8.3fs  q=%.6f\n", t_serial, q_serial);
    std::printf("  openmp    %8.3fs  q=%.6f  speedup x%.2f\n", t_parallel,
                q_parallel, t_serial / t_parallel);
    bool same = q_serial == q_parallel;

    std::printf("Power cell, weibull shape 2, n=50, reps=%lld\n",
                static_cast<long long>(reps));
    SimConfig config;
    config.seed = seed;
    config.reps = reps;
    config.sizes = {n};
    config.tests = {TestKind::ndse, TestKind::w2};
    config.threshold_reps = reps;
    std::vector<AltSpec> alts = {
        {constrained_scale(Family::weibull, 2.0), Alternative::indse}};

    std::vector<PowerCell> cells_serial, cells_parallel;
    config.workers = 1;
    double p_serial =
        time_seconds([&] { cells_serial = power_study(config, alts); });
    config.workers = 0;
    double p_parallel =
        time_seconds([&] { cells_parallel = power_study(config, alts); });
    std::printf("  serial    %8.3fs  power(ndse)=%.4f\n", p_serial,
                cells_serial[0].power);
    std::printf("  openmp    %8.3fs  power(ndse)=%.4f  speedup x%.2f\n",
                p_parallel, cells_parallel[0].power, p_serial / p_parallel);
    for (std::size_t i = 0; i < cells_serial.size(); ++i)
        same = same && cells_serial[i].power == cells_parallel[i].power;

    std::printf("serial/openmp results identical: %s\n", same ? "yes" : "NO");
    return same ? 0 : 1;
}
