#pragma once

#include <cstdint>

#include "exptest/estimator.hpp"

namespace exptest {

// Benchmark exponentiality tests used in the power comparison.
enum class Competitor { cn, tn, w2, sstar, klc };

const char* to_string(Competitor k);

// C_n = (1/n) sum (X_i / Xbar) exp(-X_i / Xbar); equals 1/4 in expectation
// under the null. Two-sided rejection on |C_n - 1/4|.
double cn_statistic(const Sample& s);

// Kullback-Leibler-type spacings ratio; rejects for large values.
double tn_statistic(const Sample& s);

// Cramer-von Mises sum with lambda estimated by the sample mean; rejects for
// large values.
double w2_statistic(const Sample& s);

// Finkelstein-Schafer-type maximum-deviation sum; rejects for large values.
double sstar_statistic(const Sample& s);

// Vasicek-window entropy-type statistic; rejects for small values. Window m
// must satisfy 1 <= m < n/2; indices are clamped to the sample boundary.
double klc_statistic(const Sample& s, int window);

// round(sqrt(n)) clamped into the valid window range.
int klc_default_window(int n);

// Normal-approximation cut for |C_n - 1/4|: z_{1-alpha/2} / sqrt(382 n / 5).
double cn_normal_threshold(int n, double alpha);

// Null quantile of the rejection statistic from simulated standard
// exponential samples: upper (1-alpha) quantile for tn/w2/sstar and for
// |C_n - 1/4|, lower alpha quantile for klc.
double mc_competitor_quantile(Competitor kind, int n, double alpha,
                              std::int64_t reps, std::uint64_t seed,
                              int workers = 1, int window = 0);

// Applies the rejection direction for the given statistic and threshold.
bool competitor_rejects(Competitor kind, double stat, double threshold);

} // namespace exptest
