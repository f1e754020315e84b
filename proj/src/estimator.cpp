#include "exptest/estimator.hpp"

#include <algorithm>
#include <cmath>

#include "exptest/errors.hpp"

namespace exptest {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw input_error("sample is empty");
    for (double v : values_)
        if (!(v > 0.0) || !std::isfinite(v))
            throw input_error("sample values must be strictly positive finite numbers");
    sorted_ = values_;
    std::sort(sorted_.begin(), sorted_.end());
    has_ties_ = std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end();
    double acc = 0.0;
    for (double v : sorted_) acc += v;
    mean_ = acc / static_cast<double>(values_.size());
}

double kernel_h(double x1, double x2, double x3) {
    double s = x1 + x2 + x3;
    if (x1 < x2 && x1 < x3) s -= 9.0 * x1;
    if (x2 < x1 && x2 < x3) s -= 9.0 * x2;
    if (x3 < x1 && x3 < x2) s -= 9.0 * x3;
    return s / 3.0;
}

namespace {

void require_degree(const Sample& s) {
    if (s.size() < 3)
        throw input_error("the kernel has degree 3; need at least 3 observations");
}

// Kahan-compensated accumulator; coefficient magnitudes grow with n and
// cancellation is the dominant error source here.
struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double v) {
        double y = v - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

} // namespace

double ustat_brute(const Sample& s) {
    require_degree(s);
    const auto& x = s.values();
    const std::size_t n = x.size();
    Kahan acc;
    for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                acc.add(kernel_h(x[i], x[j], x[k]));
    double nn = static_cast<double>(n);
    double triples = nn * (nn - 1.0) * (nn - 2.0) / 6.0;
    return acc.sum / triples;
}

double ustat_fast(const Sample& s) {
    require_degree(s);
    const auto& x = s.sorted();
    const std::size_t n = x.size();
    const double nn = static_cast<double>(n);

    // sum over triples of (x_i + x_j + x_k) = C(n-1,2) * sum x
    // sum over triples of min-indicator mass: each value x with g strictly
    // larger observations is the strict minimum of C(g,2) triples.
    Kahan total;
    Kahan mins;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && x[j] == x[i]) ++j; // tie block [i, j)
        double g = static_cast<double>(n - j);
        double pairs = 0.5 * g * (g - 1.0);
        for (std::size_t k = i; k < j; ++k) {
            total.add(x[k]);
            mins.add(x[k] * pairs);
        }
        i = j;
    }
    double denom = nn * (nn - 1.0) * (nn - 2.0);
    return ((nn - 1.0) * (nn - 2.0) * total.sum - 18.0 * mins.sum) / denom;
}

double statistic(const Sample& s) {
    require_degree(s);
    return ustat_fast(s) / s.mean();
}

std::vector<double> spacings(const Sample& s) {
    const auto& x = s.sorted();
    const std::size_t n = x.size();
    std::vector<double> d(n);
    double prev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = static_cast<double>(n - i) * (x[i] - prev);
        prev = x[i];
    }
    return d;
}

std::vector<double> coefficients(int n) {
    if (n < 3) throw input_error("coefficients: need n >= 3");
    std::vector<double> d(n);
    double denom = static_cast<double>(n - 1) * (n - 2);
    for (int i = 1; i <= n; ++i) {
        double num = (3.0 * i - 3.0 * n + 6.0) * (n - i + 1.0) +
                     static_cast<double>(n) * n - 3.0 * n - 4.0;
        d[i - 1] = num / denom;
    }
    return d;
}

} // namespace exptest
