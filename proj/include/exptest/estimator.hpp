#pragma once

#include <cstddef>
#include <vector>

namespace exptest {

// A validated sample of positive lifetimes with a cached sorted view.
class Sample {
public:
    explicit Sample(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& sorted() const { return sorted_; }
    std::size_t size() const { return values_.size(); }
    double mean() const { return mean_; }
    bool has_ties() const { return has_ties_; }

private:
    std::vector<double> values_;
    std::vector<double> sorted_;
    double mean_;
    bool has_ties_;
};

// Kernel of the departure U-statistic:
//   h = 1/3 (x1 + x2 + x3 - 9 sum_i x_i I(x_i < min of the other two)).
// For distinct arguments this is 1/3 (x1 + x2 + x3 - 9 min); arguments tied
// at the minimum receive no indicator mass.
double kernel_h(double x1, double x2, double x3);

// U-statistic over all triples, O(n^3). Reference implementation.
double ustat_brute(const Sample& s);

// Same value via order statistics, O(n log n). Tie-aware: for each value the
// indicator counts pairs drawn from the strictly larger observations, which
// reduces to the closed-form coefficients on distinct data.
double ustat_fast(const Sample& s);

// Scale-invariant test statistic ustat_fast / mean, in [-2, 1].
double statistic(const Sample& s);

// Normalized spacings D_i = (n - i + 1)(X_(i) - X_(i-1)), X_(0) = 0.
std::vector<double> spacings(const Sample& s);

// Spacings coefficients d_{i,n}, i = 1..n:
//   d_{i,n} = ((3i - 3n + 6)(n - i + 1) + n^2 - 3n - 4) / ((n-1)(n-2)).
std::vector<double> coefficients(int n);

} // namespace exptest
