#include "exptest/rng.hpp"

#include <cmath>

#include "exptest/special.hpp"

namespace exptest {

double RngStream::next_exponential() { return -std::log(next_unit()); }

double RngStream::next_normal() { return normal_quantile(next_unit()); }

} // namespace exptest
