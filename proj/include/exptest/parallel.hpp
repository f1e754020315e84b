#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace exptest {

// Runs fn(i) for i in [0, count). workers == 1 is the serial reference path;
// workers == 0 uses all hardware threads. Callers must make fn(i) independent
// of execution order (e.g. one RNG stream per index) so that results do not
// depend on the worker count.
template <class Fn>
void parallel_for(std::int64_t count, int workers, Fn&& fn) {
#ifdef _OPENMP
    if (workers != 1) {
        int nthreads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(nthreads)
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
#endif
    for (std::int64_t i = 0; i < count; ++i) fn(i);
}

} // namespace exptest
