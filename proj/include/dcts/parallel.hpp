#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dcts {

/// True when the build has OpenMP support.
inline bool parallel_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

inline int hardware_workers() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Runs fn(i) for i in [0, n). workers <= 1 runs the serial reference path.
/// Iterations must be independent; each writes only its own output slot, so
/// results are identical regardless of scheduling.
template <typename Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
#ifdef _OPENMP
    if (workers > 1 && n > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(workers)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            fn(static_cast<std::size_t>(i));
        }
        return;
    }
#else
    (void)workers;
#endif
    for (std::size_t i = 0; i < n; ++i) {
        fn(i);
    }
}

}  // namespace dcts
