#pragma once

#include <exception>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lcs {

inline bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

inline int hardware_jobs() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Serial reference loop; the parallel path must produce bit-identical
// results, which holds as long as the body only writes to slot i.
inline void serial_for(long n, const std::function<void(long)>& body) {
    for (long i = 0; i < n; ++i) body(i);
}

// Parallel loop over [0, n); jobs <= 0 means the OpenMP default.  The first
// exception thrown by a body is rethrown after the loop drains.
inline void parallel_for(long n, const std::function<void(long)>& body,
                         int jobs = 0) {
#ifdef _OPENMP
    if (jobs == 1 || n < 2) {
        serial_for(n, body);
        return;
    }
    std::exception_ptr first;
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
#pragma omp critical
            if (!first) first = std::current_exception();
        }
    }
    if (first) std::rethrow_exception(first);
#else
    (void)jobs;
    serial_for(n, body);
#endif
}

}  // namespace lcs
