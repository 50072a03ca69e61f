#pragma once

#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cva::par {

/// Runs fn(i) for i in [0, count), with up to `threads` OpenMP workers when
/// threads > 1. Callers write results into disjoint, pre-sized slots keyed by
/// i, so the output is identical to the serial path regardless of thread
/// count. Exceptions are captured per index and the first one (by index) is
/// rethrown after the loop.
template <class Fn>
void for_index(int count, int threads, Fn&& fn) {
    if (count <= 0) return;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(count));
#ifdef _OPENMP
    if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (int i = 0; i < count; ++i) {
            try {
                fn(i);
            } catch (...) {
                errors[static_cast<size_t>(i)] = std::current_exception();
            }
        }
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
        return;
    }
#else
    (void)threads;
#endif
    for (int i = 0; i < count; ++i) fn(i);
}

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace cva::par
