#pragma once

#include <exception>
#include <vector>

#include <omp.h>

namespace splab {

inline int resolve_threads(int requested) {
    return requested > 0 ? requested : omp_get_max_threads();
}

// Runs body(i) for i in [0, count). Each index owns its output slot, so the
// result is independent of the schedule and of the thread count.  Exceptions
// are collected and the one with the lowest index is rethrown, which keeps
// error reporting identical between the serial and parallel paths.
template <class F>
void parallel_for_index(int count, int threads, F&& body) {
    const int nt = resolve_threads(threads);
    if (nt <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(static_cast<size_t>(count));
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (int i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (...) {
            errors[static_cast<size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace splab
