#pragma once

#include <cstddef>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fqring {

/// Execution mode for the enumeration kernels in the verify module.
/// Serial is the reference implementation; Parallel runs the same
/// per-instance work under an OpenMP parallel-for. Both must produce
/// identical reports (instances are indexed, results are reduced in
/// index order).
enum class ExecMode { Serial, Parallel };

inline ExecMode default_exec_mode() {
#ifdef _OPENMP
    return ExecMode::Parallel;
#else
    return ExecMode::Serial;
#endif
}

inline const char* to_string(ExecMode mode) {
    return mode == ExecMode::Serial ? "serial" : "parallel";
}

/// Runs fn(i) for every i in [0, count). The callable must not throw and
/// must write only to its own per-index slots.
template <typename Fn>
void for_each_index(std::size_t count, ExecMode mode, Fn&& fn) {
#ifdef _OPENMP
    if (mode == ExecMode::Parallel) {
        const std::int64_t n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < n; ++i) {
            fn(static_cast<std::size_t>(i));
        }
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < count; ++i) {
        fn(i);
    }
}

} // namespace fqring
