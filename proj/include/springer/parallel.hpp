#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace springer {

// Execution mode for the verification scans. Serial is the reference path;
// Parallel runs the same per-item checks under OpenMP. Both must produce
// byte-identical reports.
enum class ExecMode { Serial, Parallel };

// Invokes fn(i) for every i in [0, count). In Parallel mode iterations run
// concurrently, so fn must only write to per-index state.
template <class Fn>
void run_indexed(ExecMode mode, std::size_t count, Fn&& fn) {
#ifdef _OPENMP
    if (mode == ExecMode::Parallel) {
        const long long c = static_cast<long long>(count);
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < c; ++i) fn(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

// Runs fn(i, emit) over [0, count) and returns everything emitted, ordered by
// index (and by emission order within one index). The result is identical for
// any schedule and worker count.
template <class T, class Fn>
std::vector<T> collect_indexed(ExecMode mode, std::size_t count, Fn&& fn) {
    std::vector<std::pair<std::size_t, T>> found;
#ifdef _OPENMP
    if (mode == ExecMode::Parallel) {
        const long long c = static_cast<long long>(count);
#pragma omp parallel
        {
            std::vector<std::pair<std::size_t, T>> local;
            auto sink_for = [&local](std::size_t i) {
                return [&local, i](T item) { local.emplace_back(i, std::move(item)); };
            };
#pragma omp for schedule(static) nowait
            for (long long i = 0; i < c; ++i)
                fn(static_cast<std::size_t>(i), sink_for(static_cast<std::size_t>(i)));
#pragma omp critical
            found.insert(found.end(), std::make_move_iterator(local.begin()),
                         std::make_move_iterator(local.end()));
        }
    } else
#endif
    {
        for (std::size_t i = 0; i < count; ++i)
            fn(i, [&found, i](T item) { found.emplace_back(i, std::move(item)); });
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<T> out;
    out.reserve(found.size());
    for (auto& [i, item] : found) {
        (void)i;
        out.push_back(std::move(item));
    }
    return out;
}

}  // namespace springer
