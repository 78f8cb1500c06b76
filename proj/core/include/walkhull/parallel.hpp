#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace walkhull {

inline int resolve_workers(int workers) {
    if (workers > 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Evaluates fn(trial_index) for every index in [0, trials) across a worker
/// pool and returns the results in index order. Each trial derives its own
/// randomness from its index, so the output is identical for any worker
/// count or scheduling.
template <typename Fn>
auto run_trials(std::size_t trials, int workers, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
    using Result = decltype(fn(std::size_t{0}));
    std::vector<Result> results(trials);
    const int pool = std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(trials, 1));
    if (pool <= 1) {
        for (std::size_t i = 0; i < trials; ++i) results[i] = fn(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= trials) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (int t = 0; t < pool; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (failed.load()) std::rethrow_exception(error);
    return results;
}

}  // namespace walkhull
