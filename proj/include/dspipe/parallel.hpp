#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace dspipe {

// Applies fn to every index in [0, n) on up to `jobs` workers. Results land
// at their input index, so the output order never depends on scheduling.
// The first exception thrown by any worker is rethrown on the caller.
template <typename Result>
std::vector<Result> parallel_map(size_t n, int jobs,
                                 const std::function<Result(size_t)>& fn) {
    std::vector<Result> results(n);
    if (n == 0) return results;
    if (jobs < 1) jobs = 1;
    const int workers = static_cast<int>(std::min<size_t>(n, static_cast<size_t>(jobs)));
    if (workers == 1) {
        for (size_t i = 0; i < n; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    results[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

} // namespace dspipe
