#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pavemat {

/// Runs body(i) for i in [0, count) on up to `jobs` threads.  Work items must
/// be independent; callers that collect results should write into slot i so
/// the outcome does not depend on scheduling.
template <typename F>
void parallel_for(std::size_t count, int jobs, F&& body) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::scoped_lock lock(error_mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace pavemat
