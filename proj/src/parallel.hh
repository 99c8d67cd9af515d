#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ordmotif::detail
{
    inline auto resolve_threads(std::size_t requested) -> std::size_t
    {
        if (requested == 0)
            requested = std::max(1u, std::thread::hardware_concurrency());
        return requested;
    }

    /// Runs f(0..n-1); f must only touch state owned by its index.
    template <typename F>
    void parallel_for(std::size_t n, std::size_t threads, F && f)
    {
        threads = std::min(resolve_threads(threads), n);
        if (threads <= 1) {
            for (std::size_t i = 0; i < n; ++i)
                f(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        {
            std::vector<std::jthread> workers;
            for (std::size_t t = 0; t < threads; ++t)
                workers.emplace_back([&] {
                    try {
                        for (auto i = next++; i < n; i = next++)
                            f(i);
                    }
                    catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (! failure)
                            failure = std::current_exception();
                        next = n;
                    }
                });
        }
        if (failure)
            std::rethrow_exception(failure);
    }
}
