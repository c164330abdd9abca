#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace facelab {

/// Worker budget for the embarrassingly parallel loops (over subsets J,
/// base cells, block pairs). Zero means "all hardware threads".
struct Parallelism {
    unsigned workers = 0;

    unsigned resolved() const {
        if (workers != 0) {
            return workers;
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1u : hw;
    }
};

/// Runs fn(i) for i in [0, count). Each index is visited exactly once; the
/// caller writes results into pre-sized slots so the outcome never depends
/// on scheduling. The first exception thrown by a worker is rethrown.
template <class Fn>
void parallel_for(std::size_t count, Parallelism par, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(par.resolved(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(count);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) {
        pool.emplace_back(body);
    }
    body();
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace facelab
