#pragma once

// Static-partition parallel loop; each index is written by exactly one worker,
// so results do not depend on the thread count.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace gsp4 {

/// Worker count used by default (1 unless changed).
std::size_t default_threads();
void set_default_threads(std::size_t n);

template <class F>
void parallel_for(std::size_t count, std::size_t threads, F&& body) {
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += threads) body(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

template <class F>
void parallel_for(std::size_t count, F&& body) {
    parallel_for(count, default_threads(), std::forward<F>(body));
}

}  // namespace gsp4
