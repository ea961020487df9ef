#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace sixv {

inline unsigned default_thread_count() {
    unsigned n = std::thread::hardware_concurrency();
    return n ? n : 1;
}

// Runs f(i) for i in [0, n) on up to `threads` workers.  Each index writes its
// own output slot, so results are deterministic regardless of scheduling.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    threads = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += threads) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace sixv
