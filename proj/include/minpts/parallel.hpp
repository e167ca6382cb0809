#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace minpts {

// Runs fn(begin, end) over contiguous sub-ranges of [0, n), possibly on
// several threads. Callers must keep per-index outputs independent or reduce
// with exact (integer) arithmetic; the chunking itself carries no randomness.
template <typename Fn>
void parallel_for_ranges(std::size_t n, Fn fn) {
    if (n == 0) return;
    std::size_t hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    std::size_t chunks = std::min(n, hw);
    if (chunks <= 1) {
        fn(std::size_t{0}, n);
        return;
    }
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    std::size_t base = n / chunks, rem = n % chunks, lo = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t size = base + (c < rem ? 1 : 0);
        std::size_t hi = lo + size;
        workers.emplace_back([&, lo, hi] {
            try {
                fn(lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& w : workers) w.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace minpts
