#pragma once

// Splits a trial range across worker threads and totals an integer per
// trial. Because every trial derives its own generator seed and the tallies
// are exact integers, the total is identical for any thread count.

#include <cstdint>
#include <thread>
#include <vector>

namespace bivseq::detail {

template <class Fn>
std::int64_t sum_over_trials(std::uint64_t trials, unsigned threads, Fn&& fn) {
    if (threads < 2 || trials < 2) {
        std::int64_t acc = 0;
        for (std::uint64_t t = 0; t < trials; ++t) acc += fn(t);
        return acc;
    }
    if (threads > trials) threads = static_cast<unsigned>(trials);

    std::vector<std::int64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) {
        const std::uint64_t lo = trials * i / threads;
        const std::uint64_t hi = trials * (i + 1) / threads;
        pool.emplace_back([&, i, lo, hi] {
            std::int64_t acc = 0;
            for (std::uint64_t t = lo; t < hi; ++t) acc += fn(t);
            partial[i] = acc;
        });
    }
    for (auto& th : pool) th.join();

    std::int64_t total = 0;
    for (std::int64_t p : partial) total += p;
    return total;
}

}  // namespace bivseq::detail
