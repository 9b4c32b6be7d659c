// SPDX-License-Identifier: Apache-2.0
//
// Deterministic work partitioning for the exhaustive sweep kernels: the
// index space is split into contiguous chunks, chunk results come back in
// chunk order, so merged output is independent of the worker count.

#ifndef SKEWLCD_PARALLEL_HPP
#define SKEWLCD_PARALLEL_HPP

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace skewlcd {

template <typename Fn>
auto parallel_chunks(uint64_t total, unsigned threads, Fn&& fn)
    -> std::vector<decltype(fn(uint64_t{}, uint64_t{}))> {
    using Result = decltype(fn(uint64_t{}, uint64_t{}));
    if (threads <= 1 || total < 2) return {fn(0, total)};

    const unsigned chunk_count = static_cast<unsigned>(std::min<uint64_t>(threads, total));
    std::vector<Result> results(chunk_count);
    std::vector<std::exception_ptr> errors(chunk_count);
    std::vector<std::thread> pool;
    pool.reserve(chunk_count);
    const uint64_t per = total / chunk_count;
    const uint64_t extra = total % chunk_count;
    uint64_t lo = 0;
    for (unsigned c = 0; c < chunk_count; ++c) {
        const uint64_t hi = lo + per + (c < extra ? 1 : 0);
        pool.emplace_back([&results, &errors, &fn, lo, hi, c] {
            try {
                results[c] = fn(lo, hi);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

/// Sum of a per-index counter over [0, total), partitioned as above.
template <typename Fn>
uint64_t parallel_count(uint64_t total, unsigned threads, Fn&& pred) {
    auto chunks = parallel_chunks(total, threads, [&pred](uint64_t lo, uint64_t hi) {
        uint64_t n = 0;
        for (uint64_t i = lo; i < hi; ++i)
            if (pred(i)) ++n;
        return n;
    });
    uint64_t sum = 0;
    for (uint64_t c : chunks) sum += c;
    return sum;
}

}  // namespace skewlcd

#endif  // SKEWLCD_PARALLEL_HPP
