#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace fibexp::detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Splits [begin, end) into one contiguous chunk per worker and runs
// body(chunk_begin, chunk_end, chunk_index). Callers make results
// independent of the split by merging per-chunk state with a total order.
template <typename F>
void parallel_chunks(long begin, long end, unsigned threads, F&& body) {
    const long n = end - begin;
    if (n <= 0) return;
    const unsigned t = static_cast<unsigned>(
        std::min<long>(static_cast<long>(resolve_threads(threads)), n));
    if (t <= 1) {
        body(begin, end, 0u);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    const long step = n / t;
    const long extra = n % t;
    long lo = begin;
    for (unsigned i = 0; i < t; ++i) {
        const long hi = lo + step + (static_cast<long>(i) < extra ? 1 : 0);
        pool.emplace_back([&body, lo, hi, i] { body(lo, hi, i); });
        lo = hi;
    }
    for (auto& th : pool) th.join();
}

}  // namespace fibexp::detail
