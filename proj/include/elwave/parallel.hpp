// Deterministic work-sharing helper: fixed chunk assignment so results are
// identical for any thread count.
#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace elwave {

/** Number of worker threads to use when the caller passes 0 (= "auto"). */
inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/** Runs fn(i) for i in [0, count). Work is split into contiguous chunks,
 *  one per thread. Each index is processed exactly once and writes only
 *  its own output slot, so the result does not depend on scheduling. */
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (threads > count) threads = static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t base = count / threads, extra = count % threads;
    std::size_t begin = 0;
    for (unsigned w = 0; w < threads; ++w) {
        const std::size_t len = base + (w < extra ? 1 : 0);
        const std::size_t end = begin + len;
        pool.emplace_back([begin, end, &fn] {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        });
        begin = end;
    }
    for (auto& th : pool) th.join();
}

} // namespace elwave
