#pragma once

// Deterministic fork-join helper: contiguous index chunks, one result slot
// per chunk, merged by the caller in chunk order.  Worker count comes from
// CROSSFAM_THREADS (default: machine parallelism).

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace crossfam {

inline int thread_count() {
    if (const char* env = std::getenv("CROSSFAM_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// fn(lo, hi) -> Result over [0, total) split into up to thread_count()
// contiguous chunks; the returned vector is ordered by chunk.
template <typename Result, typename Fn>
std::vector<Result> map_chunks(std::uint64_t total, Fn fn) {
    int workers = thread_count();
    if (total == 0) return {};
    std::uint64_t nchunks = std::min<std::uint64_t>(workers, total);
    std::vector<Result> results(nchunks);
    if (nchunks == 1) {
        results[0] = fn(std::uint64_t{0}, total);
        return results;
    }
    std::vector<std::thread> pool;
    std::uint64_t per = total / nchunks, extra = total % nchunks;
    std::uint64_t lo = 0;
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        std::uint64_t hi = lo + per + (c < extra ? 1 : 0);
        pool.emplace_back([&results, c, lo, hi, &fn] { results[c] = fn(lo, hi); });
        lo = hi;
    }
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace crossfam
