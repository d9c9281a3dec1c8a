#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace cggpack {

// PACK_THREADS caps worker threads; unset or invalid means single-threaded.
inline int configured_threads() {
    const char* env = std::getenv("PACK_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (v < 1) return 1;
    return v < hw ? v : hw;
}

/// Runs f(chunk_index, begin, end) over [0, total) split into `chunks` ranges.
/// Chunk boundaries do not depend on the thread count, so per-chunk outputs
/// merged in index order are deterministic.
template <class F>
void parallel_chunks(long long total, int chunks, F&& f) {
    if (total <= 0 || chunks <= 0) return;
    const int threads = configured_threads();
    const long long step = (total + chunks - 1) / chunks;
    if (threads <= 1) {
        for (int c = 0; c < chunks; ++c) {
            long long b = c * step, e = std::min(total, b + step);
            if (b < e) f(c, b, e);
        }
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            for (int c = w; c < chunks; c += threads) {
                long long b = c * step, e = std::min(total, b + step);
                if (b < e) f(c, b, e);
            }
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace cggpack
