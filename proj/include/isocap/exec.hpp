#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace isocap {

/// Run `fn(batch_index)` for batch_index in [0, n_batches) on up to `workers`
/// threads. Each batch must draw randomness only from its own substream and
/// write only to its own output slot, so results do not depend on the worker
/// count or on scheduling.
inline void run_batches(int n_batches, int workers, const std::function<void(int)>& fn) {
    if (workers < 1) workers = 1;
    if (workers == 1 || n_batches <= 1) {
        for (int b = 0; b < n_batches; ++b) fn(b);
        return;
    }
    std::atomic<int> next{0};
    auto loop = [&]() {
        for (;;) {
            int b = next.fetch_add(1);
            if (b >= n_batches) return;
            fn(b);
        }
    };
    std::vector<std::thread> pool;
    int n_threads = std::min(workers, n_batches);
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(loop);
    for (auto& t : pool) t.join();
}

}  // namespace isocap
