#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace apnext {

/// Runs fn(0) .. fn(count-1), on `jobs` worker threads when jobs > 1.
/// Callers keep determinism by writing results into per-index slots.
inline void parallel_for(unsigned jobs, std::size_t count,
                         const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned k = jobs < count ? jobs : static_cast<unsigned>(count);
    pool.reserve(k);
    for (unsigned i = 0; i < k; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace apnext
