#pragma once

#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace mixedlap {

/// Worker count: MIXEDLAP_THREADS if set, otherwise the hardware count.
inline int worker_count() {
    if (const char* env = std::getenv("MIXEDLAP_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Deterministic parallel map: body(i) writes only to slot i of its output,
/// so the result is identical to the serial loop regardless of scheduling.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
    const int workers = worker_count();
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::future<void>> futures;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, [lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        }));
    }
    for (auto& f : futures) f.get();
}

} // namespace mixedlap
