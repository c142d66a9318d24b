#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace mixedlap {

namespace {

// One cached plan per (dims, direction).  FFTW_ESTIMATE keeps planning
// deterministic; execution goes through the plan's own buffer so alignment
// is never an issue.
struct PlanEntry {
    fftw_plan plan = nullptr;
    fftw_complex* buf = nullptr;
    std::size_t len = 0;
};

std::map<std::pair<std::vector<int>, bool>, PlanEntry>& plan_cache() {
    static std::map<std::pair<std::vector<int>, bool>, PlanEntry> cache;
    return cache;
}

std::mutex& fft_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

void fft_nd(std::complex<double>* data, const std::vector<int>& dims,
            bool forward) {
    std::size_t len = 1;
    for (int d : dims) len *= static_cast<std::size_t>(d);
    if (len == 0) return;

    std::lock_guard<std::mutex> lock(fft_mutex());
    auto key = std::make_pair(dims, forward);
    auto it = plan_cache().find(key);
    if (it == plan_cache().end()) {
        PlanEntry e;
        e.len = len;
        e.buf = fftw_alloc_complex(len);
        e.plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(),
                               e.buf, e.buf,
                               forward ? FFTW_FORWARD : FFTW_BACKWARD,
                               FFTW_ESTIMATE);
        it = plan_cache().emplace(std::move(key), e).first;
    }
    PlanEntry& e = it->second;
    for (std::size_t i = 0; i < len; ++i) {
        e.buf[i][0] = data[i].real();
        e.buf[i][1] = data[i].imag();
    }
    fftw_execute(e.plan);
    for (std::size_t i = 0; i < len; ++i)
        data[i] = std::complex<double>(e.buf[i][0], e.buf[i][1]);
}

} // namespace mixedlap
