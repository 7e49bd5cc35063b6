#include "capwave/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace capwave::fft {

namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

// FFTW planning is not thread safe; executions on distinct buffers are.
std::mutex plan_mutex;
std::map<std::size_t, PlanPair>& plan_cache() {
    static std::map<std::size_t, PlanPair> cache;
    return cache;
}

PlanPair plans_for(std::size_t n) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Plan on a scratch buffer; FFTW_ESTIMATE keeps planning deterministic.
    std::vector<cplx> scratch(n);
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    PlanPair pp;
    pp.fwd = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_FORWARD, FFTW_ESTIMATE);
    pp.bwd = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_BACKWARD, FFTW_ESTIMATE);
    cache.emplace(n, pp);
    return pp;
}

}  // namespace

void forward(std::vector<cplx>& data) {
    PlanPair pp = plans_for(data.size());
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(pp.fwd, p, p);
}

void backward(std::vector<cplx>& data) {
    PlanPair pp = plans_for(data.size());
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(pp.bwd, p, p);
}

}  // namespace capwave::fft
