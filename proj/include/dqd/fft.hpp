#pragma once

#include <complex>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <new>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

namespace dqd {

// 64-byte aligned allocator so FFTW SIMD plans apply to every buffer.
template <class T>
struct AlignedAlloc {
    using value_type = T;
    AlignedAlloc() = default;
    template <class U>
    AlignedAlloc(const AlignedAlloc<U>&) {}
    T* allocate(std::size_t n) {
        void* p = std::aligned_alloc(64, ((n * sizeof(T) + 63) / 64) * 64);
        if (!p) throw std::bad_alloc();
        return static_cast<T*>(p);
    }
    void deallocate(T* p, std::size_t) { std::free(p); }
    template <class U>
    bool operator==(const AlignedAlloc<U>&) const { return true; }
};

using cvec = std::vector<std::complex<double>, AlignedAlloc<std::complex<double>>>;

inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

// In-place complex 2D transforms on n x n row-major arrays. Plans are
// created once on an aligned scratch buffer; execution on other aligned
// buffers via the new-array interface is thread safe.
class Fft2 {
  public:
    explicit Fft2(int n) : n_(n) {
        cvec scratch(static_cast<std::size_t>(n) * n);
        auto* d = reinterpret_cast<fftw_complex*>(scratch.data());
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fwd_ = fftw_plan_dft_2d(n, n, d, d, FFTW_FORWARD, FFTW_MEASURE);
        bwd_ = fftw_plan_dft_2d(n, n, d, d, FFTW_BACKWARD, FFTW_MEASURE);
        if (!fwd_ || !bwd_) throw std::runtime_error("fftw plan creation failed");
    }
    ~Fft2() {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
    }
    Fft2(const Fft2&) = delete;
    Fft2& operator=(const Fft2&) = delete;

    int n() const { return n_; }

    void forward(std::complex<double>* a) const {
        auto* d = reinterpret_cast<fftw_complex*>(a);
        fftw_execute_dft(fwd_, d, d);
    }
    // Inverse transform including the 1/n^2 normalization.
    void inverse(std::complex<double>* a) const {
        auto* d = reinterpret_cast<fftw_complex*>(a);
        fftw_execute_dft(bwd_, d, d);
        const double s = 1.0 / (static_cast<double>(n_) * n_);
        const std::size_t m = static_cast<std::size_t>(n_) * n_;
        for (std::size_t i = 0; i < m; ++i) a[i] *= s;
    }

  private:
    int n_;
    fftw_plan fwd_;
    fftw_plan bwd_;
};

} // namespace dqd
