#pragma once

#include <cstddef>

namespace fpetpf::kernels {

/// Function table for the data-parallel inner loops: squared-distance
/// accumulation, convex combinations, reductions, and the WENO5 interface
/// reconstructions. A backend is selected once at first use (AVX2 when the
/// CPU supports it, scalar otherwise); the FPETPF_KERNELS environment
/// variable ("scalar"/"avx2") or set_backend() overrides the choice.
///
/// Elementwise kernels (convex_combine, axpy, weno5_*) produce bit-identical
/// results across backends: each lane performs the same IEEE operations in
/// the same order and the build disables FMA contraction. Reductions
/// (sum_sq_diff) differ only in accumulation order.
struct Ops {
    /// sum over i of (a[i] - b[i])^2
    double (*sum_sq_diff)(const double* a, const double* b, std::size_t n);
    /// out[i] = alpha*x[i] + (1-alpha)*y[i]
    void (*convex_combine)(double alpha, const double* x, const double* y, double* out,
                           std::size_t n);
    /// out[i] += a*x[i]
    void (*axpy)(double a, const double* x, double* out, std::size_t n);
    /// max over i of |v[i]|; 0 for n == 0
    double (*max_abs)(const double* v, std::size_t n);
    /// out[k] = left-biased WENO5 reconstruction from the window w[k..k+4],
    /// approximating the interface value between w[k+2] and w[k+3].
    /// Reads n+4 doubles from w.
    void (*weno5_plus)(const double* w, std::size_t n, double* out);
    /// Mirror image of weno5_plus: right-biased reconstruction from the same
    /// window, approximating the interface value between w[k+1] and w[k+2].
    void (*weno5_minus)(const double* w, std::size_t n, double* out);
};

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
bool backend_available(Backend b);

/// Table for a specific backend, or nullptr when unavailable on this host.
const Ops* table(Backend b);

/// Active table (selects a backend on first call).
const Ops& ops();
Backend active_backend();

/// Force a backend; throws InvalidInput when it is not available.
void set_backend(Backend b);

}  // namespace fpetpf::kernels
