#pragma once

#include <cmath>
#include <cstddef>

// Scalar cores shared by the reference backend and the tails of the vector
// backends. The WENO5 weights follow Jiang & Shu with eps = 1e-6.

namespace fpetpf::kernels::detail {

inline constexpr double kWenoEps = 1e-6;

/// Left-biased fifth-order WENO reconstruction at the interface between the
/// third and fourth sample of the window (a, b, c, d, e).
inline double weno5_core(double a, double b, double c, double d, double e) {
    const double v0 = (2.0 * a - 7.0 * b + 11.0 * c) * (1.0 / 6.0);
    const double v1 = (-b + 5.0 * c + 2.0 * d) * (1.0 / 6.0);
    const double v2 = (2.0 * c + 5.0 * d - e) * (1.0 / 6.0);

    const double d0 = a - 2.0 * b + c;
    const double d1 = b - 2.0 * c + d;
    const double d2 = c - 2.0 * d + e;
    const double s0 = a - 4.0 * b + 3.0 * c;
    const double s2 = 3.0 * c - 4.0 * d + e;
    const double s1 = b - d;

    const double b0 = (13.0 / 12.0) * d0 * d0 + 0.25 * s0 * s0;
    const double b1 = (13.0 / 12.0) * d1 * d1 + 0.25 * s1 * s1;
    const double b2 = (13.0 / 12.0) * d2 * d2 + 0.25 * s2 * s2;

    const double e0 = kWenoEps + b0;
    const double e1 = kWenoEps + b1;
    const double e2 = kWenoEps + b2;
    const double w0 = 0.1 / (e0 * e0);
    const double w1 = 0.6 / (e1 * e1);
    const double w2 = 0.3 / (e2 * e2);

    return (w0 * v0 + w1 * v1 + w2 * v2) / (w0 + w1 + w2);
}

inline double sum_sq_diff(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

inline void convex_combine(double alpha, const double* x, const double* y, double* out,
                           std::size_t n) {
    const double beta = 1.0 - alpha;
    for (std::size_t i = 0; i < n; ++i) out[i] = alpha * x[i] + beta * y[i];
}

inline void axpy(double a, const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] += a * x[i];
}

inline double max_abs(const double* v, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = std::fabs(v[i]);
        if (a > m) m = a;
    }
    return m;
}

inline void weno5_plus(const double* w, std::size_t n, double* out) {
    for (std::size_t k = 0; k < n; ++k)
        out[k] = weno5_core(w[k], w[k + 1], w[k + 2], w[k + 3], w[k + 4]);
}

inline void weno5_minus(const double* w, std::size_t n, double* out) {
    for (std::size_t k = 0; k < n; ++k)
        out[k] = weno5_core(w[k + 4], w[k + 3], w[k + 2], w[k + 1], w[k]);
}

}  // namespace fpetpf::kernels::detail
