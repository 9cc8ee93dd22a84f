#include <immintrin.h>

#include "fpetpf/kernels.hpp"
#include "kernels_detail.hpp"

// AVX2 variants of the inner-loop kernels. Four doubles per iteration, scalar
// tails. No FMA: each lane applies the same mul/add sequence as the scalar
// core, which keeps the elementwise kernels bit-identical across backends.

namespace fpetpf::kernels {
namespace {

double sum_sq_diff_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        total += d * d;
    }
    return total;
}

void convex_combine_avx2(double alpha, const double* x, const double* y, double* out,
                         std::size_t n) {
    const double beta = 1.0 - alpha;
    const __m256d va = _mm256_set1_pd(alpha);
    const __m256d vb = _mm256_set1_pd(beta);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r = _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(x + i)),
                                        _mm256_mul_pd(vb, _mm256_loadu_pd(y + i)));
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) out[i] = alpha * x[i] + beta * y[i];
}

void axpy_avx2(double a, const double* x, double* out, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r = _mm256_add_pd(_mm256_loadu_pd(out + i),
                                        _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) out[i] += a * x[i];
}

double max_abs_avx2(const double* v, std::size_t n) {
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d m = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        m = _mm256_max_pd(m, _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(v + i)));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, m);
    double best = lanes[0];
    for (int k = 1; k < 4; ++k)
        if (lanes[k] > best) best = lanes[k];
    for (; i < n; ++i) {
        const double a = v[i] < 0.0 ? -v[i] : v[i];
        if (a > best) best = a;
    }
    return best;
}

inline __m256d weno5_core_avx2(__m256d a, __m256d b, __m256d c, __m256d d, __m256d e) {
    const __m256d sixth = _mm256_set1_pd(1.0 / 6.0);
    const __m256d c2 = _mm256_set1_pd(2.0);
    const __m256d c7 = _mm256_set1_pd(7.0);
    const __m256d c11 = _mm256_set1_pd(11.0);
    const __m256d c5 = _mm256_set1_pd(5.0);
    const __m256d c4 = _mm256_set1_pd(4.0);
    const __m256d c3 = _mm256_set1_pd(3.0);

    const __m256d v0 = _mm256_mul_pd(
        _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(c2, a), _mm256_mul_pd(c7, b)),
                      _mm256_mul_pd(c11, c)),
        sixth);
    const __m256d v1 = _mm256_mul_pd(
        _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(c5, c), b), _mm256_mul_pd(c2, d)), sixth);
    const __m256d v2 = _mm256_mul_pd(
        _mm256_sub_pd(_mm256_add_pd(_mm256_mul_pd(c2, c), _mm256_mul_pd(c5, d)), e), sixth);

    const __m256d d0 = _mm256_add_pd(_mm256_sub_pd(a, _mm256_mul_pd(c2, b)), c);
    const __m256d d1 = _mm256_add_pd(_mm256_sub_pd(b, _mm256_mul_pd(c2, c)), d);
    const __m256d d2 = _mm256_add_pd(_mm256_sub_pd(c, _mm256_mul_pd(c2, d)), e);
    const __m256d s0 = _mm256_add_pd(_mm256_sub_pd(a, _mm256_mul_pd(c4, b)), _mm256_mul_pd(c3, c));
    const __m256d s2 = _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(c3, c), _mm256_mul_pd(c4, d)), e);
    const __m256d s1 = _mm256_sub_pd(b, d);

    const __m256d r1312 = _mm256_set1_pd(13.0 / 12.0);
    const __m256d quarter = _mm256_set1_pd(0.25);
    const __m256d b0 = _mm256_add_pd(_mm256_mul_pd(r1312, _mm256_mul_pd(d0, d0)),
                                     _mm256_mul_pd(quarter, _mm256_mul_pd(s0, s0)));
    const __m256d b1 = _mm256_add_pd(_mm256_mul_pd(r1312, _mm256_mul_pd(d1, d1)),
                                     _mm256_mul_pd(quarter, _mm256_mul_pd(s1, s1)));
    const __m256d b2 = _mm256_add_pd(_mm256_mul_pd(r1312, _mm256_mul_pd(d2, d2)),
                                     _mm256_mul_pd(quarter, _mm256_mul_pd(s2, s2)));

    const __m256d eps = _mm256_set1_pd(detail::kWenoEps);
    const __m256d e0 = _mm256_add_pd(eps, b0);
    const __m256d e1 = _mm256_add_pd(eps, b1);
    const __m256d e2 = _mm256_add_pd(eps, b2);
    const __m256d w0 = _mm256_div_pd(_mm256_set1_pd(0.1), _mm256_mul_pd(e0, e0));
    const __m256d w1 = _mm256_div_pd(_mm256_set1_pd(0.6), _mm256_mul_pd(e1, e1));
    const __m256d w2 = _mm256_div_pd(_mm256_set1_pd(0.3), _mm256_mul_pd(e2, e2));

    const __m256d num = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(w0, v0), _mm256_mul_pd(w1, v1)), _mm256_mul_pd(w2, v2));
    const __m256d den = _mm256_add_pd(_mm256_add_pd(w0, w1), w2);
    return _mm256_div_pd(num, den);
}

void weno5_plus_avx2(const double* w, std::size_t n, double* out) {
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d r = weno5_core_avx2(_mm256_loadu_pd(w + k), _mm256_loadu_pd(w + k + 1),
                                          _mm256_loadu_pd(w + k + 2), _mm256_loadu_pd(w + k + 3),
                                          _mm256_loadu_pd(w + k + 4));
        _mm256_storeu_pd(out + k, r);
    }
    for (; k < n; ++k)
        out[k] = detail::weno5_core(w[k], w[k + 1], w[k + 2], w[k + 3], w[k + 4]);
}

void weno5_minus_avx2(const double* w, std::size_t n, double* out) {
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d r = weno5_core_avx2(_mm256_loadu_pd(w + k + 4), _mm256_loadu_pd(w + k + 3),
                                          _mm256_loadu_pd(w + k + 2), _mm256_loadu_pd(w + k + 1),
                                          _mm256_loadu_pd(w + k));
        _mm256_storeu_pd(out + k, r);
    }
    for (; k < n; ++k)
        out[k] = detail::weno5_core(w[k + 4], w[k + 3], w[k + 2], w[k + 1], w[k]);
}

}  // namespace

const Ops avx2_table = {
    sum_sq_diff_avx2, convex_combine_avx2, axpy_avx2,
    max_abs_avx2,     weno5_plus_avx2,     weno5_minus_avx2,
};

}  // namespace fpetpf::kernels
