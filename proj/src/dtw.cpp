#include "fpetpf/dtw.hpp"

#include <algorithm>
#include <cmath>

#include "fpetpf/errors.hpp"
#include "fpetpf/kernels.hpp"

namespace fpetpf {

namespace {

double element_cost(double diff, double q) {
    const double a = std::fabs(diff);
    if (q == 2.0) return a * a;
    if (q == 1.0) return a;
    return std::pow(a, q);
}

double finalize_distance(double total, double q) {
    if (q == 2.0) return std::sqrt(total);
    if (q == 1.0) return total;
    return std::pow(total, 1.0 / q);
}

/// Predecessor codes packed 2 bits per cell so the full table fits in memory
/// at large sequence lengths; the accumulated-cost rows are rolled.
class PredecessorCodes {
public:
    PredecessorCodes(int n, int m)
        : cols_(m), bytes_((static_cast<std::size_t>(n) * m + 3) / 4, 0) {}

    void set(int i, int j, unsigned code) {
        const std::size_t cell = static_cast<std::size_t>(i) * cols_ + j;
        const unsigned shift = 2 * (cell & 3);
        bytes_[cell >> 2] =
            static_cast<unsigned char>((bytes_[cell >> 2] & ~(3u << shift)) | (code << shift));
    }

    unsigned get(int i, int j) const {
        const std::size_t cell = static_cast<std::size_t>(i) * cols_ + j;
        return (bytes_[cell >> 2] >> (2 * (cell & 3))) & 3u;
    }

private:
    std::size_t cols_;
    std::vector<unsigned char> bytes_;
};

constexpr unsigned kDiag = 0;   // predecessor (i-1, j-1)
constexpr unsigned kUp = 1;     // predecessor (i-1, j): advances the first sequence
constexpr unsigned kLeft = 2;   // predecessor (i, j-1): advances the second sequence

/// Dynamic program over an n x m cost lattice. cost(i, j) is the matching
/// cost of elements i and j (0-based). Ties prefer the diagonal predecessor,
/// then the one advancing the first sequence.
template <typename CostFn>
AlignmentPath dp_align(int n, int m, double q, CostFn&& cost) {
    if (n < 1 || m < 1) throw InvalidInput("cannot align an empty sequence");

    std::vector<double> prev(m), curr(m);
    PredecessorCodes codes(n, m);

    curr[0] = cost(0, 0);
    for (int j = 1; j < m; ++j) {
        curr[j] = curr[j - 1] + cost(0, j);
        codes.set(0, j, kLeft);
    }
    for (int i = 1; i < n; ++i) {
        prev.swap(curr);
        curr[0] = prev[0] + cost(i, 0);
        codes.set(i, 0, kUp);
        for (int j = 1; j < m; ++j) {
            const double diag = prev[j - 1];
            const double up = prev[j];
            const double left = curr[j - 1];
            double best;
            unsigned code;
            if (diag <= up && diag <= left) {
                best = diag;
                code = kDiag;
            } else if (up <= left) {
                best = up;
                code = kUp;
            } else {
                best = left;
                code = kLeft;
            }
            curr[j] = best + cost(i, j);
            codes.set(i, j, code);
        }
    }

    AlignmentPath path;
    path.norm_exponent = q;
    path.distance = finalize_distance(curr[m - 1], q);
    int i = n - 1;
    int j = m - 1;
    path.pairs.emplace_back(i + 1, j + 1);
    while (i != 0 || j != 0) {
        switch (codes.get(i, j)) {
            case kDiag: --i; --j; break;
            case kUp: --i; break;
            default: --j; break;
        }
        path.pairs.emplace_back(i + 1, j + 1);
    }
    std::reverse(path.pairs.begin(), path.pairs.end());
    return path;
}

}  // namespace

bool validate_path(const std::vector<std::pair<int, int>>& pairs, int n, int m) {
    const int len = static_cast<int>(pairs.size());
    if (len < std::max(n, m) || len > n + m - 1) return false;
    if (pairs.front() != std::pair<int, int>(1, 1)) return false;
    if (pairs.back() != std::pair<int, int>(n, m)) return false;
    for (int v = 1; v < len; ++v) {
        const int di = pairs[v].first - pairs[v - 1].first;
        const int dj = pairs[v].second - pairs[v - 1].second;
        if (di < 0 || di > 1 || dj < 0 || dj > 1) return false;
        if (di == 0 && dj == 0) return false;
    }
    for (const auto& [i, j] : pairs)
        if (i < 1 || i > n || j < 1 || j > m) return false;
    return true;
}

double aligned_distance(std::span<const double> a, std::span<const double> b,
                        const AlignmentPath& path, double q) {
    const int n = static_cast<int>(a.size());
    const int m = static_cast<int>(b.size());
    if (!validate_path(path.pairs, n, m))
        throw InvalidPath("alignment path invalid for the given sequence lengths");
    double total = 0.0;
    for (const auto& [i, j] : path.pairs) total += element_cost(a[i - 1] - b[j - 1], q);
    return finalize_distance(total, q);
}

AlignmentPath dtw_1d(std::span<const double> a, std::span<const double> b, double q) {
    if (a.empty() || b.empty()) throw InvalidInput("cannot align an empty sequence");
    return dp_align(static_cast<int>(a.size()), static_cast<int>(b.size()), q,
                    [&](int i, int j) { return element_cost(a[i] - b[j], q); });
}

AlignmentPath2D dtw_2d(const Matrix& a, const Matrix& b, double q) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InvalidInput("2-D alignment needs equal field shapes");
    if (a.rows() < 1 || a.cols() < 1) throw InvalidInput("cannot align an empty field");
    const int nr = a.rows();
    const int nc = a.cols();
    const auto& k = kernels::ops();

    // Transposed copies make column vectors contiguous.
    Matrix at(nc, nr), bt(nc, nr);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) {
            at(j, i) = a(i, j);
            bt(j, i) = b(i, j);
        }

    const auto vector_cost = [q](double sq) {
        if (q == 2.0) return sq;
        return std::pow(std::sqrt(sq), q);
    };

    AlignmentPath2D out;
    out.cols = dp_align(nc, nc, q, [&](int i, int j) {
        return vector_cost(k.sum_sq_diff(at.row(i), bt.row(j), static_cast<std::size_t>(nr)));
    });
    out.rows = dp_align(nr, nr, q, [&](int i, int j) {
        return vector_cost(k.sum_sq_diff(a.row(i), b.row(j), static_cast<std::size_t>(nc)));
    });
    return out;
}

std::uint64_t delannoy_number(int a, int b) {
    if (a < 0 || b < 0 || a > 20 || b > 20)
        throw InvalidInput("delannoy_number supports arguments in [0, 20]");
    const auto binom = [](int n, int r) {
        std::uint64_t v = 1;
        for (int t = 1; t <= r; ++t) v = v * static_cast<std::uint64_t>(n - r + t) / t;
        return v;
    };
    std::uint64_t total = 0;
    std::uint64_t pow2 = 1;
    for (int v = 0; v <= std::min(a, b); ++v) {
        total += binom(a, v) * binom(b, v) * pow2;
        pow2 <<= 1;
    }
    return total;
}

}  // namespace fpetpf
