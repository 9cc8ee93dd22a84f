#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fpetpf/matrix.hpp"

namespace fpetpf {

/// Monotone alignment between two sequences: 1-based index pairs, first pair
/// (1,1), last pair (n,m), each index advancing by 0 or 1 per step and never
/// both standing still. `distance` is the aligned q-norm value of the path.
struct AlignmentPath {
    std::vector<std::pair<int, int>> pairs;
    double distance = 0.0;
    double norm_exponent = 2.0;

    int length() const { return static_cast<int>(pairs.size()); }
};

/// Separable 2-D alignment: a column path over column indices (j, j-hat) and
/// a row path over row indices (i, i-hat).
struct AlignmentPath2D {
    AlignmentPath cols;
    AlignmentPath rows;
};

/// True iff `pairs` satisfies all mapping rules for sequence lengths (n, m),
/// including the path-length bound max(n,m) <= l <= n+m-1.
bool validate_path(const std::vector<std::pair<int, int>>& pairs, int n, int m);

/// Aligned q-norm distance of two scalar sequences along a given path.
/// Throws InvalidPath when the path is not valid for (|a|, |b|).
double aligned_distance(std::span<const double> a, std::span<const double> b,
                        const AlignmentPath& path, double q = 2.0);

/// Optimal alignment of two scalar sequences by dynamic programming. Exact:
/// the returned distance is the minimum of aligned_distance over all valid
/// paths. Equal-cost predecessors break toward the diagonal move, then the
/// move advancing the first sequence.
AlignmentPath dtw_1d(std::span<const double> a, std::span<const double> b,
                     double q = 2.0);

/// Separable 2-D alignment: columns first (elements are columns compared in
/// the Euclidean norm), then rows. Both fields must have equal shapes.
AlignmentPath2D dtw_2d(const Matrix& a, const Matrix& b, double q = 2.0);

/// sum over v of C(a,v) * C(b,v) * 2^v — the lattice-path count with
/// diagonal steps from (0,0) to (a,b). The number of valid alignment paths
/// between sequences of lengths n and m is delannoy_number(n-1, m-1).
std::uint64_t delannoy_number(int a, int b);

}  // namespace fpetpf
