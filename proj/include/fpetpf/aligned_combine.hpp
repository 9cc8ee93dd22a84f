#pragma once

#include <vector>

#include "fpetpf/dtw.hpp"
#include "fpetpf/state.hpp"

namespace fpetpf {

/// Convex mixing coefficient, validated to [0, 1].
struct MixingCoefficient {
    explicit MixingCoefficient(double v);
    double value;
};

enum class KnotInterpolation { nearest, linear };

/// Aligned convex combination of two equally sized 1-D fields along an
/// alignment path: interpolation knots sit at alpha*i + (1-alpha)*i_hat with
/// ordinates alpha*f[i] + (1-alpha)*g[i_hat]; the result samples the knots at
/// the integer grid. Duplicate knot abscissae keep the first occurrence in
/// path order; nearest-neighbor ties resolve to the left knot.
std::vector<double> aligned_add_field_1d(const std::vector<double>& f,
                                         const std::vector<double>& g,
                                         MixingCoefficient alpha, const AlignmentPath& path,
                                         KnotInterpolation interp = KnotInterpolation::nearest);

/// 2-D analogue: the knot lattice is the tensor product of blended row and
/// column abscissae.
std::vector<double> aligned_add_field_2d(const std::vector<double>& f,
                                         const std::vector<double>& g, int nx, int ny,
                                         MixingCoefficient alpha,
                                         const AlignmentPath2D& path,
                                         KnotInterpolation interp = KnotInterpolation::nearest);

/// Applies the aligned combination with one shared path to every conserved
/// field. Both states must share the grid and the time stamp.
FlowState aligned_add_state(const FlowState& x, const FlowState& x_hat,
                            MixingCoefficient alpha, const AlignmentPath& path,
                            KnotInterpolation interp = KnotInterpolation::nearest);
FlowState aligned_add_state(const FlowState& x, const FlowState& x_hat,
                            MixingCoefficient alpha, const AlignmentPath2D& path,
                            KnotInterpolation interp = KnotInterpolation::nearest);

/// Full pipeline: density features -> optimal alignment -> aligned addition
/// of all fields.
FlowState aligned_pair_combine(const FlowState& x, const FlowState& x_hat,
                               MixingCoefficient alpha, double q = 2.0,
                               KnotInterpolation interp = KnotInterpolation::nearest);

}  // namespace fpetpf
