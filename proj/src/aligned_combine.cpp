#include "fpetpf/aligned_combine.hpp"

#include <cmath>

#include "fpetpf/errors.hpp"
#include "fpetpf/features.hpp"

namespace fpetpf {

namespace {

/// alpha*x + (1-alpha)*y with the degenerate cases made exact: alpha in
/// {0, 1} reproduces an operand bitwise, and equal operands pass through
/// unchanged for every alpha. This keeps the endpoint, idempotence and range
/// invariants exact in floating point.
double blend_value(double alpha, double x, double y) {
    if (alpha == 1.0 || x == y) return x;
    if (alpha == 0.0) return y;
    return alpha * x + (1.0 - alpha) * y;
}

/// Blended knot abscissae for one axis, with first-occurrence deduplication.
/// Returns the abscissae and the kept path positions.
struct AxisKnots {
    std::vector<double> abscissa;
    std::vector<int> kept;  // indices into the path
};

AxisKnots blend_axis(const std::vector<std::pair<int, int>>& pairs, double alpha) {
    AxisKnots out;
    out.abscissa.reserve(pairs.size());
    out.kept.reserve(pairs.size());
    double last = -1.0;
    for (std::size_t v = 0; v < pairs.size(); ++v) {
        const double s = blend_value(alpha, pairs[v].first, pairs[v].second);
        // abscissae are non-decreasing along the path, so duplicates are
        // consecutive; keep the first.
        if (!out.abscissa.empty() && s == last) continue;
        out.abscissa.push_back(s);
        out.kept.push_back(static_cast<int>(v));
        last = s;
    }
    return out;
}

/// Index of the knot nearest to the query; exact midpoints take the left one.
int nearest_knot(const std::vector<double>& s, double query, int hint) {
    int j = hint;
    const int last = static_cast<int>(s.size()) - 1;
    while (j < last && std::fabs(s[j + 1] - query) < std::fabs(s[j] - query)) ++j;
    return j;
}

/// Largest knot index at or below the query (for linear interpolation).
int left_bracket(const std::vector<double>& s, double query, int hint) {
    int j = hint;
    const int last = static_cast<int>(s.size()) - 1;
    while (j < last && s[j + 1] <= query) ++j;
    return j;
}

}  // namespace

MixingCoefficient::MixingCoefficient(double v) : value(v) {
    if (!(v >= 0.0 && v <= 1.0))
        throw InvalidInput("mixing coefficient must lie in [0, 1]");
}

std::vector<double> aligned_add_field_1d(const std::vector<double>& f,
                                         const std::vector<double>& g,
                                         MixingCoefficient alpha, const AlignmentPath& path,
                                         KnotInterpolation interp) {
    const int n = static_cast<int>(f.size());
    if (g.size() != f.size()) throw InvalidInput("fields must have equal length");
    if (!validate_path(path.pairs, n, n))
        throw InvalidPath("alignment path invalid for the field length");

    const double a = alpha.value;
    const AxisKnots knots = blend_axis(path.pairs, a);
    std::vector<double> value(knots.kept.size());
    for (std::size_t k = 0; k < knots.kept.size(); ++k) {
        const auto& [i, ih] = path.pairs[knots.kept[k]];
        value[k] = blend_value(a, f[i - 1], g[ih - 1]);
    }

    std::vector<double> out(n);
    int hint = 0;
    for (int qpt = 1; qpt <= n; ++qpt) {
        if (interp == KnotInterpolation::nearest) {
            hint = nearest_knot(knots.abscissa, qpt, hint);
            out[qpt - 1] = value[hint];
        } else {
            hint = left_bracket(knots.abscissa, qpt, hint);
            const int j = hint;
            if (j + 1 >= static_cast<int>(knots.abscissa.size()) ||
                knots.abscissa[j] >= qpt) {
                out[qpt - 1] = value[j];
            } else {
                const double t =
                    (qpt - knots.abscissa[j]) / (knots.abscissa[j + 1] - knots.abscissa[j]);
                out[qpt - 1] = (1.0 - t) * value[j] + t * value[j + 1];
            }
        }
    }
    return out;
}

std::vector<double> aligned_add_field_2d(const std::vector<double>& f,
                                         const std::vector<double>& g, int nx, int ny,
                                         MixingCoefficient alpha,
                                         const AlignmentPath2D& path,
                                         KnotInterpolation interp) {
    if (f.size() != static_cast<std::size_t>(nx) * ny || g.size() != f.size())
        throw InvalidInput("field shape mismatch");
    if (!validate_path(path.rows.pairs, nx, nx) || !validate_path(path.cols.pairs, ny, ny))
        throw InvalidPath("2-D alignment path invalid for the field shape");
    if (interp != KnotInterpolation::nearest)
        throw InvalidInput("2-D aligned addition supports nearest-neighbor sampling only");

    const double a = alpha.value;
    const AxisKnots row_knots = blend_axis(path.rows.pairs, a);
    const AxisKnots col_knots = blend_axis(path.cols.pairs, a);

    const auto fat = [&](int i, int j) { return f[static_cast<std::size_t>(i) * ny + j]; };
    const auto gat = [&](int i, int j) { return g[static_cast<std::size_t>(i) * ny + j]; };

    // Knot lattice values, indexed (kept row) x (kept column).
    const int kr = static_cast<int>(row_knots.kept.size());
    const int kc = static_cast<int>(col_knots.kept.size());
    std::vector<double> lattice(static_cast<std::size_t>(kr) * kc);
    for (int r = 0; r < kr; ++r) {
        const auto& [i, ih] = path.rows.pairs[row_knots.kept[r]];
        for (int c = 0; c < kc; ++c) {
            const auto& [j, jh] = path.cols.pairs[col_knots.kept[c]];
            lattice[static_cast<std::size_t>(r) * kc + c] =
                blend_value(a, fat(i - 1, j - 1), gat(ih - 1, jh - 1));
        }
    }

    std::vector<int> row_pick(nx), col_pick(ny);
    int hint = 0;
    for (int i = 1; i <= nx; ++i) row_pick[i - 1] = hint = nearest_knot(row_knots.abscissa, i, hint);
    hint = 0;
    for (int j = 1; j <= ny; ++j) col_pick[j - 1] = hint = nearest_knot(col_knots.abscissa, j, hint);

    std::vector<double> out(f.size());
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            out[static_cast<std::size_t>(i) * ny + j] =
                lattice[static_cast<std::size_t>(row_pick[i]) * kc + col_pick[j]];
    return out;
}

namespace {

template <typename PathT, typename CombineFn>
FlowState combine_state_fields(const FlowState& x, const FlowState& x_hat,
                               CombineFn&& combine) {
    if (x.grid != x_hat.grid) throw InvalidInput("states live on different grids");
    if (x.time != x_hat.time)
        throw TimeMismatch("cannot combine states with different time stamps");
    FlowState out = make_state(x.grid);
    out.time = x.time;
    out.density = combine(x.density, x_hat.density);
    out.mom_x = combine(x.mom_x, x_hat.mom_x);
    if (x.grid.dim == 2) out.mom_y = combine(x.mom_y, x_hat.mom_y);
    out.energy = combine(x.energy, x_hat.energy);
    return out;
}

}  // namespace

FlowState aligned_add_state(const FlowState& x, const FlowState& x_hat,
                            MixingCoefficient alpha, const AlignmentPath& path,
                            KnotInterpolation interp) {
    if (x.grid.dim != 1) throw InvalidInput("1-D path supplied for a 2-D state");
    return combine_state_fields<AlignmentPath>(
        x, x_hat, [&](const std::vector<double>& f, const std::vector<double>& g) {
            return aligned_add_field_1d(f, g, alpha, path, interp);
        });
}

FlowState aligned_add_state(const FlowState& x, const FlowState& x_hat,
                            MixingCoefficient alpha, const AlignmentPath2D& path,
                            KnotInterpolation interp) {
    if (x.grid.dim != 2) throw InvalidInput("2-D path supplied for a 1-D state");
    return combine_state_fields<AlignmentPath2D>(
        x, x_hat, [&](const std::vector<double>& f, const std::vector<double>& g) {
            return aligned_add_field_2d(f, g, x.grid.nx, x.grid.ny, alpha, path, interp);
        });
}

FlowState aligned_pair_combine(const FlowState& x, const FlowState& x_hat,
                               MixingCoefficient alpha, double q,
                               KnotInterpolation interp) {
    if (x.grid != x_hat.grid) throw InvalidInput("states live on different grids");
    if (x.grid.dim == 1) {
        const FeatureField zf = extract_features_1d(x.density);
        const FeatureField zg = extract_features_1d(x_hat.density);
        const AlignmentPath path = dtw_1d(zf.values, zg.values, q);
        return aligned_add_state(x, x_hat, alpha, path, interp);
    }
    const FeatureField zf = extract_features_2d(x.density, x.grid.nx, x.grid.ny);
    const FeatureField zg = extract_features_2d(x_hat.density, x.grid.nx, x.grid.ny);
    Matrix fa(x.grid.nx, x.grid.ny), fb(x.grid.nx, x.grid.ny);
    std::copy(zf.values.begin(), zf.values.end(), fa.data());
    std::copy(zg.values.begin(), zg.values.end(), fb.data());
    const AlignmentPath2D path = dtw_2d(fa, fb, q);
    return aligned_add_state(x, x_hat, alpha, path, interp);
}

}  // namespace fpetpf
