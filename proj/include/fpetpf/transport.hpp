#pragma once

#include <vector>

#include "fpetpf/matrix.hpp"
#include "fpetpf/state.hpp"

namespace fpetpf {

/// Nonnegative weights summing to 1.
struct WeightVector {
    std::vector<double> w;

    int size() const { return static_cast<int>(w.size()); }
    double operator[](int e) const { return w[e]; }

    static WeightVector uniform(int n);
    /// Throws InvalidInput unless w >= 0 and sums to 1 within 1e-12.
    void validate() const;
};

/// Solution of the discrete transportation problem: coefficients with column
/// sums 1 and row sums n_e * w_a, the objective value, and the dual
/// potentials certifying optimality.
struct TransportPlan {
    Matrix coefficients;
    double objective = 0.0;
    std::vector<double> row_duals;
    std::vector<double> col_duals;
};

/// Pairwise Euclidean distances of the flattened particle states.
Matrix distance_matrix(const std::vector<FlowState>& particles);

/// Exact basic optimal solution of
///   min sum T*D  s.t.  T >= 0, column sums = 1, row sums = n * w[i]
/// via the transportation simplex (north-west-corner start, Bland's rule).
TransportPlan solve_transport(const Matrix& distances, const WeightVector& w);

}  // namespace fpetpf
