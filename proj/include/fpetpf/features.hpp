#pragma once

#include <string>
#include <vector>

#include "fpetpf/errors.hpp"

namespace fpetpf {

/// Difference-quotient feature field used as alignment input. Same shape as
/// the source field; the first entry (1-D) or first row and column (2-D) are
/// exactly zero. `provenance` records which variables and coefficients
/// produced the values.
struct FeatureField {
    std::vector<double> values;
    int nx = 0;
    int ny = 1;
    std::string provenance;
};

/// Backward difference quotient with a leading zero:
/// [0, f2-f1, ..., fn-f(n-1)].
FeatureField extract_features_1d(const std::vector<double>& field,
                                 const std::string& provenance = "rho");

/// Mixed backward difference: z(i,j) = f(i,j) - f(i-1,j) - (f(i,j-1) -
/// f(i-1,j-1)) for i,j >= 2 (1-based); first row and column zero.
FeatureField extract_features_2d(const std::vector<double>& field, int nx, int ny,
                                 const std::string& provenance = "rho");

struct WeightedField {
    const std::vector<double>* values = nullptr;
    double coefficient = 0.0;
    std::string name;
};

/// Coefficient-weighted sum of per-field feature extractions; all fields must
/// share one shape and at least one coefficient must be nonzero.
FeatureField extract_features_weighted(const std::vector<WeightedField>& terms, int nx,
                                       int ny = 1);

}  // namespace fpetpf
