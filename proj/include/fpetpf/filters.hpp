#pragma once

#include <span>
#include <vector>

#include "fpetpf/aligned_combine.hpp"
#include "fpetpf/observation.hpp"
#include "fpetpf/state.hpp"
#include "fpetpf/transport.hpp"

namespace fpetpf {

/// Particles on one grid at one common time, plus their weights.
struct Ensemble {
    std::vector<FlowState> particles;
    WeightVector weights;

    int size() const { return static_cast<int>(particles.size()); }
    /// Throws InvalidInput unless grids/times agree and weights are valid.
    void validate() const;
};

enum class FilterKind { standard_etpf, feature_preserving_etpf, bootstrap };

struct FilterConfig {
    FilterKind kind = FilterKind::feature_preserving_etpf;
    double beta_w = 1.0;                 // likelihood underweighting factor, >= 1
    std::vector<double> obs_variance;    // diagonal of R, one entry per sensor
    double dtw_exponent = 2.0;
    KnotInterpolation interpolation = KnotInterpolation::nearest;
};

/// Gaussian log-likelihoods with covariance beta_w * R.
std::vector<double> gaussian_log_likelihoods(const Ensemble& ensemble,
                                             const std::vector<double>& y,
                                             const ObservationOperator& obs,
                                             const GasConstants& gas,
                                             const FilterConfig& cfg);

/// Bayes update of explicit weights: w' proportional to likelihood * w.
WeightVector bootstrap_update(const WeightVector& weights,
                              const std::vector<double>& likelihoods);

/// Analysis weights for uniformly weighted forecasts: softmax of the
/// log-likelihoods (log-sum-exp stabilized).
WeightVector analysis_weights(const Ensemble& ensemble, const std::vector<double>& y,
                              const ObservationOperator& obs, const GasConstants& gas,
                              const FilterConfig& cfg);

/// Standard ensemble-transform analysis: each output particle is the plain
/// convex combination given by one column of the transport plan; output
/// weights are uniform.
Ensemble etpf_analysis(const Ensemble& ensemble, const WeightVector& analysis_w);

/// Coefficients turning one transport-plan column into a chain of two-way
/// combinations: alpha_v = cumsum(v) / cumsum(v+1), with 0/0 resolved to 0.
std::vector<double> alpha_coefficients(std::span<const double> column);

/// Plain sequential fold x~ <- alpha*x~ + (1-alpha)*x_next; consistency
/// oracle for the pairwise decomposition.
FlowState sequential_combine_plain(const std::vector<FlowState>& forecasts,
                                   const std::vector<double>& alphas);

/// Feature-preserving analysis: folds each transport column through aligned
/// pair combinations; degenerate alphas (0 or 1) skip the alignment.
Ensemble feature_preserving_analysis(const Ensemble& ensemble,
                                     const WeightVector& analysis_w,
                                     const FilterConfig& cfg = {});

}  // namespace fpetpf
