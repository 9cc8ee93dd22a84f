#include "fpetpf/filters.hpp"

#include <algorithm>
#include <cmath>

#include "fpetpf/errors.hpp"
#include "fpetpf/kernels.hpp"

namespace fpetpf {

void Ensemble::validate() const {
    if (particles.empty()) throw InvalidInput("ensemble has no particles");
    if (weights.size() != size()) throw InvalidInput("weight count mismatch");
    weights.validate();
    for (const auto& p : particles) {
        if (p.grid != particles.front().grid)
            throw InvalidInput("particles live on different grids");
        if (p.time != particles.front().time)
            throw InvalidInput("particles have different time stamps");
    }
}

std::vector<double> gaussian_log_likelihoods(const Ensemble& ensemble,
                                             const std::vector<double>& y,
                                             const ObservationOperator& obs,
                                             const GasConstants& gas,
                                             const FilterConfig& cfg) {
    if (cfg.beta_w < 1.0) throw InvalidInput("underweighting factor must be >= 1");
    if (static_cast<int>(y.size()) != obs.size() ||
        cfg.obs_variance.size() != y.size())
        throw InvalidInput("observation dimension mismatch");
    for (double r : cfg.obs_variance)
        if (!(r > 0.0)) throw InvalidInput("observation variances must be positive");

    std::vector<double> loglik(ensemble.size());
    for (int e = 0; e < ensemble.size(); ++e) {
        const std::vector<double> z = obs.observe(ensemble.particles[e], gas);
        double q = 0.0;
        for (std::size_t o = 0; o < y.size(); ++o) {
            const double innov = y[o] - z[o];
            q += innov * innov / (cfg.beta_w * cfg.obs_variance[o]);
        }
        loglik[e] = -0.5 * q;
    }
    return loglik;
}

WeightVector bootstrap_update(const WeightVector& weights,
                              const std::vector<double>& likelihoods) {
    weights.validate();
    if (static_cast<int>(likelihoods.size()) != weights.size())
        throw InvalidInput("likelihood count mismatch");
    WeightVector out;
    out.w.resize(likelihoods.size());
    double sum = 0.0;
    for (std::size_t e = 0; e < likelihoods.size(); ++e) {
        if (likelihoods[e] < 0.0) throw InvalidInput("likelihoods must be nonnegative");
        out.w[e] = likelihoods[e] * weights.w[e];
        sum += out.w[e];
    }
    if (sum <= 0.0) throw AllZeroLikelihood("all posterior weights are zero");
    for (double& x : out.w) x /= sum;
    return out;
}

WeightVector analysis_weights(const Ensemble& ensemble, const std::vector<double>& y,
                              const ObservationOperator& obs, const GasConstants& gas,
                              const FilterConfig& cfg) {
    ensemble.validate();
    const std::vector<double> loglik = gaussian_log_likelihoods(ensemble, y, obs, gas, cfg);
    const double peak = *std::max_element(loglik.begin(), loglik.end());
    WeightVector out;
    out.w.resize(loglik.size());
    double sum = 0.0;
    for (std::size_t e = 0; e < loglik.size(); ++e) {
        out.w[e] = std::exp(loglik[e] - peak);
        sum += out.w[e];
    }
    for (double& x : out.w) x /= sum;
    return out;
}

namespace {

TransportPlan plan_for(const Ensemble& ensemble, const WeightVector& analysis_w) {
    ensemble.validate();
    analysis_w.validate();
    if (analysis_w.size() != ensemble.size())
        throw InvalidInput("analysis weight count mismatch");
    const Matrix d = distance_matrix(ensemble.particles);
    return solve_transport(d, analysis_w);
}

}  // namespace

Ensemble etpf_analysis(const Ensemble& ensemble, const WeightVector& analysis_w) {
    const TransportPlan plan = plan_for(ensemble, analysis_w);
    const auto& k = kernels::ops();
    const int n = ensemble.size();

    Ensemble out;
    out.weights = WeightVector::uniform(n);
    out.particles.reserve(n);
    for (int e = 0; e < n; ++e) {
        FlowState acc = make_state(ensemble.particles.front().grid);
        acc.time = ensemble.particles.front().time;
        auto acc_fields = acc.fields();
        for (int j = 0; j < n; ++j) {
            const double t = plan.coefficients(j, e);
            if (t == 0.0) continue;
            const auto src = ensemble.particles[j].fields();
            for (std::size_t f = 0; f < src.size(); ++f)
                k.axpy(t, src[f]->data(), acc_fields[f]->data(), src[f]->size());
        }
        out.particles.push_back(std::move(acc));
    }
    return out;
}

std::vector<double> alpha_coefficients(std::span<const double> column) {
    const int n = static_cast<int>(column.size());
    if (n < 1) throw InvalidInput("empty transport column");
    std::vector<double> alphas;
    alphas.reserve(n - 1);
    double cum = column[0];
    for (int v = 1; v < n; ++v) {
        const double next = cum + column[v];
        alphas.push_back(next == 0.0 ? 0.0 : cum / next);
        cum = next;
    }
    return alphas;
}

FlowState sequential_combine_plain(const std::vector<FlowState>& forecasts,
                                   const std::vector<double>& alphas) {
    if (forecasts.empty()) throw InvalidInput("no forecasts to combine");
    if (alphas.size() + 1 != forecasts.size())
        throw InvalidInput("need one alpha per fold");
    const auto& k = kernels::ops();
    FlowState acc = forecasts.front();
    for (std::size_t v = 0; v < alphas.size(); ++v) {
        const auto next = forecasts[v + 1].fields();
        auto accf = acc.fields();
        for (std::size_t f = 0; f < accf.size(); ++f)
            k.convex_combine(alphas[v], accf[f]->data(), next[f]->data(),
                             accf[f]->data(), accf[f]->size());
    }
    return acc;
}

Ensemble feature_preserving_analysis(const Ensemble& ensemble,
                                     const WeightVector& analysis_w,
                                     const FilterConfig& cfg) {
    const TransportPlan plan = plan_for(ensemble, analysis_w);
    const int n = ensemble.size();

    Ensemble out;
    out.weights = WeightVector::uniform(n);
    out.particles.reserve(n);
    std::vector<double> column(n);
    for (int e = 0; e < n; ++e) {
        for (int j = 0; j < n; ++j) column[j] = plan.coefficients(j, e);
        const std::vector<double> alphas = alpha_coefficients(column);

        FlowState acc = ensemble.particles.front();
        for (int v = 0; v < n - 1; ++v) {
            const double a = alphas[v];
            if (a == 0.0) {
                // No mass yet: take the incoming particle wholesale.
                acc = ensemble.particles[v + 1];
            } else if (a == 1.0) {
                // Incoming particle carries no mass: skip the fold (and the
                // alignment run).
            } else {
                acc = aligned_pair_combine(acc, ensemble.particles[v + 1],
                                           MixingCoefficient(a), cfg.dtw_exponent,
                                           cfg.interpolation);
            }
        }
        out.particles.push_back(std::move(acc));
    }
    return out;
}

}  // namespace fpetpf
