#include "fpetpf/euler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fpetpf/kernels.hpp"

namespace fpetpf {

namespace {

void check_gas(const GasConstants& gas) {
    if (!(gas.gamma > 1.0)) throw InvalidInput("adiabatic index must exceed 1");
}

double kinetic_sq(const FlowState& s, int idx) {
    double m2 = s.mom_x[idx] * s.mom_x[idx];
    if (s.grid.dim == 2) m2 += s.mom_y[idx] * s.mom_y[idx];
    return m2;
}

struct Workspace {
    std::vector<double> fp, fm, flux_plus, flux_minus;
    std::vector<double> line_q[4], line_f[4], line_t[4];
    std::vector<double> line_u, line_p;
};

Workspace& workspace() {
    thread_local Workspace w;
    return w;
}

/// Accumulates out[i] -= (Fhat[i+1/2] - Fhat[i-1/2]) / dx for one conserved
/// component. q and f are ghost-padded lines of length n + 6.
void flux_divergence_line(const double* q, const double* f, double alpha, int n,
                          double inv_dx, double* out, Workspace& w) {
    const auto& k = kernels::ops();
    const int padded = n + 6;
    w.fp.resize(padded);
    w.fm.resize(padded);
    w.flux_plus.resize(n + 1);
    w.flux_minus.resize(n + 1);
    for (int g = 0; g < padded; ++g) {
        w.fp[g] = 0.5 * (f[g] + alpha * q[g]);
        w.fm[g] = 0.5 * (f[g] - alpha * q[g]);
    }
    k.weno5_plus(w.fp.data(), static_cast<std::size_t>(n + 1), w.flux_plus.data());
    k.weno5_minus(w.fm.data() + 1, static_cast<std::size_t>(n + 1), w.flux_minus.data());
    for (int i = 0; i < n; ++i) {
        const double right = w.flux_plus[i + 1] + w.flux_minus[i + 1];
        const double left = w.flux_plus[i] + w.flux_minus[i];
        out[i] -= (right - left) * inv_dx;
    }
}

/// Zeroth-order extrapolation into 3 ghost layers per side.
void pad_line(const double* src, int n, int stride, std::vector<double>& dst) {
    dst.resize(n + 6);
    for (int i = 0; i < n; ++i) dst[i + 3] = src[static_cast<std::size_t>(i) * stride];
    for (int g = 0; g < 3; ++g) {
        dst[g] = dst[3];
        dst[n + 3 + g] = dst[n + 2];
    }
}

Tendency rhs_1d(const FlowState& s, const GasConstants& gas,
                const std::vector<double>& prs) {
    const int n = s.grid.nx;
    Workspace& w = workspace();

    pad_line(s.density.data(), n, 1, w.line_q[0]);
    pad_line(s.mom_x.data(), n, 1, w.line_q[1]);
    pad_line(s.energy.data(), n, 1, w.line_q[2]);
    pad_line(prs.data(), n, 1, w.line_p);

    const int padded = n + 6;
    w.line_u.resize(padded);
    double alpha = 0.0;
    for (int g = 0; g < padded; ++g) {
        const double rho = w.line_q[0][g];
        const double u = w.line_q[1][g] / rho;
        w.line_u[g] = u;
        const double c = std::sqrt(gas.gamma * w.line_p[g] / rho);
        alpha = std::max(alpha, std::fabs(u) + c);
    }

    for (int c = 0; c < 3; ++c) w.line_f[c].resize(padded);
    for (int g = 0; g < padded; ++g) {
        const double u = w.line_u[g];
        const double p = w.line_p[g];
        w.line_f[0][g] = w.line_q[1][g];
        w.line_f[1][g] = w.line_q[1][g] * u + p;
        w.line_f[2][g] = u * (w.line_q[2][g] + p);
    }

    Tendency out;
    out.density.assign(n, 0.0);
    out.mom_x.assign(n, 0.0);
    out.energy.assign(n, 0.0);
    const double inv_dx = 1.0 / s.grid.dx;
    flux_divergence_line(w.line_q[0].data(), w.line_f[0].data(), alpha, n, inv_dx,
                         out.density.data(), w);
    flux_divergence_line(w.line_q[1].data(), w.line_f[1].data(), alpha, n, inv_dx,
                         out.mom_x.data(), w);
    flux_divergence_line(w.line_q[2].data(), w.line_f[2].data(), alpha, n, inv_dx,
                         out.energy.data(), w);
    return out;
}

struct WaveSpeeds {
    double ax = 0.0;
    double ay = 0.0;
};

WaveSpeeds max_wave_speeds(const FlowState& s, const GasConstants& gas,
                           const std::vector<double>& prs) {
    WaveSpeeds ws;
    const int n = s.size();
    for (int idx = 0; idx < n; ++idx) {
        const double rho = s.density[idx];
        const double c = std::sqrt(gas.gamma * prs[idx] / rho);
        ws.ax = std::max(ws.ax, std::fabs(s.mom_x[idx] / rho) + c);
        if (s.grid.dim == 2) ws.ay = std::max(ws.ay, std::fabs(s.mom_y[idx] / rho) + c);
    }
    return ws;
}

Tendency rhs_2d(const FlowState& s, const GasConstants& gas,
                const std::vector<double>& prs) {
    const int nx = s.grid.nx;
    const int ny = s.grid.ny;
    Workspace& w = workspace();

    const WaveSpeeds ws = max_wave_speeds(s, gas, prs);

    Tendency out;
    out.density.assign(s.density.size(), 0.0);
    out.mom_x.assign(s.mom_x.size(), 0.0);
    out.mom_y.assign(s.mom_y.size(), 0.0);
    out.energy.assign(s.energy.size(), 0.0);
    double* tend[4] = {out.density.data(), out.mom_x.data(), out.mom_y.data(),
                       out.energy.data()};
    const double* cons[4] = {s.density.data(), s.mom_x.data(), s.mom_y.data(),
                             s.energy.data()};

    // x sweeps: lines over i at fixed j (stride ny in the flat layout).
    const double inv_dx = 1.0 / s.grid.dx;
    for (int j = 0; j < ny; ++j) {
        for (int c = 0; c < 4; ++c) pad_line(cons[c] + j, nx, ny, w.line_q[c]);
        pad_line(prs.data() + j, nx, ny, w.line_p);
        const int padded = nx + 6;
        for (int c = 0; c < 4; ++c) w.line_f[c].resize(padded);
        for (int g = 0; g < padded; ++g) {
            const double rho = w.line_q[0][g];
            const double u = w.line_q[1][g] / rho;
            const double p = w.line_p[g];
            w.line_f[0][g] = w.line_q[1][g];
            w.line_f[1][g] = w.line_q[1][g] * u + p;
            w.line_f[2][g] = w.line_q[2][g] * u;
            w.line_f[3][g] = u * (w.line_q[3][g] + p);
        }
        for (int c = 0; c < 4; ++c) {
            w.line_t[c].assign(nx, 0.0);
            flux_divergence_line(w.line_q[c].data(), w.line_f[c].data(), ws.ax, nx,
                                 inv_dx, w.line_t[c].data(), w);
            for (int i = 0; i < nx; ++i) tend[c][s.grid.node(i, j)] += w.line_t[c][i];
        }
    }

    // y sweeps: lines over j at fixed i (contiguous).
    const double inv_dy = 1.0 / s.grid.dy;
    for (int i = 0; i < nx; ++i) {
        const int base = s.grid.node(i, 0);
        for (int c = 0; c < 4; ++c) pad_line(cons[c] + base, ny, 1, w.line_q[c]);
        pad_line(prs.data() + base, ny, 1, w.line_p);
        const int padded = ny + 6;
        for (int c = 0; c < 4; ++c) w.line_f[c].resize(padded);
        for (int g = 0; g < padded; ++g) {
            const double rho = w.line_q[0][g];
            const double v = w.line_q[2][g] / rho;
            const double p = w.line_p[g];
            w.line_f[0][g] = w.line_q[2][g];
            w.line_f[1][g] = w.line_q[1][g] * v;
            w.line_f[2][g] = w.line_q[2][g] * v + p;
            w.line_f[3][g] = v * (w.line_q[3][g] + p);
        }
        for (int c = 0; c < 4; ++c) {
            w.line_t[c].assign(ny, 0.0);
            flux_divergence_line(w.line_q[c].data(), w.line_f[c].data(), ws.ay, ny,
                                 inv_dy, w.line_t[c].data(), w);
            for (int j = 0; j < ny; ++j) tend[c][base + j] += w.line_t[c][j];
        }
    }
    return out;
}

void add_scaled(FlowState& s, const Tendency& t, double c) {
    const auto& k = kernels::ops();
    k.axpy(c, t.density.data(), s.density.data(), s.density.size());
    k.axpy(c, t.mom_x.data(), s.mom_x.data(), s.mom_x.size());
    if (s.grid.dim == 2) k.axpy(c, t.mom_y.data(), s.mom_y.data(), s.mom_y.size());
    k.axpy(c, t.energy.data(), s.energy.data(), s.energy.size());
}

FlowState blend(double a, const FlowState& x, const FlowState& y) {
    const auto& k = kernels::ops();
    FlowState out = make_state(x.grid);
    k.convex_combine(a, x.density.data(), y.density.data(), out.density.data(),
                     out.density.size());
    k.convex_combine(a, x.mom_x.data(), y.mom_x.data(), out.mom_x.data(), out.mom_x.size());
    if (x.grid.dim == 2)
        k.convex_combine(a, x.mom_y.data(), y.mom_y.data(), out.mom_y.data(),
                         out.mom_y.size());
    k.convex_combine(a, x.energy.data(), y.energy.data(), out.energy.data(),
                     out.energy.size());
    return out;
}

}  // namespace

std::vector<double> pressure(const FlowState& state, const GasConstants& gas) {
    check_gas(gas);
    state.check_shapes();
    const int n = state.size();
    std::vector<double> p(n);
    for (int idx = 0; idx < n; ++idx) {
        const double rho = state.density[idx];
        if (!(rho > 0.0))
            throw NonPhysicalState("non-positive density at node " + std::to_string(idx),
                                   idx);
        const double val = (gas.gamma - 1.0) * (state.energy[idx] -
                                                0.5 * kinetic_sq(state, idx) / rho);
        if (!(val > 0.0))
            throw NonPhysicalState("non-positive pressure at node " + std::to_string(idx),
                                   idx);
        p[idx] = val;
    }
    return p;
}

std::vector<double> entropy(const FlowState& state, const GasConstants& gas) {
    const std::vector<double> p = pressure(state, gas);
    const int n = state.size();
    std::vector<double> s(n);
    for (int idx = 0; idx < n; ++idx)
        s[idx] = std::log(p[idx]) - gas.gamma * std::log(state.density[idx]);
    return s;
}

Tendency rhs(const FlowState& state, const GasConstants& gas) {
    const std::vector<double> p = pressure(state, gas);
    return state.grid.dim == 1 ? rhs_1d(state, gas, p) : rhs_2d(state, gas, p);
}

double max_stable_dt(const FlowState& state, const GasConstants& gas, double cfl) {
    const std::vector<double> p = pressure(state, gas);
    const WaveSpeeds ws = max_wave_speeds(state, gas, p);
    if (state.grid.dim == 1) return cfl * state.grid.dx / ws.ax;
    return cfl / (ws.ax / state.grid.dx + ws.ay / state.grid.dy);
}

FlowState step(const FlowState& state, double dt, const GasConstants& gas, double cfl) {
    if (!(dt > 0.0)) throw InvalidInput("time step must be positive");
    const double bound = max_stable_dt(state, gas, cfl);
    if (dt > bound * (1.0 + 1e-9))
        throw CflViolation("dt " + std::to_string(dt) + " exceeds stable step " +
                           std::to_string(bound));

    const Tendency k1 = rhs(state, gas);
    FlowState u1 = state;
    add_scaled(u1, k1, dt);

    const Tendency k2 = rhs(u1, gas);
    FlowState u2 = blend(0.75, state, u1);
    add_scaled(u2, k2, 0.25 * dt);

    const Tendency k3 = rhs(u2, gas);
    FlowState out = blend(1.0 / 3.0, state, u2);
    add_scaled(out, k3, (2.0 / 3.0) * dt);
    out.time = state.time + dt;
    return out;
}

FlowState advance(const FlowState& state, double t_target, const GasConstants& gas,
                  double cfl, double max_dt) {
    const double eps = 1e-13 * std::max(1.0, std::fabs(t_target));
    if (t_target < state.time - eps)
        throw InvalidInput("cannot advance backwards in time");
    FlowState cur = state;
    while (cur.time < t_target - eps) {
        const double dt =
            std::min({max_stable_dt(cur, gas, cfl), max_dt, t_target - cur.time});
        cur = step(cur, dt, gas, cfl);
    }
    cur.time = t_target;
    return cur;
}

std::vector<double> integrated_quantities(const FlowState& state) {
    const double vol =
        state.grid.dim == 1 ? state.grid.dx : state.grid.dx * state.grid.dy;
    std::vector<double> totals;
    for (const auto* f : state.fields()) {
        double sum = 0.0;
        for (double v : *f) sum += v;
        totals.push_back(sum * vol);
    }
    return totals;
}

}  // namespace fpetpf
