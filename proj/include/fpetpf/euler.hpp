#pragma once

#include <limits>
#include <vector>

#include "fpetpf/state.hpp"

namespace fpetpf {

/// Compressible Euler solver: WENO5 finite differences with global
/// Lax-Friedrichs flux splitting, dimension-by-dimension in 2-D, three-stage
/// TVD Runge-Kutta in time, zeroth-order extrapolation (outflow) boundaries.

inline constexpr double kDefaultCfl = 0.45;

/// Pointwise pressure p = (gamma-1) * (E - |m|^2 / (2 rho)). Throws
/// NonPhysicalState (with the node index) when rho or p is not positive.
std::vector<double> pressure(const FlowState& state, const GasConstants& gas);

/// Pointwise entropy s = log(p / rho^gamma).
std::vector<double> entropy(const FlowState& state, const GasConstants& gas);

struct Tendency {
    std::vector<double> density;
    std::vector<double> mom_x;
    std::vector<double> mom_y;
    std::vector<double> energy;
};

/// Semi-discrete right-hand side d/dt (rho, m, E) of the conservative system.
Tendency rhs(const FlowState& state, const GasConstants& gas);

/// Largest stable time step: cfl * dx / max(|u|+c) in 1-D, and
/// cfl / (ax/dx + ay/dy) in 2-D with per-axis maximum wave speeds.
double max_stable_dt(const FlowState& state, const GasConstants& gas,
                     double cfl = kDefaultCfl);

/// One TVD-RK3 step of size dt. Throws CflViolation when dt exceeds the
/// stable step for the given cfl number.
FlowState step(const FlowState& state, double dt, const GasConstants& gas,
               double cfl = kDefaultCfl);

/// Advance to t_target with CFL-limited substeps; the last substep lands
/// exactly on t_target. max_dt additionally caps every substep, which pins
/// the substep schedule for reproducibility checks.
FlowState advance(const FlowState& state, double t_target, const GasConstants& gas,
                  double cfl = kDefaultCfl,
                  double max_dt = std::numeric_limits<double>::infinity());

/// Total mass, x/y-momentum and energy, each summed as field * cell volume.
std::vector<double> integrated_quantities(const FlowState& state);

}  // namespace fpetpf
