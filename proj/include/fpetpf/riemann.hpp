#pragma once

namespace fpetpf {

struct PrimitiveState {
    double rho = 0.0;
    double u = 0.0;
    double p = 0.0;
};

/// Exact similarity solution of the 1-D Riemann problem for an ideal gas.
/// The star pressure is found by Newton iteration to 1e-12 relative accuracy.
struct RiemannSolution {
    PrimitiveState left, right;
    double gamma = 1.4;
    double p_star = 0.0;
    double u_star = 0.0;
    double rho_star_left = 0.0;
    double rho_star_right = 0.0;

    bool left_is_shock = false;
    bool right_is_shock = false;
    double left_shock_speed = 0.0;
    double left_head = 0.0;   // rarefaction fan edges
    double left_tail = 0.0;
    double right_shock_speed = 0.0;
    double right_head = 0.0;
    double right_tail = 0.0;

    /// State at similarity coordinate xi = (x - x_d) / t.
    PrimitiveState sample(double xi) const;
};

/// Throws VacuumFormation when the data admit no positive-density solution.
RiemannSolution solve_riemann(const PrimitiveState& left, const PrimitiveState& right,
                              double gamma);

}  // namespace fpetpf
