#include "fpetpf/riemann.hpp"

#include <algorithm>
#include <cmath>

#include "fpetpf/errors.hpp"

namespace fpetpf {

namespace {

double sound_speed(const PrimitiveState& s, double gamma) {
    return std::sqrt(gamma * s.p / s.rho);
}

/// Toro's pressure function for one side and its derivative.
struct SideFn {
    double a, b, c, p, rho, gamma;

    SideFn(const PrimitiveState& s, double g)
        : a(2.0 / ((g + 1.0) * s.rho)),
          b((g - 1.0) / (g + 1.0) * s.p),
          c(sound_speed(s, g)),
          p(s.p),
          rho(s.rho),
          gamma(g) {}

    double value(double pr) const {
        if (pr > p) return (pr - p) * std::sqrt(a / (pr + b));
        return 2.0 * c / (gamma - 1.0) * (std::pow(pr / p, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
    }

    double derivative(double pr) const {
        if (pr > p) {
            const double root = std::sqrt(a / (pr + b));
            return root * (1.0 - 0.5 * (pr - p) / (pr + b));
        }
        return 1.0 / (rho * c) * std::pow(pr / p, -(gamma + 1.0) / (2.0 * gamma));
    }
};

double initial_guess(const PrimitiveState& l, const PrimitiveState& r, double gamma,
                     double cl, double cr) {
    const double tol = 1e-12;
    const double p_pv = std::max(
        tol, 0.5 * (l.p + r.p) - 0.125 * (r.u - l.u) * (l.rho + r.rho) * (cl + cr));
    const double p_min = std::min(l.p, r.p);
    const double p_max = std::max(l.p, r.p);
    if (p_max / p_min <= 2.0 && p_pv >= p_min && p_pv <= p_max) return p_pv;
    if (p_pv < p_min) {
        // Two-rarefaction approximation.
        const double z = (gamma - 1.0) / (2.0 * gamma);
        const double num = cl + cr - 0.5 * (gamma - 1.0) * (r.u - l.u);
        const double den = cl / std::pow(l.p, z) + cr / std::pow(r.p, z);
        return std::pow(num / den, 1.0 / z);
    }
    // Two-shock approximation.
    const SideFn fl(l, gamma), fr(r, gamma);
    const double gl = std::sqrt(fl.a / (p_pv + fl.b));
    const double gr = std::sqrt(fr.a / (p_pv + fr.b));
    return std::max(tol, (gl * l.p + gr * r.p - (r.u - l.u)) / (gl + gr));
}

}  // namespace

RiemannSolution solve_riemann(const PrimitiveState& left, const PrimitiveState& right,
                              double gamma) {
    if (!(left.rho > 0.0 && right.rho > 0.0 && left.p > 0.0 && right.p > 0.0))
        throw InvalidInput("Riemann data must have positive density and pressure");
    if (!(gamma > 1.0)) throw InvalidInput("adiabatic index must exceed 1");

    const double cl = sound_speed(left, gamma);
    const double cr = sound_speed(right, gamma);
    if (2.0 * (cl + cr) / (gamma - 1.0) <= right.u - left.u)
        throw VacuumFormation("initial data produce vacuum");

    const SideFn fl(left, gamma), fr(right, gamma);
    double p = initial_guess(left, right, gamma, cl, cr);
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
        const double f = fl.value(p) + fr.value(p) + (right.u - left.u);
        const double df = fl.derivative(p) + fr.derivative(p);
        double next = p - f / df;
        if (next <= 0.0) next = 0.5 * p;
        const double change = 2.0 * std::fabs(next - p) / (next + p);
        p = next;
        if (change < 1e-12) {
            converged = true;
            break;
        }
    }
    if (!converged) throw NumericalFailure("star pressure iteration did not converge");

    RiemannSolution sol;
    sol.left = left;
    sol.right = right;
    sol.gamma = gamma;
    sol.p_star = p;
    sol.u_star = 0.5 * (left.u + right.u) + 0.5 * (fr.value(p) - fl.value(p));

    const double gm = (gamma - 1.0) / (gamma + 1.0);
    sol.left_is_shock = p > left.p;
    sol.right_is_shock = p > right.p;

    if (sol.left_is_shock) {
        const double ratio = p / left.p;
        sol.rho_star_left = left.rho * ((ratio + gm) / (gm * ratio + 1.0));
        sol.left_shock_speed =
            left.u - cl * std::sqrt((gamma + 1.0) / (2.0 * gamma) * ratio +
                                    (gamma - 1.0) / (2.0 * gamma));
    } else {
        sol.rho_star_left = left.rho * std::pow(p / left.p, 1.0 / gamma);
        const double c_star = cl * std::pow(p / left.p, (gamma - 1.0) / (2.0 * gamma));
        sol.left_head = left.u - cl;
        sol.left_tail = sol.u_star - c_star;
    }

    if (sol.right_is_shock) {
        const double ratio = p / right.p;
        sol.rho_star_right = right.rho * ((ratio + gm) / (gm * ratio + 1.0));
        sol.right_shock_speed =
            right.u + cr * std::sqrt((gamma + 1.0) / (2.0 * gamma) * ratio +
                                     (gamma - 1.0) / (2.0 * gamma));
    } else {
        sol.rho_star_right = right.rho * std::pow(p / right.p, 1.0 / gamma);
        const double c_star = cr * std::pow(p / right.p, (gamma - 1.0) / (2.0 * gamma));
        sol.right_head = right.u + cr;
        sol.right_tail = sol.u_star + c_star;
    }
    return sol;
}

PrimitiveState RiemannSolution::sample(double xi) const {
    const double gm = (gamma - 1.0) / (gamma + 1.0);
    if (xi <= u_star) {
        const double cl = sound_speed(left, gamma);
        if (left_is_shock) {
            if (xi < left_shock_speed) return left;
            return {rho_star_left, u_star, p_star};
        }
        if (xi < left_head) return left;
        if (xi > left_tail) return {rho_star_left, u_star, p_star};
        const double factor = 2.0 / (gamma + 1.0) + gm / cl * (left.u - xi);
        return {left.rho * std::pow(factor, 2.0 / (gamma - 1.0)),
                2.0 / (gamma + 1.0) * (cl + 0.5 * (gamma - 1.0) * left.u + xi),
                left.p * std::pow(factor, 2.0 * gamma / (gamma - 1.0))};
    }
    const double cr = sound_speed(right, gamma);
    if (right_is_shock) {
        if (xi > right_shock_speed) return right;
        return {rho_star_right, u_star, p_star};
    }
    if (xi > right_head) return right;
    if (xi < right_tail) return {rho_star_right, u_star, p_star};
    const double factor = 2.0 / (gamma + 1.0) - gm / cr * (right.u - xi);
    return {right.rho * std::pow(factor, 2.0 / (gamma - 1.0)),
            2.0 / (gamma + 1.0) * (-cr + 0.5 * (gamma - 1.0) * right.u + xi),
            right.p * std::pow(factor, 2.0 * gamma / (gamma - 1.0))};
}

}  // namespace fpetpf
