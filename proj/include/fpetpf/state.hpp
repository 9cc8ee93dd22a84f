#pragma once

#include <vector>

#include "fpetpf/errors.hpp"

namespace fpetpf {

/// Uniform, non-staggered Cartesian grid of nodes, 1-D or 2-D. Spacing is
/// extent / (node count - 1); node counts must be at least 7 so the WENO5
/// stencil plus ghost layers fit.
struct Grid {
    int dim = 1;
    int nx = 0;
    int ny = 1;
    double len_x = 1.0;
    double len_y = 0.0;
    double dx = 0.0;
    double dy = 0.0;

    static Grid line(int nx, double length = 1.0);
    static Grid plane(int nx, int ny, double len_x = 2.0, double len_y = 2.0);

    int size() const { return nx * ny; }
    double x(int i) const { return i * dx; }
    double y(int j) const { return j * dy; }
    /// Flat index of node (i, j); x-major storage.
    int node(int i, int j) const { return i * ny + j; }

    bool operator==(const Grid&) const = default;
};

struct GasConstants {
    double gamma = 1.4;
};

/// Conserved fields on a grid: density, momentum per axis, energy density.
/// mom_y is empty in 1-D.
struct FlowState {
    Grid grid;
    std::vector<double> density;
    std::vector<double> mom_x;
    std::vector<double> mom_y;
    std::vector<double> energy;
    double time = 0.0;

    int size() const { return grid.size(); }
    int n_fields() const { return grid.dim == 1 ? 3 : 4; }

    /// Throws InvalidInput when field shapes do not match the grid.
    void check_shapes() const;

    /// Fields in a fixed order (density, mom_x[, mom_y], energy).
    std::vector<const std::vector<double>*> fields() const;
    std::vector<std::vector<double>*> fields();
};

FlowState make_state(const Grid& grid);

/// Squared Euclidean distance over all flattened conserved fields.
double state_sq_distance(const FlowState& a, const FlowState& b);
double state_norm(const FlowState& s);

}  // namespace fpetpf
