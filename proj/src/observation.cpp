#include "fpetpf/observation.hpp"

#include <cmath>

#include "fpetpf/errors.hpp"
#include "fpetpf/euler.hpp"

namespace fpetpf {

namespace {

int nearest_index(double coord, double spacing, int count) {
    const int i = static_cast<int>(std::lround(coord / spacing));
    if (i < 0 || i >= count) throw InvalidInput("sensor outside the domain");
    return i;
}

}  // namespace

ObservationOperator ObservationOperator::pressure_sensors_1d(const Grid& grid,
                                                             const std::vector<double>& x) {
    if (grid.dim != 1) throw InvalidInput("1-D sensors on a 2-D grid");
    if (x.empty()) throw InvalidInput("need at least one sensor");
    ObservationOperator h;
    h.coord_x = x;
    for (double c : x) h.node_indices.push_back(nearest_index(c, grid.dx, grid.nx));
    return h;
}

ObservationOperator ObservationOperator::pressure_sensors_2d(const Grid& grid,
                                                             const std::vector<double>& x,
                                                             const std::vector<double>& y) {
    if (grid.dim != 2) throw InvalidInput("2-D sensors on a 1-D grid");
    if (x.empty() || x.size() != y.size()) throw InvalidInput("bad sensor coordinate lists");
    ObservationOperator h;
    h.coord_x = x;
    h.coord_y = y;
    for (std::size_t s = 0; s < x.size(); ++s) {
        const int i = nearest_index(x[s], grid.dx, grid.nx);
        const int j = nearest_index(y[s], grid.dy, grid.ny);
        h.node_indices.push_back(grid.node(i, j));
    }
    return h;
}

std::vector<double> ObservationOperator::observe(const FlowState& state,
                                                 const GasConstants& gas) const {
    const std::vector<double> p = pressure(state, gas);
    std::vector<double> z(node_indices.size());
    for (std::size_t s = 0; s < node_indices.size(); ++s) z[s] = p[node_indices[s]];
    return z;
}

}  // namespace fpetpf
