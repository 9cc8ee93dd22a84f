#pragma once

#include <vector>

#include "fpetpf/state.hpp"

namespace fpetpf {

/// Sparse pressure sensors: physical coordinates resolved once to the nearest
/// grid node. The observed quantity is the pressure at those nodes.
struct ObservationOperator {
    std::vector<double> coord_x;
    std::vector<double> coord_y;      // empty in 1-D
    std::vector<int> node_indices;    // flat indices into the grid

    int size() const { return static_cast<int>(node_indices.size()); }

    static ObservationOperator pressure_sensors_1d(const Grid& grid,
                                                   const std::vector<double>& x);
    static ObservationOperator pressure_sensors_2d(const Grid& grid,
                                                   const std::vector<double>& x,
                                                   const std::vector<double>& y);

    /// H(x): pressure sampled at the sensor nodes.
    std::vector<double> observe(const FlowState& state, const GasConstants& gas) const;
};

}  // namespace fpetpf
