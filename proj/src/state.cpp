#include "fpetpf/state.hpp"

#include <cmath>

#include "fpetpf/kernels.hpp"

namespace fpetpf {

Grid Grid::line(int nx, double length) {
    if (nx < 7) throw InvalidInput("grid needs at least 7 nodes per axis");
    if (length <= 0.0) throw InvalidInput("grid extent must be positive");
    Grid g;
    g.dim = 1;
    g.nx = nx;
    g.ny = 1;
    g.len_x = length;
    g.dx = length / (nx - 1);
    return g;
}

Grid Grid::plane(int nx, int ny, double len_x, double len_y) {
    if (nx < 7 || ny < 7) throw InvalidInput("grid needs at least 7 nodes per axis");
    if (len_x <= 0.0 || len_y <= 0.0) throw InvalidInput("grid extent must be positive");
    Grid g;
    g.dim = 2;
    g.nx = nx;
    g.ny = ny;
    g.len_x = len_x;
    g.len_y = len_y;
    g.dx = len_x / (nx - 1);
    g.dy = len_y / (ny - 1);
    return g;
}

void FlowState::check_shapes() const {
    const std::size_t n = static_cast<std::size_t>(grid.size());
    if (density.size() != n || mom_x.size() != n || energy.size() != n)
        throw InvalidInput("flow state field shape does not match grid");
    if (grid.dim == 2 && mom_y.size() != n)
        throw InvalidInput("2-D flow state needs a y-momentum field");
    if (grid.dim == 1 && !mom_y.empty())
        throw InvalidInput("1-D flow state must not carry a y-momentum field");
}

std::vector<const std::vector<double>*> FlowState::fields() const {
    if (grid.dim == 1) return {&density, &mom_x, &energy};
    return {&density, &mom_x, &mom_y, &energy};
}

std::vector<std::vector<double>*> FlowState::fields() {
    if (grid.dim == 1) return {&density, &mom_x, &energy};
    return {&density, &mom_x, &mom_y, &energy};
}

FlowState make_state(const Grid& grid) {
    FlowState s;
    s.grid = grid;
    const std::size_t n = static_cast<std::size_t>(grid.size());
    s.density.assign(n, 0.0);
    s.mom_x.assign(n, 0.0);
    if (grid.dim == 2) s.mom_y.assign(n, 0.0);
    s.energy.assign(n, 0.0);
    return s;
}

double state_sq_distance(const FlowState& a, const FlowState& b) {
    if (a.grid != b.grid) throw InvalidInput("states live on different grids");
    const auto& k = kernels::ops();
    const auto fa = a.fields();
    const auto fb = b.fields();
    double total = 0.0;
    for (std::size_t f = 0; f < fa.size(); ++f)
        total += k.sum_sq_diff(fa[f]->data(), fb[f]->data(), fa[f]->size());
    return total;
}

double state_norm(const FlowState& s) {
    double total = 0.0;
    for (const auto* f : s.fields())
        for (double v : *f) total += v * v;
    return std::sqrt(total);
}

}  // namespace fpetpf
