#include "fpetpf/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "fpetpf/errors.hpp"

namespace fpetpf {

WeightVector WeightVector::uniform(int n) {
    if (n < 1) throw InvalidInput("weight vector needs at least one entry");
    WeightVector v;
    v.w.assign(n, 1.0 / n);
    return v;
}

void WeightVector::validate() const {
    if (w.empty()) throw InvalidInput("weight vector is empty");
    double sum = 0.0;
    for (double x : w) {
        if (x < 0.0) throw InvalidInput("weights must be nonnegative");
        sum += x;
    }
    if (std::fabs(sum - 1.0) > 1e-12) throw InvalidInput("weights must sum to 1");
}

Matrix distance_matrix(const std::vector<FlowState>& particles) {
    const int n = static_cast<int>(particles.size());
    if (n < 2) throw InvalidInput("distance matrix needs at least 2 particles");
    Matrix d(n, n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double dist = std::sqrt(state_sq_distance(particles[i], particles[j]));
            d(i, j) = dist;
            d(j, i) = dist;
        }
    return d;
}

namespace {

struct SimplexState {
    int n;
    Matrix flow;
    std::vector<char> in_basis;           // n*n flags
    std::vector<std::vector<int>> row_adj;  // basic columns per row
    std::vector<std::vector<int>> col_adj;  // basic rows per column

    bool basic(int i, int j) const { return in_basis[static_cast<std::size_t>(i) * n + j]; }
    void set_basic(int i, int j, bool b) {
        in_basis[static_cast<std::size_t>(i) * n + j] = b;
    }

    void rebuild_adjacency() {
        for (auto& v : row_adj) v.clear();
        for (auto& v : col_adj) v.clear();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (basic(i, j)) {
                    row_adj[i].push_back(j);
                    col_adj[j].push_back(i);
                }
    }
};

/// Dual potentials on the basis tree, rooted at row 0 (u[0] = 0).
void compute_duals(const SimplexState& s, const Matrix& d, std::vector<double>& u,
                   std::vector<double>& v) {
    const int n = s.n;
    u.assign(n, 0.0);
    v.assign(n, 0.0);
    std::vector<char> row_done(n, 0), col_done(n, 0);
    std::queue<int> q;  // rows are 0..n-1, columns are n..2n-1
    row_done[0] = 1;
    q.push(0);
    while (!q.empty()) {
        const int node = q.front();
        q.pop();
        if (node < n) {
            for (int j : s.row_adj[node])
                if (!col_done[j]) {
                    v[j] = d(node, j) - u[node];
                    col_done[j] = 1;
                    q.push(n + j);
                }
        } else {
            const int j = node - n;
            for (int i : s.col_adj[j])
                if (!row_done[i]) {
                    u[i] = d(i, j) - v[j];
                    row_done[i] = 1;
                    q.push(i);
                }
        }
    }
    for (int i = 0; i < n; ++i)
        if (!row_done[i] || !col_done[i])
            throw NumericalFailure("transport basis is not a spanning tree");
}

/// Alternating row/column path between row `si` and column `sj` through the
/// basis tree; returned as the list of basic cells traversed.
std::vector<std::pair<int, int>> tree_path(const SimplexState& s, int si, int sj) {
    const int n = s.n;
    std::vector<int> parent(2 * n, -1);
    std::vector<char> seen(2 * n, 0);
    std::queue<int> q;
    seen[si] = 1;
    q.push(si);
    const int target = n + sj;
    while (!q.empty()) {
        const int node = q.front();
        q.pop();
        if (node == target) break;
        if (node < n) {
            for (int j : s.row_adj[node])
                if (!seen[n + j]) {
                    seen[n + j] = 1;
                    parent[n + j] = node;
                    q.push(n + j);
                }
        } else {
            for (int i : s.col_adj[node - n])
                if (!seen[i]) {
                    seen[i] = 1;
                    parent[i] = node;
                    q.push(i);
                }
        }
    }
    if (!seen[target]) throw NumericalFailure("transport basis is disconnected");

    std::vector<std::pair<int, int>> cells;
    int node = target;
    while (parent[node] != -1) {
        const int p = parent[node];
        if (node < n)
            cells.emplace_back(node, p - n);
        else
            cells.emplace_back(p, node - n);
        node = p;
    }
    std::reverse(cells.begin(), cells.end());
    return cells;
}

}  // namespace

TransportPlan solve_transport(const Matrix& distances, const WeightVector& w) {
    const int n = distances.rows();
    if (distances.cols() != n || n < 1) throw InvalidInput("cost matrix must be square");
    if (w.size() != n) throw InvalidInput("weights do not match the cost matrix");
    w.validate();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (distances(i, j) < 0.0) throw InvalidInput("costs must be nonnegative");

    SimplexState s;
    s.n = n;
    s.flow = Matrix(n, n, 0.0);
    s.in_basis.assign(static_cast<std::size_t>(n) * n, 0);
    s.row_adj.resize(n);
    s.col_adj.resize(n);

    // Supplies n*w, demands 1 each; rescale so both sides balance exactly.
    std::vector<double> rem_a(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += n * w[i];
    for (int i = 0; i < n; ++i) rem_a[i] = n * w[i] * (n / total);
    std::vector<double> rem_b(n, 1.0);

    // North-west-corner start: a staircase of 2n-1 basic cells.
    {
        int i = 0, j = 0;
        while (true) {
            const double q = std::min(rem_a[i], rem_b[j]);
            s.flow(i, j) = q;
            s.set_basic(i, j, true);
            rem_a[i] -= q;
            rem_b[j] -= q;
            if (i == n - 1 && j == n - 1) break;
            if (i == n - 1)
                ++j;
            else if (j == n - 1)
                ++i;
            else if (rem_a[i] <= rem_b[j])
                ++i;
            else
                ++j;
        }
    }

    std::vector<double> u, v;
    const double enter_tol = 1e-11;
    const long max_iters = 10000 + 200L * n * n;
    for (long iter = 0;; ++iter) {
        if (iter > max_iters)
            throw NumericalFailure("transportation simplex failed to terminate");
        s.rebuild_adjacency();
        compute_duals(s, distances, u, v);

        // Bland's rule: first improving cell in row-major order.
        int ei = -1, ej = -1;
        for (int i = 0; i < n && ei < 0; ++i)
            for (int j = 0; j < n; ++j)
                if (!s.basic(i, j) && distances(i, j) - u[i] - v[j] < -enter_tol) {
                    ei = i;
                    ej = j;
                    break;
                }
        if (ei < 0) break;

        // The cycle is the entering cell plus the tree path between its row
        // and column. Cells at odd positions along that path lose flow.
        const auto cells = tree_path(s, ei, ej);
        double theta = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < cells.size(); k += 2)
            theta = std::min(theta, s.flow(cells[k].first, cells[k].second));
        // Among the minimum-ratio cells pick the lexicographically smallest.
        int leave = -1;
        for (std::size_t k = 0; k < cells.size(); k += 2) {
            if (s.flow(cells[k].first, cells[k].second) > theta + 1e-15) continue;
            if (leave < 0 || cells[k] < cells[leave]) leave = static_cast<int>(k);
        }
        if (leave < 0) throw NumericalFailure("no leaving cell in transport pivot");

        s.flow(ei, ej) += theta;
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (k % 2 == 0)
                s.flow(cells[k].first, cells[k].second) -= theta;
            else
                s.flow(cells[k].first, cells[k].second) += theta;
        }
        const auto [li, lj] = cells[leave];
        s.flow(li, lj) = 0.0;
        s.set_basic(li, lj, false);
        s.set_basic(ei, ej, true);
    }

    TransportPlan plan;
    plan.coefficients = s.flow;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double& t = plan.coefficients(i, j);
            if (t < 0.0) {
                if (t < -1e-12) throw NumericalFailure("negative transport coefficient");
                t = 0.0;
            }
        }
    double objective = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) objective += plan.coefficients(i, j) * distances(i, j);
    plan.objective = objective;
    plan.row_duals = u;
    plan.col_duals = v;
    return plan;
}

}  // namespace fpetpf
