#include "nfactor/gridorder.hpp"

#include <algorithm>
#include <stdexcept>

namespace nfactor {

GridBijection::GridBijection(GridShape shape, std::vector<GridCell> cells)
    : shape_(shape), cells_(std::move(cells)) {
    if (shape_.r < 1 || shape_.s < 1) throw std::invalid_argument("grid shape must be positive");
    std::size_t n = static_cast<std::size_t>(shape_.cell_count());
    if (cells_.size() != n) throw std::invalid_argument("cell sequence has wrong length");
    positions_.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const GridCell& c = cells_[k];
        if (c.i < 1 || c.i > shape_.r || c.j < 1 || c.j > shape_.s) {
            throw std::invalid_argument("cell out of range");
        }
        std::size_t idx = static_cast<std::size_t>((c.i - 1) * shape_.s + (c.j - 1));
        if (positions_[idx] != 0) throw std::invalid_argument("cell repeated in sequence");
        positions_[idx] = static_cast<int>(k + 1);
    }
}

void for_each_topological_order(const Dag& dag,
                                const std::function<bool(const std::vector<int>&)>& visit) {
    int n = dag.node_count;
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : dag.edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge out of range");
        succ[static_cast<std::size_t>(u)].push_back(v);
        ++indeg[static_cast<std::size_t>(v)];
    }

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    bool stopped = false;

    // Kahn's step with backtracking: try every zero-in-degree node in
    // ascending order, remove it, recurse, restore.
    auto rec = [&](auto&& self) -> void {
        if (stopped) return;
        if (static_cast<int>(order.size()) == n) {
            if (!visit(order)) stopped = true;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (indeg[static_cast<std::size_t>(v)] != 0) continue;
            indeg[static_cast<std::size_t>(v)] = -1;  // mark removed
            for (int w : succ[static_cast<std::size_t>(v)]) --indeg[static_cast<std::size_t>(w)];
            order.push_back(v);
            self(self);
            order.pop_back();
            for (int w : succ[static_cast<std::size_t>(v)]) ++indeg[static_cast<std::size_t>(w)];
            indeg[static_cast<std::size_t>(v)] = 0;
            if (stopped) return;
        }
    };
    rec(rec);
}

std::vector<std::vector<int>> all_topological_orders(const Dag& dag) {
    std::vector<std::vector<int>> out;
    for_each_topological_order(dag, [&](const std::vector<int>& order) {
        out.push_back(order);
        return true;
    });
    return out;
}

Dag dominance_dag(GridShape shape, bool symmetric) {
    if (shape.r < 1 || shape.s < 1) throw std::invalid_argument("grid shape must be positive");
    Dag dag;
    dag.node_count = shape.cell_count();
    auto id = [&](int i, int j) { return (i - 1) * shape.s + (j - 1); };
    for (int i = 1; i <= shape.r; ++i) {
        for (int j = 1; j <= shape.s; ++j) {
            if (i < shape.r) dag.edges.emplace_back(id(i, j), id(i + 1, j));
            if (j < shape.s) dag.edges.emplace_back(id(i, j), id(i, j + 1));
        }
    }
    if (symmetric && shape.r >= 2 && shape.s >= 2) {
        dag.edges.emplace_back(id(1, 2), id(2, 1));
    }
    return dag;
}

void for_each_bijection(GridShape shape, bool symmetric,
                        const std::function<bool(const GridBijection&)>& visit) {
    Dag dag = dominance_dag(shape, symmetric);
    for_each_topological_order(dag, [&](const std::vector<int>& order) {
        std::vector<GridCell> cells;
        cells.reserve(order.size());
        for (int node : order) {
            cells.push_back(GridCell{node / shape.s + 1, node % shape.s + 1});
        }
        return visit(GridBijection(shape, std::move(cells)));
    });
}

std::vector<GridBijection> enumerate_bijections(GridShape shape, bool symmetric) {
    std::vector<GridBijection> out;
    for_each_bijection(shape, symmetric, [&](const GridBijection& b) {
        out.push_back(b);
        return true;
    });
    return out;
}

long long count_forced_pairs(GridShape shape) {
    long long r = shape.r;
    long long s = shape.s;
    return (r * r * s * s + r * s * s + r * r * s - 3 * r * s) / 4;
}

}  // namespace nfactor
