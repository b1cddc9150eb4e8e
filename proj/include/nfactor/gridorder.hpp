#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "nfactor/errors.hpp"

namespace nfactor {

struct GridShape {
    int r = 1;
    int s = 1;
    int cell_count() const { return r * s; }
};

// Grid cell, 1-based in both coordinates.
struct GridCell {
    int i = 1;
    int j = 1;
    friend bool operator==(const GridCell&, const GridCell&) = default;
    friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

// The bijection rho as the sequence of grid cells in c-order: cells[k] is
// the cell mapped to term k+1, i.e. c_{k+1} = a_i + b_j for cells[k]=(i,j).
class GridBijection {
public:
    GridBijection(GridShape shape, std::vector<GridCell> cells);

    const GridShape& shape() const { return shape_; }
    const std::vector<GridCell>& cells() const { return cells_; }
    int term_count() const { return shape_.cell_count(); }

    // Position (1-based term index) of cell (i,j) under rho.
    int position(int i, int j) const {
        return positions_[static_cast<std::size_t>((i - 1) * shape_.s + (j - 1))];
    }

    friend bool operator==(const GridBijection&, const GridBijection&) = default;

private:
    GridShape shape_;
    std::vector<GridCell> cells_;
    std::vector<int> positions_;
};

// Minimal directed acyclic graph on 0..n-1 used for order enumeration.
struct Dag {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;  // (before, after)
};

// All topological orderings of the dag, by Kahn's algorithm with
// backtracking over every zero-in-degree choice. Candidates are taken in
// ascending node id, so the output is lexicographic and deterministic.
// Returns false from the visitor to stop early.
void for_each_topological_order(const Dag& dag,
                                const std::function<bool(const std::vector<int>&)>& visit);
std::vector<std::vector<int>> all_topological_orders(const Dag& dag);

// Covering relations of the componentwise order on grid cells; with
// `symmetric` set (meaningful for r == s), the extra edge (1,2) -> (2,1)
// fixes the factor order.
Dag dominance_dag(GridShape shape, bool symmetric = false);

void for_each_bijection(GridShape shape, bool symmetric,
                        const std::function<bool(const GridBijection&)>& visit);
std::vector<GridBijection> enumerate_bijections(GridShape shape, bool symmetric = false);

// Closed form (r^2 s^2 + r s^2 + r^2 s - 3 r s) / 4 for the number of cell
// pairs whose relative order the dominance relation already fixes.
long long count_forced_pairs(GridShape shape);

}  // namespace nfactor
