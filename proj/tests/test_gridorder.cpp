#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "nfactor/gridorder.hpp"
#include "published_tables.hpp"

using namespace nfactor;

namespace {

std::string row_text(const GridBijection& b) {
    std::ostringstream out;
    for (const GridCell& cell : b.cells()) out << cell.i << cell.j << " ";
    std::string s = out.str();
    s.pop_back();
    return s;
}

std::set<std::string> as_set(const std::vector<GridBijection>& bijections) {
    std::set<std::string> out;
    for (const auto& b : bijections) out.insert(row_text(b));
    return out;
}

// Independent oracle: filter all permutations of the grid cells by the
// dominance relation (plus the symmetry tie-break).
std::set<std::string> brute_force(GridShape shape, bool symmetric) {
    std::vector<GridCell> cells;
    for (int i = 1; i <= shape.r; ++i) {
        for (int j = 1; j <= shape.s; ++j) cells.push_back(GridCell{i, j});
    }
    std::sort(cells.begin(), cells.end());
    std::set<std::string> out;
    do {
        bool ok = true;
        for (std::size_t a = 0; a < cells.size() && ok; ++a) {
            for (std::size_t b = a + 1; b < cells.size() && ok; ++b) {
                // a later cell must never be dominated by an earlier one
                if (cells[b].i <= cells[a].i && cells[b].j <= cells[a].j) ok = false;
                if (symmetric && cells[b] == GridCell{1, 2} && cells[a] == GridCell{2, 1}) ok = false;
            }
        }
        if (ok) out.insert(row_text(GridBijection(shape, cells)));
    } while (std::next_permutation(cells.begin(), cells.end()));
    return out;
}

}  // namespace

TEST_CASE("dominance dag lists covering relations") {
    Dag d22 = dominance_dag(GridShape{2, 2});
    std::set<std::pair<int, int>> edges(d22.edges.begin(), d22.edges.end());
    // cells row-major: (1,1)=0 (1,2)=1 (2,1)=2 (2,2)=3
    CHECK(edges == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});

    Dag d33 = dominance_dag(GridShape{3, 3}, true);
    std::set<std::pair<int, int>> sym_edges(d33.edges.begin(), d33.edges.end());
    CHECK(sym_edges.count({1, 3}) == 1);  // (1,2) before (2,1)

    Dag d11 = dominance_dag(GridShape{1, 1});
    CHECK(d11.node_count == 1);
    CHECK(d11.edges.empty());
}

TEST_CASE("every topological order of the fork is produced") {
    // dag with edges (1,3) and (2,3): depth-first search from a single root
    // cannot output 1,2,3, the enumeration must
    Dag dag;
    dag.node_count = 3;
    dag.edges = {{0, 2}, {1, 2}};
    auto orders = all_topological_orders(dag);
    REQUIRE(orders.size() == 2);
    CHECK(orders[0] == std::vector<int>{0, 1, 2});
    CHECK(orders[1] == std::vector<int>{1, 0, 2});
}

TEST_CASE("bijection counts match the case tables") {
    CHECK(enumerate_bijections(GridShape{3, 2}).size() == 5);
    CHECK(enumerate_bijections(GridShape{2, 4}).size() == 14);
    CHECK(enumerate_bijections(GridShape{3, 3}, true).size() == 21);
    CHECK(enumerate_bijections(GridShape{2, 5}).size() == 42);
    CHECK(enumerate_bijections(GridShape{2, 2}).size() == 2);
    CHECK(enumerate_bijections(GridShape{2, 2}, true).size() == 1);
    CHECK(enumerate_bijections(GridShape{1, 1}).size() == 1);
}

TEST_CASE("published case tables are reproduced as sets") {
    CHECK(as_set(enumerate_bijections(GridShape{3, 2})) == testutil::table_3x2());
    CHECK(as_set(enumerate_bijections(GridShape{2, 4})) == testutil::table_2x4());
    CHECK(as_set(enumerate_bijections(GridShape{3, 3}, true)) == testutil::table_3x3_symmetric());
    CHECK(as_set(enumerate_bijections(GridShape{2, 5})) == testutil::table_2x5());
}

TEST_CASE("enumeration agrees with permutation filtering") {
    for (int r = 1; r <= 3; ++r) {
        for (int s = r; r * s <= 9 && s <= 4; ++s) {
            GridShape shape{r, s};
            CHECK(as_set(enumerate_bijections(shape, false)) == brute_force(shape, false));
            if (r == s) {
                CHECK(as_set(enumerate_bijections(shape, true)) == brute_force(shape, true));
            }
        }
    }
}

TEST_CASE("first cell is always the source and output is lexicographic") {
    auto bijections = enumerate_bijections(GridShape{2, 4});
    for (const auto& b : bijections) {
        CHECK(b.cells()[0] == GridCell{1, 1});
    }
    for (std::size_t i = 1; i < bijections.size(); ++i) {
        CHECK(bijections[i - 1].cells() < bijections[i].cells());
    }
}

TEST_CASE("transposed shapes have equal counts") {
    for (int r = 1; r <= 3; ++r) {
        for (int s = r; r * s <= 10; ++s) {
            CHECK(enumerate_bijections(GridShape{r, s}).size() ==
                  enumerate_bijections(GridShape{s, r}).size());
        }
    }
}

TEST_CASE("count_forced_pairs closed form") {
    CHECK(count_forced_pairs(GridShape{2, 2}) == 5);
    CHECK(count_forced_pairs(GridShape{2, 5}) == 35);
    CHECK(count_forced_pairs(GridShape{1, 1}) == 0);

    // cross-check: count comparable pairs directly
    for (int r = 1; r <= 3; ++r) {
        for (int s = 1; r * s <= 10 && s <= 5; ++s) {
            long long comparable = 0;
            for (int i1 = 1; i1 <= r; ++i1) {
                for (int j1 = 1; j1 <= s; ++j1) {
                    for (int i2 = 1; i2 <= r; ++i2) {
                        for (int j2 = 1; j2 <= s; ++j2) {
                            if (i1 == i2 && j1 == j2) continue;
                            if (i1 <= i2 && j1 <= j2) ++comparable;
                        }
                    }
                }
            }
            CHECK(count_forced_pairs(GridShape{r, s}) == comparable);
        }
    }
}

TEST_CASE("streaming enumeration can stop early") {
    int visited = 0;
    for_each_bijection(GridShape{2, 5}, false, [&](const GridBijection&) {
        ++visited;
        return visited < 7;
    });
    CHECK(visited == 7);
}
