// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run via ctest or directly.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "nfactor/classifier.hpp"
#include "nfactor/graph.hpp"
#include "nfactor/oracle.hpp"
#include "published_tables.hpp"
#include "test_util.hpp"

using namespace nfactor;
using testutil::Rng;
using testutil::univariate_from;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
    if (!condition) throw Failure(message);
}

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

bool same_factorizations(const std::vector<Factorization>& a,
                         const std::vector<Factorization>& b) {
    if (a.size() != b.size()) return false;
    std::multiset<std::vector<std::string>> ka, kb;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i].content == b[i].content)) return false;
        ka.insert(a[i].factor_keys());
        kb.insert(b[i].factor_keys());
    }
    return ka == kb;
}

// ---- criterion 1: bijection counts and tables --------------------------------

void criterion_bijections() {
    auto t32 = enumerate_bijections(GridShape{3, 2});
    auto t24 = enumerate_bijections(GridShape{2, 4});
    auto t33 = enumerate_bijections(GridShape{3, 3}, true);
    auto t25 = enumerate_bijections(GridShape{2, 5});
    require(t32.size() == 5, "3x2 must have 5 bijections");
    require(t24.size() == 14, "2x4 must have 14 bijections");
    require(t33.size() == 21, "3x3 symmetric must have 21 bijections");
    require(t25.size() == 42, "2x5 must have 42 bijections");
    require(as_set(t32) == testutil::table_3x2(), "3x2 table mismatch");
    require(as_set(t24) == testutil::table_2x4(), "2x4 table mismatch");
    require(as_set(t33) == testutil::table_3x3_symmetric(), "3x3 symmetric table mismatch");
    require(as_set(t25) == testutil::table_2x5(), "2x5 table mismatch");
}

// ---- criterion 2: classification verdicts -------------------------------------

void criterion_classify() {
    for (int t : {1, 2, 3, 4, 5, 7, 8, 9, 11}) {
        require(classify(t).unique, "t=" + std::to_string(t) + " must be unique");
    }
    require(!classify(6).unique, "t=6 must be non-unique");

    ClassificationReport ten = classify(10);
    require(!ten.unique, "t=10 must be non-unique");
    require(ten.pre_inequivalent_count == 102,
            "t=10 must have exactly 102 inequivalent pairs before refinement, got " +
                std::to_string(ten.pre_inequivalent_count));

    std::set<std::vector<long long>> identities;
    std::vector<const FamilyGroup*> two_param;
    for (const auto& family : ten.families) {
        if (family.kind == FamilyGroup::Kind::ScaledIdentity) {
            identities.insert(family.identity);
        } else {
            two_param.push_back(&family);
        }
    }
    require(identities.size() == 3, "t=10 must have exactly 3 sporadic identities");
    require(identities == std::set<std::vector<long long>>{sporadic_identity(1),
                                                           sporadic_identity(2),
                                                           sporadic_identity(3)},
            "sporadic identities must match the published expansions");
    require(two_param.size() == 2, "t=10 must have exactly 2 two-parameter families");
    std::set<std::set<std::vector<long long>>> got{two_param[0]->instances,
                                                   two_param[1]->instances};
    std::set<std::set<std::vector<long long>>> want{reference_instances_f1(24),
                                                    reference_instances_f2(24)};
    require(got == want, "two-parameter families must match the published forms");
}

// ---- criterion 3: witness identities -------------------------------------------

void criterion_witnesses() {
    auto P = [](const char* text) { return parse_poly(text); };

    require(multiply(P("1+X+X^2"), P("1+X^3")) == multiply(P("1+X^2+X^4"), P("1+X")),
            "six-term identity");
    require(multiply(P("1+X+X^2"), P("1+X^3")) == P("1+X+X^2+X^3+X^4+X^5"),
            "six-term expansion");

    // the five ten-term products
    require(multiply(P("1+X"), P("1+X^2+X^4+X^6+X^8")) ==
                multiply(P("1+X^5"), P("1+X+X^2+X^3+X^4")),
            "ten-term expansion 1");
    require(multiply(P("1+X"), P("1+X^2+X^4+X^6+X^8")) == univariate_from(sporadic_identity(1)),
            "ten-term expansion 1 exponents");
    require(multiply(P("1+X"), P("1+X^4+X^6+X^8+X^12")) ==
                multiply(P("1+X^5"), P("1+X+X^4+X^7+X^8")),
            "ten-term expansion 2");
    require(multiply(P("1+X"), P("1+X^4+X^6+X^8+X^12")) == univariate_from(sporadic_identity(2)),
            "ten-term expansion 2 exponents");
    require(multiply(P("1+X^3"), P("1+X^2+X^4+X^6+X^8")) ==
                multiply(P("1+X^5"), P("1+X^2+X^3+X^4+X^6")),
            "ten-term expansion 3");
    require(multiply(P("1+X^3"), P("1+X^2+X^4+X^6+X^8")) == univariate_from(sporadic_identity(3)),
            "ten-term expansion 3 exponents");
    for (long long b = 1; b <= 4; ++b) {
        for (long long a = 0; a <= 6; ++a) {
            auto p1 = family_f1_pairs(a, b);
            require(multiply(univariate_from(p1.left1), univariate_from(p1.right1)) ==
                        multiply(univariate_from(p1.left2), univariate_from(p1.right2)),
                    "family 1 identity");
            require(multiply(univariate_from(p1.left1), univariate_from(p1.right1)) ==
                        univariate_from(family_f1(a, b)),
                    "family 1 expansion");
            auto p2 = family_f2_pairs(a, b);
            require(multiply(univariate_from(p2.left1), univariate_from(p2.right1)) ==
                        multiply(univariate_from(p2.left2), univariate_from(p2.right2)),
                    "family 2 identity");
            require(multiply(univariate_from(p2.left1), univariate_from(p2.right1)) ==
                        univariate_from(family_f2(a, b)),
                    "family 2 expansion");
        }
    }

    require(multiply(P("2+X+X^3"), P("2+X")) == multiply(P("1+X"), P("4+X^2+X^3")),
            "twelve-term identity");
    require(multiply(P("2+X+X^3"), P("2+X")) == P("4+4*X+X^2+2*X^3+X^4"),
            "twelve-term expansion");
    auto twelve = all_factorizations(P("4+4*X+X^2+2*X^3+X^4"));
    require(twelve.size() == 2, "twelve-term witness has exactly two factorizations");

    SparsePoly sixteen = multiply(P("1+X^3+X^5+X^6"), P("1+X+X^2+X^4"));
    require(sixteen == multiply(multiply(P("1+X"), P("1+X^2")), P("1+2*X^4+X^7")),
            "sixteen-term identity");
    auto sixteen_facs = all_factorizations(sixteen);
    require(sixteen_facs.size() == 2, "sixteen-term witness has exactly two factorizations");
    std::set<std::size_t> lengths;
    for (const auto& f : sixteen_facs) lengths.insert(f.factors.size());
    require(lengths == std::set<std::size_t>{2, 3},
            "sixteen-term factorizations have lengths 2 and 3");

    VerifyReport report = verify_known_cases();
    for (const auto& check : report.checks) {
        require(check.pass, "verify_known_cases: " + check.name);
    }
}

// ---- criterion 4: oracle equivalence ---------------------------------------------

void criterion_oracle() {
    // exhaustive over primitive univariate polynomials, t <= 8, exponents <= 10
    for (int t = 2; t <= 8; ++t) {
        std::vector<long long> exps(static_cast<std::size_t>(t), 0);
        auto rec = [&](auto&& self, int pos, long long low) -> void {
            if (pos == t) {
                SparsePoly p = univariate_from(exps);
                if (!same_factorizations(all_factorizations(p), oracle_factorizations(p))) {
                    throw Failure("oracle mismatch on " + format_poly(p));
                }
                return;
            }
            for (long long e = low; e <= 10; ++e) {
                exps[static_cast<std::size_t>(pos)] = e;
                self(self, pos + 1, e);
            }
        };
        rec(rec, 1, 0);
    }

    // 1000 random instances with t = 10, exponents <= 12
    Rng rng(9004);
    for (int iter = 0; iter < 1000; ++iter) {
        std::vector<long long> exps{0};
        for (int i = 1; i < 10; ++i) exps.push_back(rng.range(0, 12));
        SparsePoly p = univariate_from(exps);
        if (!same_factorizations(all_factorizations(p), oracle_factorizations(p))) {
            throw Failure("oracle mismatch on " + format_poly(p));
        }
    }
}

// ---- criterion 5: scan consistency --------------------------------------------------

void criterion_scan() {
    auto hits6 = exhaustive_scan(6, 15);
    std::set<std::vector<long long>> got6;
    for (const auto& hit : hits6) got6.insert(hit.exponents);
    require(got6 == std::set<std::vector<long long>>{
                        {0, 1, 2, 3, 4, 5}, {0, 2, 4, 6, 8, 10}, {0, 3, 6, 9, 12, 15}},
            "t=6 scan hits must be the progression family up to b=3");

    for (int t : {4, 8, 9}) {
        require(exhaustive_scan(t, 10).empty(),
                "t=" + std::to_string(t) + " scan must find no hits");
    }

    auto hits10 = exhaustive_scan(10, 9);
    require(!hits10.empty(), "t=10 scan must find hits");
    auto known = known_nonunique_instances(10, 9);
    for (const auto& hit : hits10) {
        require(known.count(hit.exponents) == 1,
                "t=10 scan hit outside the published families");
    }
}

// ---- criterion 6: randomized property suites ------------------------------------------

void criterion_properties() {
    // prime term counts factor uniquely
    Rng rng(9006);
    for (int t : {2, 3, 5, 7, 11}) {
        for (int iter = 0; iter < 40; ++iter) {
            std::vector<long long> exps{0};
            for (int i = 1; i < t; ++i) exps.push_back(rng.range(0, 10));
            require(all_factorizations(univariate_from(exps)).size() == 1,
                    "prime term count with several factorizations");
        }
    }

    // term counts multiply
    for (int iter = 0; iter < 300; ++iter) {
        int m = static_cast<int>(rng.range(1, 3));
        SparsePoly s = testutil::random_poly(rng, m, static_cast<int>(rng.range(1, 6)), 8);
        SparsePoly t = testutil::random_poly(rng, m, static_cast<int>(rng.range(1, 6)), 8);
        require(multiply(s, t).term_count() == s.term_count() * t.term_count(),
                "term count must be multiplicative");
    }

    // projection equivalence for m <= 3
    for (int iter = 0; iter < 400; ++iter) {
        int m = static_cast<int>(rng.range(1, 3));
        int r = 2;
        int s = static_cast<int>(rng.range(2, 3));
        std::vector<ExponentVector> c;
        for (int i = 0; i < r * s; ++i) c.push_back(testutil::random_vector(rng, m, 4));
        std::sort(c.begin(), c.end(), grlex_less);
        if (rng.range(0, 1) == 0) c[0] = ExponentVector::zeros(m);
        for (const auto& rho : enumerate_bijections(GridShape{r, s}, false)) {
            bool full = reconstruct_factors(c, rho).has_value();
            bool split = true;
            for (int j = 0; j < m; ++j) {
                std::vector<ExponentVector> column;
                for (const auto& v : c) column.push_back(ExponentVector({v[j]}));
                split = split && reconstruct_factors(column, rho).has_value();
            }
            require(full == split, "projection equivalence violated");
        }
    }

    // generic-base stability of the pair verdicts
    auto bijections = enumerate_bijections(GridShape{2, 5}, false);
    for (int iter = 0; iter < 120; ++iter) {
        std::size_t i = static_cast<std::size_t>(rng.range(0, 41));
        std::size_t j = static_cast<std::size_t>(rng.range(0, 41));
        if (i == j) continue;
        ResolvedSolution resolved = resolve_nonnegative(pair_system(bijections[i], bijections[j]));
        long long base = recommended_base(resolved.solution);
        auto v1 = generic_instance(resolved.solution, base);
        auto v2 = generic_instance(resolved.solution, base + 1);
        bool eq1 = equivalent_under(to_exponent_vectors(v1), bijections[i], bijections[j]);
        bool eq2 = equivalent_under(to_exponent_vectors(v2), bijections[i], bijections[j]);
        require(eq1 == eq2, "verdict must not depend on the generic base");
    }
}

// ---- criterion 7: graph suite --------------------------------------------------------

void criterion_graphs() {
    Rng rng(9007);
    auto k2_star = [] {
        Graph g(2);
        g.add_edge(0, 1);
        g.add_edge(0, 0);
        g.add_edge(1, 1);
        return g;
    }();

    auto random_simple_connected = [&rng](int n) {
        while (true) {
            Graph g(n);
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (rng.range(0, 1)) g.add_edge(u, v);
                }
            }
            if (g.is_connected()) return g;
        }
    };

    // neutral elements
    for (int iter = 0; iter < 15; ++iter) {
        Graph g = random_simple_connected(static_cast<int>(rng.range(1, 5)));
        require(is_isomorphic(product(g, Graph::single(false), GraphProduct::Cartesian), g),
                "K1 must be neutral for the cartesian product");
        require(is_isomorphic(product(g, Graph::single(false), GraphProduct::Strong), g),
                "K1 must be neutral for the strong product");
        require(is_isomorphic(product(g, Graph::single(true), GraphProduct::Direct), g),
                "K1* must be neutral for the direct product");
    }

    // loop lemma and simplicity
    for (int iter = 0; iter < 15; ++iter) {
        Graph g = random_simple_connected(static_cast<int>(rng.range(1, 4)));
        Graph h = random_simple_connected(static_cast<int>(rng.range(1, 4)));
        require(product(g, h, GraphProduct::Cartesian).is_simple(),
                "cartesian product of simple graphs must be simple");
        require(product(g, h, GraphProduct::Strong).is_simple(),
                "strong product of simple graphs must be simple");
        Graph looped = g;
        for (int v = 0; v < looped.vertex_count(); ++v) looped.add_edge(v, v);
        require(product(looped, h, GraphProduct::Cartesian).all_loops(), "loop lemma (cartesian)");
        require(product(looped, h, GraphProduct::Strong).all_loops(), "loop lemma (strong)");
    }

    // direct-product bipartiteness, exhaustive to 4 vertices
    for (int n1 = 1; n1 <= 4; ++n1) {
        for (int n2 = 1; n1 * n2 <= 16 && n2 <= 4; ++n2) {
            for (const Graph& g : connected_graph_catalog(n1, true)) {
                for (const Graph& h : connected_graph_catalog(n2, true)) {
                    bool factor_bipartite = is_bipartite(g) || is_bipartite(h);
                    GraphSum comps = connected_components(product(g, h, GraphProduct::Direct));
                    for (const auto& [comp, count] : comps.components()) {
                        require(is_bipartite(comp) == factor_bipartite,
                                "direct-product bipartiteness law");
                    }
                }
            }
        }
    }

    // cancellation on sampled triples
    for (int iter = 0; iter < 60; ++iter) {
        Graph g = random_simple_connected(static_cast<int>(rng.range(2, 4)));
        Graph h = random_simple_connected(static_cast<int>(rng.range(2, 4)));
        Graph l = random_simple_connected(static_cast<int>(rng.range(2, 4)));
        for (GraphProduct kind : {GraphProduct::Cartesian, GraphProduct::Strong}) {
            if (product(g, h, kind).vertex_count() != product(g, l, kind).vertex_count()) continue;
            if (is_isomorphic(product(g, h, kind), product(g, l, kind))) {
                require(is_isomorphic(h, l), "cancellation violated");
            }
        }
    }

    // the non-unique factorization identities, all three products
    for (GraphProduct kind :
         {GraphProduct::Cartesian, GraphProduct::Strong, GraphProduct::Direct}) {
        Graph x = kind == GraphProduct::Direct ? k2_star : Graph::complete(2);
        auto pow = [&](int k) {
            Graph out = neutral_graph(kind);
            for (int i = 0; i < k; ++i) out = product(out, x, kind);
            return out;
        };
        GraphSum a, b;
        a.add(neutral_graph(kind));
        a.add(x);
        a.add(pow(2));
        b.add(neutral_graph(kind));
        b.add(pow(3));
        GraphSum total = sum_product(a, b, kind);
        auto facs = graph_factorizations(total, kind);
        require(facs.size() == 2, std::string("expected 2 graph factorizations under the ") +
                                      product_name(kind) + " product");
    }
}

// ---- criterion 8: round trip ------------------------------------------------------------

void criterion_round_trip() {
    Rng rng(9008);
    Graph k2_star(2);
    k2_star.add_edge(0, 1);
    k2_star.add_edge(0, 0);
    k2_star.add_edge(1, 1);
    Graph k3_star = Graph::complete(3);
    for (int v = 0; v < 3; ++v) k3_star.add_edge(v, v);

    std::vector<Graph> simple_pool{Graph::complete(2), Graph::path(3), Graph::complete(3),
                                   Graph::cycle(5)};
    std::vector<Graph> looped_pool{k2_star, k3_star, Graph::complete(3), Graph::cycle(5)};

    for (int iter = 0; iter < 200; ++iter) {
        GraphProduct kind = static_cast<GraphProduct>(rng.range(0, 2));
        const auto& pool = kind == GraphProduct::Direct ? looped_pool : simple_pool;
        GraphSum sum;
        int components = static_cast<int>(rng.range(1, 3));
        for (int c = 0; c < components; ++c) {
            int factors = static_cast<int>(rng.range(0, 2));
            Graph g = neutral_graph(kind);
            for (int f = 0; f < factors; ++f) {
                const Graph& pick =
                    pool[static_cast<std::size_t>(rng.range(0, static_cast<long long>(pool.size()) - 1))];
                if (g.vertex_count() * pick.vertex_count() > 25) break;
                g = product(g, pick, kind);
            }
            sum.add(g, static_cast<int>(rng.range(1, 3)));
        }
        VariableDictionary dict;
        SparsePoly p = graph_to_poly(sum, kind, dict);
        GraphSum back = poly_to_graph(p, kind, dict);
        require(back == sum, "round trip must reproduce the graph sum");
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria{
        {"1 bijection counts and tables", criterion_bijections},
        {"2 classification verdicts", criterion_classify},
        {"3 witness identities", criterion_witnesses},
        {"4 oracle equivalence", criterion_oracle},
        {"5 exhaustive scan consistency", criterion_scan},
        {"6 property suites", criterion_properties},
        {"7 graph suite", criterion_graphs},
        {"8 graph round trip", criterion_round_trip},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string message;
        bool pass = true;
        try {
            criterion.run();
        } catch (const std::exception& e) {
            pass = false;
            message = e.what();
        }
        auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        std::printf("criterion %s: %s (%.1fs)%s%s\n", criterion.name, pass ? "PASS" : "FAIL",
                    seconds.count(), message.empty() ? "" : " - ", message.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    return failures;
}
