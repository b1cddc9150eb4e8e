#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nfactor/factorizer.hpp"
#include "nfactor/poly.hpp"

namespace nfactor {

enum class GraphProduct { Cartesian, Strong, Direct };

const char* product_name(GraphProduct p);
std::optional<GraphProduct> product_from_name(const std::string& name);

// Finite undirected graph, loops allowed, at most 64 vertices. Adjacency is
// a bitmask row per vertex; the diagonal bit marks a loop.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    int vertex_count() const { return n_; }
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    bool has_loop(int v) const { return has_edge(v, v); }

    int degree(int v) const;
    int edge_count() const;  // loops count once
    bool is_simple() const;
    bool all_loops() const;
    bool is_connected() const;

    std::vector<std::pair<int, int>> edges() const;  // u <= v

    static Graph single(bool loop);
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

struct GraphCaps {
    int product_vertex_cap = 64;
    int factor_enum_cap = 6;
    int canonical_cap = 32;
};

Graph product(const Graph& g, const Graph& h, GraphProduct kind, int vertex_cap = 64);
Graph neutral_graph(GraphProduct kind);
bool is_neutral(const Graph& g, GraphProduct kind);

// Canonical labeling via colour refinement with individualisation; equal
// certificates characterise isomorphism. Results are memoized.
std::string canonical_certificate(const Graph& g, int cap = 32);
Graph canonical_copy(const Graph& g, int cap = 32);
bool is_isomorphic(const Graph& g, const Graph& h, int cap = 32);

// g must be connected; any loop makes the graph nonbipartite.
bool is_bipartite(const Graph& g);

// A disconnected graph as a multiset of canonical connected components.
class GraphSum {
public:
    GraphSum() = default;

    void add(const Graph& connected_graph, int multiplicity = 1);
    const std::vector<std::pair<Graph, int>>& components() const { return components_; }
    int total_vertices() const;
    int component_count() const;  // with multiplicity
    bool empty() const { return components_.empty(); }

    friend bool operator==(const GraphSum&, const GraphSum&);

private:
    std::vector<std::pair<Graph, int>> components_;  // canonical, sorted, multiplicity >= 1
};

GraphSum connected_components(const Graph& g);
GraphSum disjoint_union(const GraphSum& a, const GraphSum& b);
GraphSum sum_product(const GraphSum& a, const GraphSum& b, GraphProduct kind,
                     const GraphCaps& caps = {});

// Connected graphs on n vertices up to isomorphism, optionally with loops.
const std::vector<Graph>& connected_graph_catalog(int n, bool allow_loops);

// All unordered pairs of non-neutral connected graphs whose product is
// isomorphic to g, searched by candidate enumeration on the divisor vertex
// counts. Divisor pairs whose larger side exceeds the enumeration cap are
// skipped.
std::vector<std::pair<Graph, Graph>> connected_factor_pairs(const Graph& g, GraphProduct kind,
                                                            const GraphCaps& caps = {});

// Complete factorizations of a connected graph into irreducibles. Exactly
// one result for the graphs this library supports; loop-bearing graphs
// whose factorization is ambiguous raise AmbiguousGraphFactorization.
std::vector<std::vector<Graph>> component_factorizations(const Graph& g, GraphProduct kind,
                                                         const GraphCaps& caps = {},
                                                         const std::vector<Graph>& known_irreducibles = {});

class VariableDictionary {
public:
    int size() const { return static_cast<int>(entries_.size()); }
    const Graph& graph(int index) const { return entries_[static_cast<std::size_t>(index)]; }
    const std::vector<Graph>& entries() const { return entries_; }
    int index_of(const Graph& g) const;  // -1 when absent
    int add(const Graph& g);             // canonicalises, returns index

private:
    std::vector<Graph> entries_;
    std::vector<std::string> certificates_;
};

SparsePoly graph_to_poly(const GraphSum& gs, GraphProduct kind, VariableDictionary& dict,
                         const GraphCaps& caps = {});
GraphSum poly_to_graph(const SparsePoly& p, GraphProduct kind, const VariableDictionary& dict,
                       const GraphCaps& caps = {});

struct GraphFactorization {
    std::optional<Graph> content;  // product of the common monomial part, if nontrivial
    std::vector<GraphSum> factors;
};

std::vector<GraphFactorization> graph_factorizations(const GraphSum& gs, GraphProduct kind,
                                                     const GraphCaps& caps = {},
                                                     VariableDictionary* dict_out = nullptr);

// Text format: sections separated by blank lines; each section starts with
// "n=<count>" (an optional "loops" token is accepted) followed by "u v"
// edge lines, u = v marking a loop. Components are computed from the union
// of all sections.
GraphSum parse_graph_sum(const std::string& text);
std::string format_graph(const Graph& g);

}  // namespace nfactor
