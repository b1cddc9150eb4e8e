#include "nfactor/graph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace nfactor {

const char* product_name(GraphProduct p) {
    switch (p) {
        case GraphProduct::Cartesian: return "cartesian";
        case GraphProduct::Strong: return "strong";
        case GraphProduct::Direct: return "direct";
    }
    return "?";
}

std::optional<GraphProduct> product_from_name(const std::string& name) {
    if (name == "cartesian") return GraphProduct::Cartesian;
    if (name == "strong") return GraphProduct::Strong;
    if (name == "direct") return GraphProduct::Direct;
    return std::nullopt;
}

Graph::Graph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0 || vertex_count > 64) {
        throw std::invalid_argument("vertex count must be between 0 and 64");
    }
    adj_.assign(static_cast<std::size_t>(n_), 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    adj_[static_cast<std::size_t>(u)] |= (1ULL << v);
    adj_[static_cast<std::size_t>(v)] |= (1ULL << u);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1ULL;
}

int Graph::degree(int v) const {
    return __builtin_popcountll(adj_[static_cast<std::size_t>(v)]);
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    int loops = 0;
    for (int v = 0; v < n_; ++v) loops += has_loop(v) ? 1 : 0;
    return (total - loops) / 2 + loops;
}

bool Graph::is_simple() const {
    for (int v = 0; v < n_; ++v) {
        if (has_loop(v)) return false;
    }
    return true;
}

bool Graph::all_loops() const {
    for (int v = 0; v < n_; ++v) {
        if (!has_loop(v)) return false;
    }
    return n_ > 0;
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    std::uint64_t seen = 1ULL;
    std::uint64_t frontier = 1ULL;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v = 0; v < n_; ++v) {
            if ((frontier >> v) & 1ULL) next |= adj_[static_cast<std::size_t>(v)];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return __builtin_popcountll(seen) == n_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        for (int v = u; v < n_; ++v) {
            if (has_edge(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::single(bool loop) {
    Graph g(1);
    if (loop) g.add_edge(0, 0);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph product(const Graph& g, const Graph& h, GraphProduct kind, int vertex_cap) {
    long long size = static_cast<long long>(g.vertex_count()) * h.vertex_count();
    if (size > vertex_cap || size > 64) throw CapExceeded("product vertex cap exceeded");
    int hn = h.vertex_count();
    Graph out(static_cast<int>(size));
    auto id = [hn](int u, int v) { return u * hn + v; };
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = 0; v < hn; ++v) {
            for (int u2 = 0; u2 < g.vertex_count(); ++u2) {
                for (int v2 = 0; v2 < hn; ++v2) {
                    bool adjacent = false;
                    switch (kind) {
                        case GraphProduct::Cartesian:
                            adjacent = (u == u2 && h.has_edge(v, v2)) ||
                                       (g.has_edge(u, u2) && v == v2);
                            break;
                        case GraphProduct::Strong:
                            if (u == u2 && v == v2) {
                                adjacent = g.has_loop(u) || h.has_loop(v);
                            } else {
                                adjacent = (u == u2 || g.has_edge(u, u2)) &&
                                           (v == v2 || h.has_edge(v, v2));
                            }
                            break;
                        case GraphProduct::Direct:
                            adjacent = g.has_edge(u, u2) && h.has_edge(v, v2);
                            break;
                    }
                    if (adjacent) out.add_edge(id(u, v), id(u2, v2));
                }
            }
        }
    }
    return out;
}

Graph neutral_graph(GraphProduct kind) {
    return kind == GraphProduct::Direct ? Graph::single(true) : Graph::single(false);
}

bool is_neutral(const Graph& g, GraphProduct kind) {
    if (g.vertex_count() != 1) return false;
    return g.has_loop(0) == (kind == GraphProduct::Direct);
}

// ---- canonical labeling -----------------------------------------------------

namespace {

std::string raw_encoding(const Graph& g) {
    std::string out;
    out.push_back(static_cast<char>(g.vertex_count()));
    int bit = 0;
    char acc = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u; v < g.vertex_count(); ++v) {
            acc = static_cast<char>(acc << 1 | (g.has_edge(u, v) ? 1 : 0));
            if (++bit == 8) {
                out.push_back(acc);
                bit = 0;
                acc = 0;
            }
        }
    }
    if (bit) out.push_back(static_cast<char>(acc << (8 - bit)));
    return out;
}

std::string encode_with_labeling(const Graph& g, const std::vector<int>& label_of) {
    int n = g.vertex_count();
    std::vector<int> vertex_at(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) vertex_at[static_cast<std::size_t>(label_of[static_cast<std::size_t>(v)])] = v;
    std::string out;
    out.push_back(static_cast<char>(n));
    int bit = 0;
    char acc = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            bool e = g.has_edge(vertex_at[static_cast<std::size_t>(i)],
                                vertex_at[static_cast<std::size_t>(j)]);
            acc = static_cast<char>(acc << 1 | (e ? 1 : 0));
            if (++bit == 8) {
                out.push_back(acc);
                bit = 0;
                acc = 0;
            }
        }
    }
    if (bit) out.push_back(static_cast<char>(acc << (8 - bit)));
    return out;
}

// Colour refinement: iterate (colour, sorted neighbour colours) signatures
// to a stable partition.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
    int n = g.vertex_count();
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> signatures(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig;
            sig.push_back(colors[static_cast<std::size_t>(v)]);
            std::vector<int> nb;
            for (int u = 0; u < n; ++u) {
                if (g.has_edge(v, u)) nb.push_back(colors[static_cast<std::size_t>(u)]);
            }
            std::sort(nb.begin(), nb.end());
            sig.insert(sig.end(), nb.begin(), nb.end());
            signatures[static_cast<std::size_t>(v)] = {std::move(sig), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = signatures;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(static_cast<std::size_t>(n), 0);
        int rank = 0;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++rank;
            next[static_cast<std::size_t>(sorted[i].second)] = rank;
        }
        if (next == colors) return colors;
        colors = std::move(next);
    }
}

struct CanonicalSearch {
    const Graph& g;
    // twins[u*n+v]: swapping u and v is an automorphism; branches on twin
    // vertices in the same cell produce identical subtrees, which keeps
    // complete-like graphs from exploding factorially.
    std::vector<bool> twins;
    std::string best;
    bool have_best = false;

    void visit(const std::vector<int>& colors) {
        int n = g.vertex_count();
        // discrete?
        std::vector<int> count(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) ++count[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
        int target_color = -1;
        for (int c = 0; c < n; ++c) {
            if (count[static_cast<std::size_t>(c)] >= 2) {
                target_color = c;
                break;
            }
        }
        if (target_color < 0) {
            std::string enc = encode_with_labeling(g, colors);
            if (!have_best || enc < best) {
                best = std::move(enc);
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (colors[static_cast<std::size_t>(v)] != target_color) continue;
            bool shadowed = false;
            for (int u = 0; u < v && !shadowed; ++u) {
                if (colors[static_cast<std::size_t>(u)] == target_color &&
                    twins[static_cast<std::size_t>(u * n + v)]) {
                    shadowed = true;
                }
            }
            if (shadowed) continue;
            std::vector<int> individualized(static_cast<std::size_t>(n));
            for (int u = 0; u < n; ++u) {
                int c = colors[static_cast<std::size_t>(u)];
                individualized[static_cast<std::size_t>(u)] = 2 * c + ((u == v && c == target_color) ? 0 : 1);
            }
            visit(refine_colors(g, normalize_ranks(individualized)));
        }
    }

    static std::vector<int> normalize_ranks(const std::vector<int>& colors) {
        std::vector<int> sorted = colors;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> out(colors.size());
        for (std::size_t v = 0; v < colors.size(); ++v) {
            out[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), colors[v]) - sorted.begin());
        }
        return out;
    }
};

std::map<std::string, std::string>& certificate_cache() {
    static std::map<std::string, std::string> cache;
    return cache;
}

std::mutex& certificate_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

std::string canonical_certificate(const Graph& g, int cap) {
    if (g.vertex_count() > cap) throw CapExceeded("canonical labeling cap exceeded");
    if (g.vertex_count() == 0) return std::string(1, '\0');
    std::string raw = raw_encoding(g);
    {
        std::lock_guard<std::mutex> lock(certificate_mutex());
        auto it = certificate_cache().find(raw);
        if (it != certificate_cache().end()) return it->second;
    }

    int n = g.vertex_count();
    std::vector<std::pair<std::pair<bool, int>, int>> initial(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        initial[static_cast<std::size_t>(v)] = {{g.has_loop(v), g.degree(v)}, v};
    }
    auto sorted = initial;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    int rank = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && sorted[i].first != sorted[i - 1].first) ++rank;
        colors[static_cast<std::size_t>(sorted[i].second)] = rank;
    }

    std::vector<bool> twins(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_loop(u) != g.has_loop(v)) continue;
            bool same_outside = true;
            for (int w = 0; w < n && same_outside; ++w) {
                if (w == u || w == v) continue;
                if (g.has_edge(u, w) != g.has_edge(v, w)) same_outside = false;
            }
            if (same_outside) {
                twins[static_cast<std::size_t>(u * n + v)] = true;
                twins[static_cast<std::size_t>(v * n + u)] = true;
            }
        }
    }

    CanonicalSearch search{g, std::move(twins), {}, false};
    search.visit(refine_colors(g, colors));

    std::lock_guard<std::mutex> lock(certificate_mutex());
    certificate_cache().emplace(std::move(raw), search.best);
    return search.best;
}

Graph canonical_copy(const Graph& g, int cap) {
    std::string cert = canonical_certificate(g, cap);
    // decode the certificate back into a graph
    int n = static_cast<int>(static_cast<unsigned char>(cert[0]));
    Graph out(n);
    std::size_t byte = 1;
    int bit = 7;
    for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) {
            bool e = (static_cast<unsigned char>(cert[byte]) >> bit) & 1;
            if (e) out.add_edge(u, v);
            if (--bit < 0) {
                bit = 7;
                ++byte;
            }
        }
    }
    return out;
}

bool is_isomorphic(const Graph& g, const Graph& h, int cap) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    return canonical_certificate(g, cap) == canonical_certificate(h, cap);
}

bool is_bipartite(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("bipartiteness is defined per connected graph");
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (g.has_loop(v)) return false;  // a loop is an odd closed walk
    }
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::queue<int> queue;
    color[0] = 0;
    queue.push(0);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int u = 0; u < n; ++u) {
            if (!g.has_edge(v, u)) continue;
            if (color[static_cast<std::size_t>(u)] < 0) {
                color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
                queue.push(u);
            } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
                return false;
            }
        }
    }
    return true;
}

// ---- graph sums -------------------------------------------------------------

namespace {

bool component_less(const std::pair<Graph, int>& a, const std::pair<Graph, int>& b) {
    if (a.first.vertex_count() != b.first.vertex_count()) {
        return a.first.vertex_count() < b.first.vertex_count();
    }
    return canonical_certificate(a.first) < canonical_certificate(b.first);
}

}  // namespace

void GraphSum::add(const Graph& connected_graph, int multiplicity) {
    if (multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
    if (!connected_graph.is_connected()) {
        throw std::invalid_argument("graph sum components must be connected");
    }
    Graph canon = canonical_copy(connected_graph);
    for (auto& [graph, count] : components_) {
        if (graph == canon) {
            count += multiplicity;
            return;
        }
    }
    components_.emplace_back(std::move(canon), multiplicity);
    std::sort(components_.begin(), components_.end(), component_less);
}

int GraphSum::total_vertices() const {
    int total = 0;
    for (const auto& [graph, count] : components_) total += graph.vertex_count() * count;
    return total;
}

int GraphSum::component_count() const {
    int total = 0;
    for (const auto& [graph, count] : components_) total += count;
    return total;
}

bool operator==(const GraphSum& a, const GraphSum& b) {
    return a.components_ == b.components_;
}

GraphSum connected_components(const Graph& g) {
    GraphSum sum;
    int n = g.vertex_count();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> members;
        std::queue<int> queue;
        queue.push(start);
        seen[static_cast<std::size_t>(start)] = true;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            members.push_back(v);
            for (int u = 0; u < n; ++u) {
                if (g.has_edge(v, u) && !seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    queue.push(u);
                }
            }
        }
        std::sort(members.begin(), members.end());
        Graph comp(static_cast<int>(members.size()));
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i; j < members.size(); ++j) {
                if (g.has_edge(members[i], members[j])) {
                    comp.add_edge(static_cast<int>(i), static_cast<int>(j));
                }
            }
        }
        sum.add(comp);
    }
    return sum;
}

GraphSum disjoint_union(const GraphSum& a, const GraphSum& b) {
    GraphSum out = a;
    for (const auto& [graph, count] : b.components()) out.add(graph, count);
    return out;
}

GraphSum sum_product(const GraphSum& a, const GraphSum& b, GraphProduct kind,
                     const GraphCaps& caps) {
    GraphSum out;
    for (const auto& [ga, ca] : a.components()) {
        for (const auto& [gb, cb] : b.components()) {
            Graph prod = product(ga, gb, kind, caps.product_vertex_cap);
            GraphSum comps = connected_components(prod);
            for (const auto& [graph, count] : comps.components()) {
                out.add(graph, count * ca * cb);
            }
        }
    }
    return out;
}

// ---- catalogs and factor search ----------------------------------------------

const std::vector<Graph>& connected_graph_catalog(int n, bool allow_loops) {
    static std::map<std::pair<int, bool>, std::vector<Graph>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(n, allow_loops);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (n < 1 || n > 6) throw CapExceeded("graph catalog supports 1..6 vertices");

    std::vector<std::pair<int, int>> slots;  // candidate edges
    for (int u = 0; u < n; ++u) {
        for (int v = u + (allow_loops ? 0 : 1); v < n; ++v) slots.emplace_back(u, v);
    }
    std::vector<Graph> catalog;
    std::set<std::string> seen;
    std::uint64_t limit = 1ULL << slots.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if ((mask >> i) & 1ULL) g.add_edge(slots[i].first, slots[i].second);
        }
        if (!g.is_connected()) continue;
        std::string cert = canonical_certificate(g);
        if (seen.insert(cert).second) catalog.push_back(canonical_copy(g));
    }
    std::sort(catalog.begin(), catalog.end(), [](const Graph& a, const Graph& b) {
        return canonical_certificate(a) < canonical_certificate(b);
    });
    return cache.emplace(key, std::move(catalog)).first->second;
}

std::vector<std::pair<Graph, Graph>> connected_factor_pairs(const Graph& g, GraphProduct kind,
                                                            const GraphCaps& caps) {
    if (!g.is_connected()) throw std::invalid_argument("factor search expects a connected graph");
    int n = g.vertex_count();
    // Loop-bearing candidates are needed whenever the product can erase or
    // create loops: always for the direct product, and for loopy targets
    // under the other two.
    bool loops_in_candidates = (kind == GraphProduct::Direct) || !g.is_simple();

    std::vector<std::pair<Graph, Graph>> out;
    std::set<std::pair<std::string, std::string>> seen;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        int d2 = n / d;
        if (d2 > caps.factor_enum_cap) continue;
        const auto& left_candidates = connected_graph_catalog(d, loops_in_candidates);
        const auto& right_candidates = connected_graph_catalog(d2, loops_in_candidates);
        for (const Graph& left : left_candidates) {
            if (is_neutral(left, kind)) continue;
            for (const Graph& right : right_candidates) {
                if (is_neutral(right, kind)) continue;
                Graph prod = product(left, right, kind, caps.product_vertex_cap);
                if (!is_isomorphic(prod, g, caps.canonical_cap)) continue;
                std::string c1 = canonical_certificate(left);
                std::string c2 = canonical_certificate(right);
                if (c2 < c1) std::swap(c1, c2);
                if (seen.emplace(c1, c2).second) {
                    Graph a = canonical_copy(left);
                    Graph b = canonical_copy(right);
                    if (canonical_certificate(a) == c1) {
                        out.emplace_back(a, b);
                    } else {
                        out.emplace_back(b, a);
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        auto key = [](const std::pair<Graph, Graph>& p) {
            return std::make_pair(canonical_certificate(p.first), canonical_certificate(p.second));
        };
        return key(x) < key(y);
    });
    return out;
}

namespace {

// Try to write g as a product of known irreducibles; valid as the unique
// factorization by the classical uniqueness theorems (simple graphs under
// the Cartesian/strong product, nonbipartite under the direct product).
std::optional<std::vector<Graph>> dictionary_product_match(const Graph& g, GraphProduct kind,
                                                           const std::vector<Graph>& dict,
                                                           const GraphCaps& caps) {
    int n = g.vertex_count();
    std::vector<const Graph*> usable;
    for (const Graph& entry : dict) {
        if (entry.vertex_count() >= 2 && n % entry.vertex_count() == 0) usable.push_back(&entry);
    }
    std::vector<Graph> chosen;
    std::optional<std::vector<Graph>> found;

    auto rec = [&](auto&& self, std::size_t start, int remaining) -> bool {
        if (remaining == 1) {
            if (chosen.empty()) return false;
            Graph prod = chosen[0];
            for (std::size_t i = 1; i < chosen.size(); ++i) {
                prod = product(prod, chosen[i], kind, caps.product_vertex_cap);
            }
            if (is_isomorphic(prod, g, caps.canonical_cap)) {
                found = chosen;
                return true;
            }
            return false;
        }
        for (std::size_t i = start; i < usable.size(); ++i) {
            int size = usable[i]->vertex_count();
            if (remaining % size != 0) continue;
            chosen.push_back(*usable[i]);
            if (self(self, i, remaining / size)) return true;
            chosen.pop_back();
        }
        return false;
    };
    rec(rec, 0, n);
    return found;
}

std::vector<std::string> certificate_list(const std::vector<Graph>& graphs) {
    std::vector<std::string> certs;
    certs.reserve(graphs.size());
    for (const Graph& g : graphs) certs.push_back(canonical_certificate(g));
    std::sort(certs.begin(), certs.end());
    return certs;
}

}  // namespace

std::vector<std::vector<Graph>> component_factorizations(const Graph& g, GraphProduct kind,
                                                         const GraphCaps& caps,
                                                         const std::vector<Graph>& known_irreducibles) {
    if (!g.is_connected()) throw std::invalid_argument("component factorization expects a connected graph");
    if (is_neutral(g, kind)) return {{}};

    bool cartesian_like = (kind != GraphProduct::Direct);
    if (cartesian_like && g.all_loops()) {
        // Every all-looped graph absorbs the looped vertex as a factor in
        // several ways; uniqueness here is the open problem.
        throw AmbiguousGraphFactorization(
            "connected graph with loops on every vertex has ambiguous " +
            std::string(product_name(kind)) + " factorizations");
    }

    bool theorem_applies = cartesian_like ? g.is_simple() : true;
    if (theorem_applies && !known_irreducibles.empty()) {
        if (auto match = dictionary_product_match(g, kind, known_irreducibles, caps)) {
            return {std::move(*match)};
        }
    }

    auto pairs = connected_factor_pairs(g, kind, caps);
    if (pairs.empty()) return {{g}};

    std::vector<std::vector<Graph>> result;
    std::set<std::vector<std::string>> seen;
    for (const auto& [left, right] : pairs) {
        if (is_isomorphic(left, g, caps.canonical_cap) || is_isomorphic(right, g, caps.canonical_cap)) {
            throw AmbiguousGraphFactorization("connected graph divides itself; loop pathology");
        }
        auto left_sets = component_factorizations(left, kind, caps, known_irreducibles);
        auto right_sets = component_factorizations(right, kind, caps, known_irreducibles);
        for (const auto& lf : left_sets) {
            for (const auto& rf : right_sets) {
                std::vector<Graph> merged = lf;
                merged.insert(merged.end(), rf.begin(), rf.end());
                std::sort(merged.begin(), merged.end(), [](const Graph& a, const Graph& b) {
                    return canonical_certificate(a) < canonical_certificate(b);
                });
                if (seen.insert(certificate_list(merged)).second) result.push_back(std::move(merged));
            }
        }
    }
    if (result.size() > 1) {
        if (!g.is_simple()) {
            throw AmbiguousGraphFactorization(
                "connected graph with loops admits multiple irreducible factorizations under the " +
                std::string(product_name(kind)) + " product");
        }
        throw std::logic_error("multiple irreducible factorizations of a connected graph");
    }
    return result;
}

// ---- polynomial bridge --------------------------------------------------------

int VariableDictionary::index_of(const Graph& g) const {
    std::string cert = canonical_certificate(g);
    for (std::size_t i = 0; i < certificates_.size(); ++i) {
        if (certificates_[i] == cert) return static_cast<int>(i);
    }
    return -1;
}

int VariableDictionary::add(const Graph& g) {
    int existing = index_of(g);
    if (existing >= 0) return existing;
    entries_.push_back(canonical_copy(g));
    certificates_.push_back(canonical_certificate(g));
    return static_cast<int>(entries_.size()) - 1;
}

SparsePoly graph_to_poly(const GraphSum& gs, GraphProduct kind, VariableDictionary& dict,
                         const GraphCaps& caps) {
    if (kind == GraphProduct::Direct) {
        for (const auto& [graph, count] : gs.components()) {
            if (is_bipartite(graph)) {
                throw std::invalid_argument(
                    "bipartite component is outside the direct-product correspondence");
            }
        }
    }

    struct Monomial {
        std::map<int, Exponent> exponents;
        int multiplicity;
    };
    std::vector<Monomial> monomials;
    for (const auto& [graph, count] : gs.components()) {
        auto factorizations = component_factorizations(graph, kind, caps, dict.entries());
        if (factorizations.size() != 1) {
            throw std::logic_error("component factorization is not unique");
        }
        Monomial mono;
        mono.multiplicity = count;
        for (const Graph& factor : factorizations[0]) {
            int index = dict.add(factor);
            ++mono.exponents[index];
        }
        monomials.push_back(std::move(mono));
    }

    int m = dict.size();
    std::vector<ExponentVector> terms;
    for (const auto& mono : monomials) {
        std::vector<Exponent> entries(static_cast<std::size_t>(m), 0);
        for (const auto& [index, e] : mono.exponents) entries[static_cast<std::size_t>(index)] = e;
        for (int k = 0; k < mono.multiplicity; ++k) terms.push_back(ExponentVector(entries));
    }
    return normalize(SparsePoly(m, std::move(terms)));
}

GraphSum poly_to_graph(const SparsePoly& p, GraphProduct kind, const VariableDictionary& dict,
                       const GraphCaps& caps) {
    if (p.var_count() > dict.size()) {
        throw std::invalid_argument("dictionary does not cover every variable");
    }
    GraphSum out;
    for (const ExponentVector& term : p.terms()) {
        Graph value = neutral_graph(kind);
        for (int j = 0; j < term.size(); ++j) {
            for (Exponent k = 0; k < term[j]; ++k) {
                value = product(value, dict.graph(j), kind, caps.product_vertex_cap);
            }
        }
        GraphSum comps = connected_components(value);
        for (const auto& [graph, count] : comps.components()) out.add(graph, count);
    }
    return out;
}

std::vector<GraphFactorization> graph_factorizations(const GraphSum& gs, GraphProduct kind,
                                                     const GraphCaps& caps,
                                                     VariableDictionary* dict_out) {
    VariableDictionary local;
    VariableDictionary& dict = dict_out ? *dict_out : local;
    SparsePoly p = graph_to_poly(gs, kind, dict, caps);
    auto facs = all_factorizations(p);
    std::vector<GraphFactorization> out;
    out.reserve(facs.size());
    for (const auto& f : facs) {
        GraphFactorization gf;
        if (!f.content.is_zero()) {
            GraphSum content = poly_to_graph(SparsePoly::monomial(f.content), kind, dict, caps);
            gf.content = content.components().at(0).first;
        }
        for (const SparsePoly& factor : f.factors) {
            gf.factors.push_back(poly_to_graph(factor, kind, dict, caps));
        }
        out.push_back(std::move(gf));
    }
    return out;
}

// ---- text format ----------------------------------------------------------------

GraphSum parse_graph_sum(const std::string& text) {
    std::vector<Graph> sections;
    std::istringstream in(text);
    std::string line;
    std::optional<Graph> current;
    std::size_t line_number = 0;

    auto flush = [&]() {
        if (current) {
            sections.push_back(*current);
            current.reset();
        }
    };

    while (std::getline(in, line)) {
        ++line_number;
        std::string trimmed = line;
        if (auto hash = trimmed.find('#'); hash != std::string::npos) trimmed.resize(hash);
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
            trimmed.pop_back();
        }
        std::size_t start = 0;
        while (start < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[start]))) {
            ++start;
        }
        trimmed = trimmed.substr(start);
        if (trimmed.empty()) {
            flush();
            continue;
        }
        if (trimmed.rfind("n=", 0) == 0) {
            flush();
            std::istringstream header(trimmed.substr(2));
            int n = -1;
            header >> n;
            if (n < 0 || n > 64) throw ParseError("invalid vertex count", line_number);
            std::string token;
            if (header >> token && token != "loops") {
                throw ParseError("unexpected token after vertex count", line_number);
            }
            current = Graph(n);
            continue;
        }
        if (!current) throw ParseError("edge line before any n= header", line_number);
        std::istringstream edge(trimmed);
        int u = -1, v = -1;
        if (!(edge >> u >> v)) throw ParseError("expected 'u v' edge line", line_number);
        std::string extra;
        if (edge >> extra) throw ParseError("trailing tokens on edge line", line_number);
        if (u < 0 || u >= current->vertex_count() || v < 0 || v >= current->vertex_count()) {
            throw ParseError("vertex index out of range", line_number);
        }
        current->add_edge(u, v);
    }
    flush();
    if (sections.empty()) throw ParseError("no graph sections found", line_number);

    GraphSum out;
    for (const Graph& section : sections) {
        if (section.vertex_count() == 0) continue;
        GraphSum comps = connected_components(section);
        for (const auto& [graph, count] : comps.components()) out.add(graph, count);
    }
    return out;
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.vertex_count();
    if (!g.is_simple()) out << " loops";
    for (auto [u, v] : g.edges()) out << "\n" << u << " " << v;
    return out.str();
}

}  // namespace nfactor
