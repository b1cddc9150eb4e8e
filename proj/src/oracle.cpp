#include "nfactor/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "nfactor/solver.hpp"

namespace nfactor {

namespace {

using Dense = std::vector<long long>;  // coefficient of X^i at index i, no trailing zeros

long long eval_at(const Dense& p, long long x) {
    __int128 acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * x + p[i];
        if (acc > static_cast<__int128>(4) * 1'000'000'000'000'000'000LL) {
            throw std::overflow_error("oracle evaluation overflow");
        }
    }
    return static_cast<long long>(acc);
}

std::vector<long long> sorted_divisors(long long v) {
    std::vector<long long> divs{1};
    long long rest = v;
    for (long long p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        std::size_t n = divs.size();
        long long pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < n; ++i) divs.push_back(divs[i] * pk);
        }
    }
    if (rest > 1) {
        std::size_t n = divs.size();
        for (std::size_t i = 0; i < n; ++i) divs.push_back(divs[i] * rest);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Exact division over the rationals with integrality checks; nullopt when
// g does not divide p with an integer quotient.
std::optional<Dense> divide_exact(const Dense& p, const Dense& g) {
    if (g.empty() || g.back() == 0) throw std::invalid_argument("bad divisor");
    if (p.size() < g.size()) return std::nullopt;
    std::vector<Rational> rem;
    rem.reserve(p.size());
    for (long long c : p) rem.push_back(Rational(c));
    std::size_t qdeg = p.size() - g.size();
    std::vector<Rational> quot(qdeg + 1, Rational(0));
    Rational lead(g.back());
    for (std::size_t k = qdeg + 1; k-- > 0;) {
        Rational q = rem[k + g.size() - 1] / lead;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t i = 0; i < g.size(); ++i) {
            rem[k + i] = rem[k + i] - q * Rational(g[i]);
        }
    }
    for (const Rational& r : rem) {
        if (!r.is_zero()) return std::nullopt;
    }
    Dense out(qdeg + 1, 0);
    for (std::size_t i = 0; i <= qdeg; ++i) {
        if (!quot[i].is_integer()) return std::nullopt;
        out[i] = quot[i].num();
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

// Interpolates the unique degree-<=d polynomial through (x, values[x]) for
// x = 0..d; returns it only when all coefficients are nonnegative integers
// and the degree is exactly d.
std::optional<Dense> interpolate_nonneg(const std::vector<long long>& values) {
    std::size_t n = values.size();
    std::vector<Rational> dd;
    dd.reserve(n);
    for (long long v : values) dd.push_back(Rational(v));
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long long>(level));
            if (i == level) break;
        }
    }
    // Newton form with nodes 0..n-2: sum dd[k] * prod_{l<k} (x - l)
    std::vector<Rational> coeffs(n, Rational(0));
    std::vector<Rational> basis{Rational(1)};
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            coeffs[i] = coeffs[i] + dd[k] * basis[i];
        }
        if (k + 1 < n) {
            basis.push_back(Rational(0));
            for (std::size_t i = basis.size() - 1; i > 0; --i) {
                basis[i] = basis[i - 1] - Rational(static_cast<long long>(k)) * basis[i];
            }
            basis[0] = -Rational(static_cast<long long>(k)) * basis[0];
        }
    }
    Dense out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!coeffs[i].is_integer() || coeffs[i].is_negative()) return std::nullopt;
        out[i] = coeffs[i].num();
    }
    if (out.back() == 0) return std::nullopt;  // lower degrees handled earlier
    return out;
}

struct OracleSearch {
    const OracleOptions& options;
    long long nodes_left;

    explicit OracleSearch(const OracleOptions& opts)
        : options(opts), nodes_left(opts.search_budget) {}

    std::map<Dense, std::vector<std::vector<Dense>>> memo;

    void spend() {
        if (--nodes_left < 0) throw BudgetExceeded("oracle search budget exceeded");
    }

    // All unordered splits of p into two nonnegative non-unit divisors.
    std::vector<std::pair<Dense, Dense>> splits(const Dense& p) {
        std::set<std::pair<Dense, Dense>> found;
        long long total = eval_at(p, 1);

        long long content = 0;
        for (long long c : p) content = std::gcd(content, c);
        for (long long e : sorted_divisors(content)) {
            if (e < 2) continue;
            if (total / e < 2) continue;
            Dense cofactor(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) cofactor[i] = p[i] / e;
            Dense constant{e};
            found.emplace(std::min(constant, cofactor), std::max(constant, cofactor));
        }

        std::size_t deg = p.size() - 1;
        std::vector<std::vector<long long>> point_divisors;
        for (std::size_t dg = 1; dg <= deg / 2; ++dg) {
            point_divisors.clear();
            for (std::size_t x = 0; x <= dg; ++x) {
                point_divisors.push_back(sorted_divisors(eval_at(p, static_cast<long long>(x))));
            }
            std::vector<long long> chosen(dg + 1, 0);
            dfs(p, dg, 0, total, point_divisors, chosen, found);
        }
        return {found.begin(), found.end()};
    }

    void dfs(const Dense& p, std::size_t dg, std::size_t x, long long total,
             const std::vector<std::vector<long long>>& point_divisors,
             std::vector<long long>& chosen, std::set<std::pair<Dense, Dense>>& found) {
        spend();
        if (x == dg + 1) {
            auto g = interpolate_nonneg(chosen);
            if (!g) return;
            auto h = divide_exact(p, *g);
            if (!h) return;
            for (long long c : *h) {
                if (c < 0) return;
            }
            if (eval_at(*h, 1) < 2) return;
            found.emplace(std::min(*g, *h), std::max(*g, *h));
            return;
        }
        for (long long v : point_divisors[x]) {
            if (x == 1) {
                if (v < 2 || v > total / 2) continue;
                if (v <= chosen[0]) continue;
            } else if (x >= 2) {
                if (v <= chosen[x - 1]) continue;
                // lower bound x^dg (positive leading term), upper bound g(1) * x^dg
                __int128 xdg = 1;
                for (std::size_t k = 0; k < dg; ++k) xdg *= static_cast<long long>(x);
                if (static_cast<__int128>(v) < xdg) continue;
                if (static_cast<__int128>(v) > static_cast<__int128>(chosen[1]) * xdg) break;
            }
            chosen[x] = v;
            dfs(p, dg, x + 1, total, point_divisors, chosen, found);
        }
        chosen[x] = 0;
    }

    const std::vector<std::vector<Dense>>& complete(const Dense& p) {
        auto it = memo.find(p);
        if (it != memo.end()) return it->second;

        std::vector<std::vector<Dense>> result;
        if (eval_at(p, 1) <= 1) {
            result.push_back({});
        } else {
            auto pair_splits = splits(p);
            if (pair_splits.empty()) {
                result.push_back({p});
            } else {
                std::set<std::vector<Dense>> seen;
                for (const auto& [left, right] : pair_splits) {
                    for (const auto& lf : complete(left)) {
                        for (const auto& rf : complete(right)) {
                            std::vector<Dense> merged = lf;
                            merged.insert(merged.end(), rf.begin(), rf.end());
                            std::sort(merged.begin(), merged.end());
                            seen.insert(std::move(merged));
                        }
                    }
                }
                result.assign(seen.begin(), seen.end());
            }
        }
        return memo.emplace(p, std::move(result)).first->second;
    }
};

SparsePoly sparse_from_dense(const Dense& d, Exponent shift) {
    std::vector<ExponentVector> terms;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (long long k = 0; k < d[i]; ++k) {
            terms.push_back(ExponentVector(std::vector<Exponent>{static_cast<Exponent>(i) + shift}));
        }
    }
    return SparsePoly(1, std::move(terms));
}

bool factor_order(const SparsePoly& a, const SparsePoly& b) {
    if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
    return format_poly(a) < format_poly(b);
}

}  // namespace

std::vector<Factorization> oracle_factorizations(const SparsePoly& p, const OracleOptions& options) {
    if (p.var_count() != 1) throw std::invalid_argument("oracle handles univariate polynomials");
    if (p.empty()) throw std::invalid_argument("cannot factor the zero polynomial");
    if (p.term_count() > options.max_terms) {
        throw CapExceeded("oracle term cap exceeded");
    }
    auto [content, primitive] = strip_content(normalize(p));

    Exponent deg = 0;
    for (const auto& t : primitive.terms()) deg = std::max(deg, t[0]);
    if (deg > options.max_degree) throw CapExceeded("oracle degree cap exceeded");

    Dense dense(static_cast<std::size_t>(deg) + 1, 0);
    for (const auto& t : primitive.terms()) ++dense[static_cast<std::size_t>(t[0])];

    OracleSearch search(options);
    const auto& sets = search.complete(dense);

    std::vector<Factorization> out;
    out.reserve(sets.size());
    for (const auto& set : sets) {
        Factorization f;
        f.content = content;
        for (const Dense& d : set) f.factors.push_back(normalize(sparse_from_dense(d, 0)));
        std::sort(f.factors.begin(), f.factors.end(), factor_order);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const Factorization& a, const Factorization& b) {
        if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
        return a.factor_keys() < b.factor_keys();
    });
    return out;
}

}  // namespace nfactor
