#include "nfactor/factorizer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nfactor/gridorder.hpp"
#include "nfactor/solver.hpp"

namespace nfactor {

namespace {

std::string canonical_key(const SparsePoly& p) { return format_poly(normalize(p)); }

bool factor_less(const SparsePoly& a, const SparsePoly& b) {
    if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
    return canonical_key(a) < canonical_key(b);
}

// Bijection lists are reused heavily; keep them per (r, s, symmetric).
const std::vector<GridBijection>& cached_bijections(GridShape shape, bool symmetric) {
    static std::map<std::tuple<int, int, bool>, std::vector<GridBijection>> cache;
    auto key = std::make_tuple(shape.r, shape.s, symmetric);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, enumerate_bijections(shape, symmetric)).first;
    }
    return it->second;
}

}  // namespace

std::vector<std::string> Factorization::factor_keys() const {
    std::vector<std::string> keys;
    keys.reserve(factors.size());
    for (const auto& f : factors) keys.push_back(canonical_key(f));
    return keys;
}

std::vector<std::vector<SparsePoly>>* FactorCache::find(const std::string& key) {
    auto it = memo_.find(key);
    return it == memo_.end() ? nullptr : &it->second;
}

void FactorCache::store(std::string key, std::vector<std::vector<SparsePoly>> value) {
    memo_.emplace(std::move(key), std::move(value));
}

std::vector<std::pair<SparsePoly, SparsePoly>> binary_splits(const SparsePoly& p) {
    if (!p.is_primitive()) throw std::invalid_argument("binary_splits expects a primitive polynomial");
    SparsePoly q = normalize(p);
    std::size_t t = q.term_count();
    if (t < 2) throw std::invalid_argument("binary_splits expects at least two terms");

    std::map<std::pair<std::string, std::string>, std::pair<SparsePoly, SparsePoly>> found;
    for (std::size_t r = 2; r * r <= t; ++r) {
        if (t % r != 0) continue;
        std::size_t s = t / r;
        GridShape shape{static_cast<int>(r), static_cast<int>(s)};
        for (const GridBijection& rho : cached_bijections(shape, r == s)) {
            auto rec = reconstruct_factors(q.terms(), rho);
            if (!rec) continue;
            SparsePoly first = normalize(SparsePoly(q.var_count(), rec->a));
            SparsePoly second = normalize(SparsePoly(q.var_count(), rec->b));
            std::string k1 = canonical_key(first);
            std::string k2 = canonical_key(second);
            if (std::pair(second.term_count(), k2) < std::pair(first.term_count(), k1)) {
                std::swap(first, second);
                std::swap(k1, k2);
            }
            found.emplace(std::pair(k1, k2), std::pair(first, second));
        }
    }

    std::vector<std::pair<SparsePoly, SparsePoly>> out;
    out.reserve(found.size());
    for (auto& [key, value] : found) out.push_back(std::move(value));
    return out;
}

namespace {

// Complete factorizations of a primitive polynomial into irreducibles,
// each returned as a sorted factor list.
const std::vector<std::vector<SparsePoly>>& complete_factorizations(const SparsePoly& primitive,
                                                                    FactorCache& cache) {
    std::string key = canonical_key(primitive);
    if (auto* hit = cache.find(key)) return *hit;

    std::vector<std::vector<SparsePoly>> result;
    if (primitive.term_count() <= 1) {
        // The unit: empty factor list.
        result.push_back({});
    } else {
        auto splits = binary_splits(primitive);
        if (splits.empty()) {
            result.push_back({normalize(primitive)});
        } else {
            std::set<std::vector<std::string>> seen;
            for (const auto& [left, right] : splits) {
                const auto left_sets = complete_factorizations(left, cache);
                const auto right_sets = complete_factorizations(right, cache);
                for (const auto& lf : left_sets) {
                    for (const auto& rf : right_sets) {
                        std::vector<SparsePoly> merged = lf;
                        merged.insert(merged.end(), rf.begin(), rf.end());
                        std::sort(merged.begin(), merged.end(), factor_less);
                        std::vector<std::string> sig;
                        sig.reserve(merged.size());
                        for (const auto& f : merged) sig.push_back(canonical_key(f));
                        if (seen.insert(sig).second) result.push_back(std::move(merged));
                    }
                }
            }
            std::sort(result.begin(), result.end(),
                      [](const std::vector<SparsePoly>& a, const std::vector<SparsePoly>& b) {
                          if (a.size() != b.size()) return a.size() < b.size();
                          for (std::size_t i = 0; i < a.size(); ++i) {
                              if (!(a[i] == b[i])) return factor_less(a[i], b[i]);
                          }
                          return false;
                      });
        }
    }
    cache.store(key, std::move(result));
    return *cache.find(key);
}

}  // namespace

std::vector<Factorization> all_factorizations(const SparsePoly& p, FactorCache& cache,
                                              const FactorizerOptions& options) {
    if (p.empty()) throw std::invalid_argument("cannot factor the zero polynomial");
    if (p.term_count() > options.max_terms) {
        throw CapExceeded("term count " + std::to_string(p.term_count()) + " above cap " +
                          std::to_string(options.max_terms));
    }
    auto [content, primitive] = strip_content(normalize(p));
    const auto& sets = complete_factorizations(primitive, cache);
    std::vector<Factorization> out;
    out.reserve(sets.size());
    for (const auto& factors : sets) out.push_back(Factorization{content, factors});
    return out;
}

std::vector<Factorization> all_factorizations(const SparsePoly& p,
                                              const FactorizerOptions& options) {
    FactorCache cache;
    return all_factorizations(p, cache, options);
}

bool is_irreducible(const SparsePoly& p) {
    if (p.empty() || p.is_monomial()) {
        throw std::invalid_argument("irreducibility is defined for non-monomial polynomials");
    }
    if (!p.is_primitive()) throw std::invalid_argument("irreducibility expects a primitive polynomial");
    return binary_splits(p).empty();
}

}  // namespace nfactor
