#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nfactor/poly.hpp"

namespace nfactor {

// A complete factorization: monomial content times primitive, non-monomial
// factors that are irreducible in the semiring. Factors are kept sorted by
// (term count, canonical text).
struct Factorization {
    ExponentVector content;
    std::vector<SparsePoly> factors;

    std::vector<std::string> factor_keys() const;
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct FactorizerOptions {
    std::size_t max_terms = 20;
};

// Shared memoization across calls; results keyed on the canonical text of
// primitive polynomials. Single-writer use, or one cache per thread.
class FactorCache {
public:
    std::vector<std::vector<SparsePoly>>* find(const std::string& key);
    void store(std::string key, std::vector<std::vector<SparsePoly>> value);
    std::size_t size() const { return memo_.size(); }

private:
    std::unordered_map<std::string, std::vector<std::vector<SparsePoly>>> memo_;
};

// All ways to write a primitive polynomial as a product of two non-monomial
// factors, deduplicated as unordered pairs, in deterministic order.
std::vector<std::pair<SparsePoly, SparsePoly>> binary_splits(const SparsePoly& p);

// Every factorization of p into irreducibles. Deterministic order.
std::vector<Factorization> all_factorizations(const SparsePoly& p,
                                              const FactorizerOptions& options = {});
std::vector<Factorization> all_factorizations(const SparsePoly& p, FactorCache& cache,
                                              const FactorizerOptions& options = {});

// p must be primitive and non-monomial.
bool is_irreducible(const SparsePoly& p);

}  // namespace nfactor
