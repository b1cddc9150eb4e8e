#pragma once

#include <cstdint>
#include <vector>

#include "nfactor/poly.hpp"

namespace nfactor::testutil {

// Deterministic generator for property-style tests.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline ExponentVector random_vector(Rng& rng, int m, long long max_exp) {
    std::vector<Exponent> entries;
    entries.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) entries.push_back(rng.range(0, max_exp));
    return ExponentVector(std::move(entries));
}

inline SparsePoly random_poly(Rng& rng, int m, int terms, long long max_exp) {
    std::vector<ExponentVector> list;
    list.reserve(static_cast<std::size_t>(terms));
    for (int i = 0; i < terms; ++i) list.push_back(random_vector(rng, m, max_exp));
    return normalize(SparsePoly(m, std::move(list)));
}

inline SparsePoly univariate_from(const std::vector<long long>& exponents) {
    std::vector<ExponentVector> terms;
    terms.reserve(exponents.size());
    for (long long e : exponents) terms.push_back(ExponentVector(std::vector<Exponent>{e}));
    return normalize(SparsePoly(1, std::move(terms)));
}

}  // namespace nfactor::testutil
