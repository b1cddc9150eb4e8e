#pragma once

#include <vector>

#include "nfactor/factorizer.hpp"
#include "nfactor/poly.hpp"

namespace nfactor {

// Independent verification path for univariate factorizations. Works on a
// dense integer-coefficient representation and finds divisors by
// evaluation at small points plus exact interpolation, so it shares no
// machinery with the grid-bijection search it is checked against.
struct OracleOptions {
    Exponent max_degree = 48;
    std::size_t max_terms = 16;
    // DFS node budget across one call; exceeded means the input is out of
    // the oracle's intended desk scale.
    long long search_budget = 200'000'000;
};

// Same result format as all_factorizations, for direct comparison.
std::vector<Factorization> oracle_factorizations(const SparsePoly& p,
                                                 const OracleOptions& options = {});

}  // namespace nfactor
