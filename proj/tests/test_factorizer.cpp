#include <doctest.h>

#include <algorithm>
#include <set>

#include "nfactor/factorizer.hpp"
#include "nfactor/oracle.hpp"
#include "test_util.hpp"

using namespace nfactor;
using testutil::Rng;
using testutil::univariate_from;

namespace {

std::set<std::pair<std::string, std::string>> split_keys(const SparsePoly& p) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [a, b] : binary_splits(p)) {
        out.emplace(format_poly(a), format_poly(b));
    }
    return out;
}

std::multiset<std::vector<std::string>> factorization_keys(const std::vector<Factorization>& facs) {
    std::multiset<std::vector<std::string>> out;
    for (const auto& f : facs) out.insert(f.factor_keys());
    return out;
}

bool same_factorizations(const std::vector<Factorization>& a, const std::vector<Factorization>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i].content == b[i].content)) return false;
    }
    return factorization_keys(a) == factorization_keys(b);
}

}  // namespace

TEST_CASE("binary splits of the six-term polynomial") {
    auto keys = split_keys(parse_poly("1+X+X^2+X^3+X^4+X^5"));
    CHECK(keys == std::set<std::pair<std::string, std::string>>{
                      {"1 + X", "1 + X^2 + X^4"}, {"1 + X^3", "1 + X + X^2"}});
}

TEST_CASE("prime term counts cannot split") {
    CHECK(binary_splits(parse_poly("1+X+X^2")).empty());
    CHECK(binary_splits(parse_poly("1+X^4")).empty());
}

TEST_CASE("four-term split") {
    auto keys = split_keys(parse_poly("1+X+X^2+X^3"));
    CHECK(keys == std::set<std::pair<std::string, std::string>>{{"1 + X", "1 + X^2"}});
}

TEST_CASE("all_factorizations on the coefficient example") {
    auto facs = all_factorizations(parse_poly("4+4*X+X^2+2*X^3+X^4"));
    REQUIRE(facs.size() == 2);
    auto keys = factorization_keys(facs);
    CHECK(keys.count({"2 + X", "2 + X + X^3"}) == 1);
    CHECK(keys.count({"1 + X", "4 + X^2 + X^3"}) == 1);
}

TEST_CASE("monomials have exactly the trivial factorization") {
    auto facs = all_factorizations(parse_poly("X^5"));
    REQUIRE(facs.size() == 1);
    CHECK(facs[0].content == ExponentVector({5}));
    CHECK(facs[0].factors.empty());
}

TEST_CASE("the sixteen-term example factors in lengths two and three") {
    SparsePoly p = multiply(parse_poly("1+X^3+X^5+X^6"), parse_poly("1+X+X^2+X^4"));
    CHECK(p == multiply(multiply(parse_poly("1+X"), parse_poly("1+X^2")),
                        parse_poly("1+2*X^4+X^7")));
    auto facs = all_factorizations(p);
    REQUIRE(facs.size() == 2);
    std::set<std::size_t> lengths;
    for (const auto& f : facs) lengths.insert(f.factors.size());
    CHECK(lengths == std::set<std::size_t>{2, 3});
    auto keys = factorization_keys(facs);
    CHECK(keys.count({"1 + X + X^2 + X^4", "1 + X^3 + X^5 + X^6"}) == 1);
    CHECK(keys.count({"1 + X", "1 + X^2", "1 + 2*X^4 + X^7"}) == 1);
}

TEST_CASE("irreducibility checks") {
    CHECK(is_irreducible(parse_poly("4+X^2+X^3")));
    CHECK(is_irreducible(parse_poly("1+X^2+X^4")));
    CHECK_FALSE(is_irreducible(parse_poly("1+X+X^2+X^3")));
    CHECK_THROWS_AS(is_irreducible(parse_poly("X^3")), std::invalid_argument);
}

TEST_CASE("factorization caps fail loudly") {
    std::vector<long long> exps;
    for (long long i = 0; i < 25; ++i) exps.push_back(i);
    CHECK_THROWS_AS(all_factorizations(univariate_from(exps)), CapExceeded);
    CHECK_THROWS_AS(all_factorizations(SparsePoly::zero(1)), std::invalid_argument);
}

TEST_CASE("multivariate factorization through exponent vectors") {
    SparsePoly p = multiply(with_var_count(parse_poly("1+X1"), 2), parse_poly("1+X2"));
    auto facs = all_factorizations(p);
    REQUIRE(facs.size() == 1);
    CHECK(facs[0].factor_keys() == std::vector<std::string>{"1 + X1", "1 + X2"});

    // square of X1 + X2: primitive with no constant term
    SparsePoly sq = multiply(parse_poly("X1+X2"), parse_poly("X1+X2"));
    auto sq_facs = all_factorizations(sq);
    REQUIRE(sq_facs.size() == 1);
    CHECK(sq_facs[0].factor_keys() == std::vector<std::string>{"X2 + X1", "X2 + X1"});
}

TEST_CASE("oracle agrees on the published cases") {
    auto main_path = all_factorizations(parse_poly("1+X+X^2+X^3+X^4+X^5"));
    auto oracle = oracle_factorizations(parse_poly("1+X+X^2+X^3+X^4+X^5"));
    CHECK(same_factorizations(main_path, oracle));

    auto binomial = oracle_factorizations(parse_poly("1+X^3"));
    REQUIRE(binomial.size() == 1);
    CHECK(binomial[0].factors.size() == 1);  // irreducible over the semiring

    CHECK(same_factorizations(all_factorizations(parse_poly("4+4*X+X^2+2*X^3+X^4")),
                              oracle_factorizations(parse_poly("4+4*X+X^2+2*X^3+X^4"))));
}

TEST_CASE("oracle rejects oversized inputs") {
    CHECK_THROWS_AS(oracle_factorizations(parse_poly("1+X^60")), CapExceeded);
    CHECK_THROWS_AS(oracle_factorizations(parse_poly("1+X1*X2")), std::invalid_argument);
}

TEST_CASE("oracle equals the grid search on random small polynomials") {
    Rng rng(3001);
    for (int iter = 0; iter < 400; ++iter) {
        int t = static_cast<int>(rng.range(2, 8));
        std::vector<long long> exps{0};
        for (int i = 1; i < t; ++i) exps.push_back(rng.range(0, 8));
        SparsePoly p = univariate_from(exps);
        CHECK(same_factorizations(all_factorizations(p), oracle_factorizations(p)));
    }
}

TEST_CASE("prime term counts have exactly one factorization") {
    Rng rng(3002);
    for (int t : {2, 3, 5, 7, 11}) {
        for (int iter = 0; iter < 30; ++iter) {
            std::vector<long long> exps{0};
            for (int i = 1; i < t; ++i) exps.push_back(rng.range(0, 10));
            auto facs = all_factorizations(univariate_from(exps));
            CHECK(facs.size() == 1);
        }
    }
}

TEST_CASE("soundness: factors multiply back to the input") {
    Rng rng(3003);
    for (int iter = 0; iter < 150; ++iter) {
        int t = static_cast<int>(rng.range(2, 9));
        std::vector<long long> exps;
        for (int i = 0; i < t; ++i) exps.push_back(rng.range(0, 9));
        SparsePoly p = univariate_from(exps);
        for (const auto& f : all_factorizations(p)) {
            SparsePoly back = SparsePoly::monomial(f.content);
            for (const auto& factor : f.factors) back = multiply(back, factor);
            CHECK(back == normalize(p));
        }
    }
}

TEST_CASE("exact products cancel") {
    Rng rng(3004);
    int checked = 0;
    for (int iter = 0; iter < 200; ++iter) {
        SparsePoly s = univariate_from({0, rng.range(1, 6)});
        std::vector<long long> t1{0}, t2{0};
        for (int i = 1; i < 3; ++i) {
            t1.push_back(rng.range(0, 7));
            t2.push_back(rng.range(0, 7));
        }
        SparsePoly u = univariate_from(t1);
        SparsePoly v = univariate_from(t2);
        if (u == v) continue;
        ++checked;
        CHECK_FALSE(multiply(s, u) == multiply(s, v));
    }
    CHECK(checked > 100);
}
