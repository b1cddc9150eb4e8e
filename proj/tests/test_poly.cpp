#include <doctest.h>

#include <algorithm>

#include "nfactor/poly.hpp"
#include "test_util.hpp"

using namespace nfactor;
using testutil::Rng;
using testutil::random_poly;
using testutil::univariate_from;

namespace {

ExponentVector ev(std::vector<Exponent> entries) { return ExponentVector(std::move(entries)); }

}  // namespace

TEST_CASE("normalize sorts terms graded-lex") {
    SparsePoly p(1, {ev({3}), ev({0}), ev({1})});
    CHECK(normalize(p) == SparsePoly(1, {ev({0}), ev({1}), ev({3})}));

    SparsePoly repeats(1, {ev({0}), ev({1}), ev({1})});
    CHECK(normalize(repeats) == repeats);  // repeats preserved

    SparsePoly multi(2, {ev({1, 0}), ev({0, 1}), ev({0, 0})});
    CHECK(normalize(multi) == SparsePoly(2, {ev({0, 0}), ev({0, 1}), ev({1, 0})}));

    CHECK(normalize(normalize(p)) == normalize(p));
}

TEST_CASE("grlex order matches brute-force enumeration") {
    // independent comparison: sort all small vectors by (degree, entries)
    std::vector<ExponentVector> all;
    for (Exponent a = 0; a <= 2; ++a) {
        for (Exponent b = 0; b <= 2; ++b) all.push_back(ev({a, b}));
    }
    auto reference = [](const ExponentVector& x, const ExponentVector& y) {
        long long dx = x[0] + x[1];
        long long dy = y[0] + y[1];
        if (dx != dy) return dx < dy;
        if (x[0] != y[0]) return x[0] < y[0];
        return x[1] < y[1];
    };
    std::vector<ExponentVector> by_grlex = all;
    std::sort(by_grlex.begin(), by_grlex.end(), grlex_less);
    std::vector<ExponentVector> by_reference = all;
    std::sort(by_reference.begin(), by_reference.end(), reference);
    CHECK(by_grlex == by_reference);
}

TEST_CASE("multiply matches the published products") {
    SparsePoly lhs = multiply(parse_poly("1+X+X^2"), parse_poly("1+X^3"));
    CHECK(lhs == parse_poly("1+X+X^2+X^3+X^4+X^5"));

    SparsePoly with_coeffs = multiply(parse_poly("2+X+X^3"), parse_poly("2+X"));
    CHECK(with_coeffs == parse_poly("4+4*X+X^2+2*X^3+X^4"));
    CHECK(with_coeffs.term_count() == 12);

    SparsePoly p = parse_poly("1+X^2+5*X^7");
    CHECK(multiply(p, SparsePoly::one(1)) == p);
}

TEST_CASE("term_count counts with multiplicity") {
    CHECK(parse_poly("1+X+X^2").term_count() == 3);
    CHECK(parse_poly("4+4*X+X^2+2*X^3+X^4").term_count() == 12);
    CHECK(SparsePoly::zero(1).term_count() == 0);
}

TEST_CASE("multiply term counts are multiplicative") {
    Rng rng(1001);
    for (int iter = 0; iter < 200; ++iter) {
        int m = static_cast<int>(rng.range(1, 3));
        SparsePoly s = random_poly(rng, m, static_cast<int>(rng.range(1, 6)), 8);
        SparsePoly t = random_poly(rng, m, static_cast<int>(rng.range(1, 6)), 8);
        CHECK(multiply(s, t).term_count() == s.term_count() * t.term_count());
    }
}

TEST_CASE("multiply is commutative and associative on canonical forms") {
    Rng rng(1002);
    for (int iter = 0; iter < 100; ++iter) {
        int m = static_cast<int>(rng.range(1, 2));
        SparsePoly a = random_poly(rng, m, static_cast<int>(rng.range(1, 4)), 6);
        SparsePoly b = random_poly(rng, m, static_cast<int>(rng.range(1, 4)), 6);
        SparsePoly c = random_poly(rng, m, static_cast<int>(rng.range(1, 4)), 6);
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("strip_content factors out the componentwise minimum") {
    auto [c1, p1] = strip_content(parse_poly("X^2+X^3"));
    CHECK(c1 == ev({2}));
    CHECK(normalize(p1) == parse_poly("1+X"));

    // X^a (1 + X^b + ... + X^{5b})
    auto [c2, p2] = strip_content(univariate_from({3, 5, 7, 9, 11, 13}));
    CHECK(c2 == ev({3}));
    CHECK(normalize(p2) == univariate_from({0, 2, 4, 6, 8, 10}));

    auto [c3, p3] = strip_content(parse_poly("X1*X2+X1"));
    CHECK(c3 == ev({1, 0}));
    CHECK(normalize(p3) == parse_poly("X2+1"));

    CHECK_THROWS_AS(strip_content(SparsePoly::zero(1)), std::invalid_argument);
}

TEST_CASE("strip_content then multiply-back reproduces the input") {
    Rng rng(1003);
    for (int iter = 0; iter < 200; ++iter) {
        int m = static_cast<int>(rng.range(1, 3));
        SparsePoly p = random_poly(rng, m, static_cast<int>(rng.range(1, 7)), 9);
        auto [content, primitive] = strip_content(p);
        CHECK(primitive.is_primitive());
        CHECK(multiply(SparsePoly::monomial(content), primitive) == p);
    }
}

TEST_CASE("project keeps the fixed term order") {
    // XY + 1 -> (X+1, Y+1); both projections sorted the same way
    SparsePoly xy1 = parse_poly("X1*X2+1");
    CHECK(project(xy1, 1) == SparsePoly(1, {ev({0}), ev({1})}));
    CHECK(project(xy1, 2) == SparsePoly(1, {ev({0}), ev({1})}));

    // X + Y -> (X+1, 1+Y): the images differ in order, which is the point
    SparsePoly xy = parse_poly("X1+X2");  // canonical order: (0,1), (1,0)
    CHECK(project(xy, 1) == SparsePoly(1, {ev({0}), ev({1})}));
    CHECK(project(xy, 2) == SparsePoly(1, {ev({1}), ev({0})}));

    SparsePoly uni = parse_poly("1+X+X^4");
    CHECK(project(uni, 1) == uni);

    CHECK_THROWS_AS(project(xy, 3), std::out_of_range);
    CHECK_THROWS_AS(project(xy, 0), std::out_of_range);
}

TEST_CASE("project preserves term count") {
    Rng rng(1004);
    for (int iter = 0; iter < 100; ++iter) {
        int m = static_cast<int>(rng.range(1, 3));
        SparsePoly p = random_poly(rng, m, static_cast<int>(rng.range(1, 8)), 7);
        for (int j = 1; j <= m; ++j) {
            CHECK(project(p, j).term_count() == p.term_count());
        }
    }
}

TEST_CASE("parse handles coefficients, indices, and errors") {
    CHECK(parse_poly("1 + 2*X^4 + X^7") == SparsePoly(1, {ev({0}), ev({4}), ev({4}), ev({7})}));
    CHECK(parse_poly("X1^2*X2 + 1") == SparsePoly(2, {ev({0, 0}), ev({2, 1})}));
    CHECK(parse_poly("3") == SparsePoly(0, {ev({}), ev({}), ev({})}));
    CHECK(parse_poly("X") == parse_poly("X1"));
    CHECK(parse_poly("2*X*X^2") == SparsePoly(1, {ev({3}), ev({3})}));

    CHECK_THROWS_AS(parse_poly("1 - X"), ParseError);
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("X^"), ParseError);
    CHECK_THROWS_AS(parse_poly("0*X"), ParseError);
    CHECK_THROWS_AS(parse_poly("1 + + X"), ParseError);

    try {
        parse_poly("1 - X");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("format emits collected canonical text") {
    CHECK(format_poly(parse_poly("X^7+2*X^4+1")) == "1 + 2*X^4 + X^7");
    CHECK(format_poly(parse_poly("X2*X1^2+1")) == "1 + X1^2*X2");
    CHECK(format_poly(SparsePoly::zero(1)) == "0");
    CHECK(format_poly(SparsePoly::constant(0, 4)) == "4");
}

TEST_CASE("parse after format is the identity on canonical polynomials") {
    Rng rng(1005);
    for (int iter = 0; iter < 300; ++iter) {
        int m = static_cast<int>(rng.range(1, 3));
        SparsePoly p = random_poly(rng, m, static_cast<int>(rng.range(1, 7)), 6);
        // make sure every variable actually occurs, otherwise the parse
        // cannot know the ambient variable count
        bool all_used = true;
        for (int j = 0; j < m; ++j) {
            bool used = false;
            for (const auto& t : p.terms()) used = used || t[j] > 0;
            all_used = all_used && used;
        }
        if (!all_used) continue;
        CHECK(parse_poly(format_poly(p)) == p);
    }
}

TEST_CASE("exponent arithmetic overflows loudly") {
    SparsePoly big = SparsePoly::monomial(ev({kMaxExponent}));
    CHECK_THROWS_AS(multiply(big, big), std::overflow_error);
}

TEST_CASE("reciprocal reverses exponents") {
    CHECK(reciprocal(parse_poly("1+X+X^3")) == parse_poly("1+X^2+X^3"));
    CHECK(reciprocal(univariate_from({0, 1, 2, 3, 4, 5, 6, 7, 8, 9})) ==
          univariate_from({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
}
