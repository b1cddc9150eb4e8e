#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nfactor/errors.hpp"

namespace nfactor {

using Exponent = long long;

// A monomial X^gamma as its vector of exponents, one entry per variable.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<Exponent> entries);
    static ExponentVector zeros(int var_count);

    int size() const { return static_cast<int>(entries_.size()); }
    Exponent operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }
    const std::vector<Exponent>& entries() const { return entries_; }

    bool is_zero() const;
    Exponent degree() const;

    ExponentVector plus(const ExponentVector& other) const;
    // Componentwise subtraction; throws if any entry would go negative.
    ExponentVector minus(const ExponentVector& other) const;
    ExponentVector min_with(const ExponentVector& other) const;
    bool dominates(const ExponentVector& other) const;

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<Exponent> entries_;
};

// Graded-lexicographic order: total degree first, then lexicographic.
bool grlex_less(const ExponentVector& a, const ExponentVector& b);

// A polynomial over the nonnegative-integer semiring in very sparse form:
// an ordered list of exponent vectors, repeats encoding coefficients.
// Term order is part of the value; normalize() produces the canonical
// (graded-lex sorted) form.
class SparsePoly {
public:
    SparsePoly() = default;
    SparsePoly(int var_count, std::vector<ExponentVector> terms);

    static SparsePoly zero(int var_count);
    static SparsePoly one(int var_count);
    static SparsePoly monomial(ExponentVector exponents);
    // k copies of X^0 in var_count variables.
    static SparsePoly constant(int var_count, long long k);

    int var_count() const { return var_count_; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<ExponentVector>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    bool is_normalized() const;
    bool is_monomial() const { return terms_.size() == 1; }
    // No variable divides every term.
    bool is_primitive() const;

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    int var_count_ = 0;
    std::vector<ExponentVector> terms_;
};

SparsePoly normalize(const SparsePoly& p);
SparsePoly multiply(const SparsePoly& s, const SparsePoly& t);

// Splits p into its monomial content (componentwise minimum exponents) and
// the remaining primitive polynomial, preserving term order.
std::pair<ExponentVector, SparsePoly> strip_content(const SparsePoly& p);

// Single-variable image for variable j (1-based). Term order is preserved,
// deliberately not re-sorted.
SparsePoly project(const SparsePoly& p, int j);
std::vector<SparsePoly> project_all(const SparsePoly& p);

// Exponent reversal e -> max_degree - e for univariate polynomials.
SparsePoly reciprocal(const SparsePoly& p);

// Pads every term with zero exponents up to var_count; rejects shrinking
// below a variable that is actually used.
SparsePoly with_var_count(const SparsePoly& p, int var_count);

SparsePoly parse_poly(std::string_view text);
std::string format_poly(const SparsePoly& p);
std::string format_poly_with_names(const SparsePoly& p,
                                   const std::vector<std::string>& names);

}  // namespace nfactor
