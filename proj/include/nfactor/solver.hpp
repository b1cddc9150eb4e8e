#pragma once

#include <optional>
#include <vector>

#include "nfactor/gridorder.hpp"
#include "nfactor/poly.hpp"

namespace nfactor {

// Exact rational on 64-bit parts, enough for the small systems here.
class Rational {
public:
    Rational() = default;
    Rational(long long num, long long den = 1);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(-num_, den_); }
    friend bool operator==(const Rational&, const Rational&) = default;

private:
    long long num_ = 0;
    long long den_ = 1;
};

// Factor sequences recovered from c and rho: a_i + b_j = c_{rho(i,j)}.
struct ReconstructionResult {
    std::vector<ExponentVector> a;
    std::vector<ExponentVector> b;
};

// Tries to recover the two factor exponent sequences, normalised so that
// every component of a and of b has minimum 0. Returns nothing when the
// cell equations cannot all hold.
std::optional<ReconstructionResult> reconstruct_factors(
    const std::vector<ExponentVector>& c, const GridBijection& rho);

// c_k = c_p + c_q with k,p,q in 2..t (c_1 = 0 implicit).
struct SystemEquation {
    int k = 0;
    int p = 0;
    int q = 0;
    friend bool operator==(const SystemEquation&, const SystemEquation&) = default;
    friend auto operator<=>(const SystemEquation&, const SystemEquation&) = default;
};

struct LinearSystem {
    int t = 0;
    std::vector<SystemEquation> equations;  // sorted, deduplicated
};

LinearSystem system_for(const GridBijection& rho);
LinearSystem pair_system(const GridBijection& rho1, const GridBijection& rho2);

// An integer linear combination of the free variables of a solution;
// entry k is the coefficient of the k-th free parameter.
struct LinearForm {
    std::vector<Rational> coeffs;
    bool is_integral() const;
    bool has_negative() const;
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

struct ParametricSolution {
    int t = 0;
    // c-indices (in 2..t) kept as free parameters, ascending.
    std::vector<int> free_indices;
    // forms[k] describes c_{k+1} for k in 0..t-2 (c_1 = 0 is implicit):
    // coefficients over the free parameters, in free_indices order.
    std::vector<LinearForm> forms;
    // c-indices whose forms carried a negative coefficient; nonnegativity
    // then forces extra equations downstream.
    std::vector<int> constrained_indices;

    bool has_constraints() const { return !constrained_indices.empty(); }
    const LinearForm& form_for(int c_index) const;
    // Per-parameter factors that make every form integral when the k-th
    // parameter is replaced by scale[k] times a fresh integer parameter.
    std::vector<long long> integral_scales() const;
};

// Gaussian elimination over the rationals. Pivots are chosen on the
// highest-index variables first, so the free parameters are the lowest
// available indices.
ParametricSolution solve_parametric(const LinearSystem& sys);

struct ForcedZeroEvent {
    int c_index = 0;       // form that carried a negative coefficient
    LinearForm form;       // the offending form, pre-forcing
};

// Repeatedly forces negative-coefficient forms to zero and re-solves,
// at most once per original parameter.
struct ResolvedSolution {
    ParametricSolution solution;
    std::vector<ForcedZeroEvent> forced;
};
ResolvedSolution resolve_nonnegative(const LinearSystem& sys);

// Smallest power of ten exceeding t * max|coefficient| * parameter count.
long long recommended_base(const ParametricSolution& sol);

// Substitutes parameter k (1-based, ascending index order) by base^k after
// integral rescaling. Values are returned in c-index order, value[0] = c_1 = 0.
// Distinct forms receive distinct values for any base at or above the
// recommended one.
std::vector<long long> generic_instance(const ParametricSolution& sol, long long base);

// True when the two reconstructed factor pairs agree as unordered pairs of
// canonical polynomials. Throws if either reconstruction fails.
bool equivalent_under(const std::vector<ExponentVector>& c, const GridBijection& rho1,
                      const GridBijection& rho2);

// Univariate helper: wraps integer exponents as length-1 vectors.
std::vector<ExponentVector> to_exponent_vectors(const std::vector<long long>& values);

}  // namespace nfactor
