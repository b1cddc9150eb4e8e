#pragma once

#include <set>
#include <string>
#include <vector>

#include "nfactor/factorizer.hpp"
#include "nfactor/gridorder.hpp"
#include "nfactor/solver.hpp"

namespace nfactor {

bool is_prime(long long n);

// ---- classification ------------------------------------------------------

struct ClassifyOptions {
    int cap = 10;  // composite term counts above this are rejected; primes are free
    long long family_bound = 24;
    std::size_t threads = 1;
};

struct ShapeReport {
    GridShape shape;
    bool symmetric = false;
    std::size_t bijection_count = 0;
};

struct PairVerdict {
    GridShape shape;
    int case1 = 0;  // 1-based indices into the shape's bijection table
    int case2 = 0;
    // Factor pairs compared as symbolic forms over the solved system,
    // before the nonnegativity analysis; this is the count the case
    // analyses report.
    bool pre_equivalent = true;
    // After forcing sign-constrained parameters and refining the factors
    // completely.
    bool post_equivalent = true;
    std::size_t free_params = 0;
    std::vector<long long> generic_values;
    ParametricSolution solution;  // after nonnegativity resolution
    std::vector<ForcedZeroEvent> forced;
    // Forms of the two-term factor exponent c_{rho(2,1)} under either
    // bijection, before any forcing; used for the case bookkeeping.
    LinearForm left_form1, left_form2;
    std::vector<int> pre_free_indices;
};

struct FamilyGroup {
    enum class Kind { ScaledIdentity, TwoParameter };
    Kind kind = Kind::ScaledIdentity;
    // ScaledIdentity: the gcd-normalised exponent multiset; TwoParameter:
    // the smallest instance on which the two factorizations differ.
    std::vector<long long> identity;
    // The two factor pairs at that instance, each factor as a sorted
    // exponent list.
    std::vector<std::vector<long long>> factor_pair_1;
    std::vector<std::vector<long long>> factor_pair_2;
    // TwoParameter: a representative solution plus its bounded instances.
    ParametricSolution representative;
    std::set<std::vector<long long>> instances;
    std::vector<std::pair<int, int>> members;  // (case1, case2) combinations
};

struct SpecializationRecord {
    int case1 = 0;
    int case2 = 0;
    std::vector<long long> identity;
    std::size_t family_index = 0;  // index into ClassificationReport::families
};

struct ClassificationReport {
    int t = 0;
    bool unique = true;
    std::string note;
    std::vector<ShapeReport> shapes;
    std::vector<PairVerdict> pairs;
    std::size_t pre_inequivalent_count = 0;
    std::size_t post_inequivalent_count = 0;
    std::vector<FamilyGroup> families;
    std::vector<SpecializationRecord> specializations;
};

ClassificationReport classify(int t, const ClassifyOptions& options = {});

// All nonnegative-integer instances of a solution with every value at most
// `bound`, each as a sorted exponent vector.
std::set<std::vector<long long>> bounded_instances(const ParametricSolution& sol, long long bound);

// ---- exhaustive scan ------------------------------------------------------

struct ScanOptions {
    long long budget = 2'000'000;
    std::size_t threads = 1;
    FactorizerOptions factorizer;
};

struct ScanHit {
    std::vector<long long> exponents;  // sorted, first entry 0
    std::size_t factorization_count = 0;
};

std::vector<ScanHit> exhaustive_scan(int t, long long max_exp, const ScanOptions& options = {});

// ---- reference data from the classification theorems ----------------------

std::vector<long long> family_f1(long long a, long long b);
std::vector<long long> family_f2(long long a, long long b);
std::vector<long long> family_t6(long long b);
const std::vector<long long>& sporadic_identity(int which);  // 1..3

// Factor pairs for the reference families, each factor as an exponent list.
struct FactorPairPattern {
    std::vector<long long> left1, right1;
    std::vector<long long> left2, right2;
};
FactorPairPattern family_f1_pairs(long long a, long long b);
FactorPairPattern family_f2_pairs(long long a, long long b);
FactorPairPattern family_t6_pairs(long long b);
FactorPairPattern sporadic_pairs(int which, long long scale);

std::set<std::vector<long long>> reference_instances_f1(long long bound);
std::set<std::vector<long long>> reference_instances_f2(long long bound);
std::set<std::vector<long long>> reference_instances_sporadic(int which, long long bound);
std::set<std::vector<long long>> reference_instances_t6(long long bound);
// Union of all known non-unique exponent multisets for the given term
// count within the exponent bound; empty for term counts with unique
// factorization.
std::set<std::vector<long long>> known_nonunique_instances(int t, long long bound);

// ---- witness verification --------------------------------------------------

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
};

VerifyReport verify_known_cases();

}  // namespace nfactor
