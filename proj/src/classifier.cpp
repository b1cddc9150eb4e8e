#include "nfactor/classifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace nfactor {

namespace {

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t workers = std::min(threads, count);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

std::vector<long long> sorted_copy(std::vector<long long> v) {
    std::sort(v.begin(), v.end());
    return v;
}

SparsePoly poly_from_exponents(const std::vector<long long>& exps) {
    std::vector<ExponentVector> terms;
    terms.reserve(exps.size());
    for (long long e : exps) terms.push_back(ExponentVector(std::vector<Exponent>{e}));
    return normalize(SparsePoly(1, std::move(terms)));
}

// Complete refinements of the factorization a bijection induces at c.
std::set<std::vector<std::string>> refined_factorizations(const std::vector<ExponentVector>& c,
                                                          const GridBijection& rho,
                                                          FactorCache& cache) {
    auto rec = reconstruct_factors(c, rho);
    if (!rec) throw std::logic_error("reconstruction failed on a solved system");
    SparsePoly sa = normalize(SparsePoly(1, rec->a));
    SparsePoly sb = normalize(SparsePoly(1, rec->b));
    FactorizerOptions opts;
    opts.max_terms = std::max(sa.term_count(), sb.term_count());
    auto fa = all_factorizations(sa, cache, opts);
    auto fb = all_factorizations(sb, cache, opts);
    std::set<std::vector<std::string>> out;
    for (const auto& x : fa) {
        for (const auto& y : fb) {
            std::vector<std::string> keys = x.factor_keys();
            auto more = y.factor_keys();
            keys.insert(keys.end(), more.begin(), more.end());
            std::sort(keys.begin(), keys.end());
            out.insert(std::move(keys));
        }
    }
    return out;
}

using FormKey = std::vector<std::pair<long long, long long>>;

FormKey form_key(const LinearForm& form) {
    FormKey key;
    key.reserve(form.coeffs.size());
    for (const Rational& c : form.coeffs) key.emplace_back(c.num(), c.den());
    return key;
}

// Factor pair of a bijection as multisets of symbolic exponent forms.
std::vector<std::multiset<FormKey>> symbolic_factor_pair(const ParametricSolution& sol,
                                                         const GridBijection& rho) {
    FormKey zero(sol.free_indices.size(), {0, 1});
    auto side = [&](bool row_side) {
        std::multiset<FormKey> forms;
        const GridShape& shape = rho.shape();
        int extent = row_side ? shape.r : shape.s;
        for (int k = 1; k <= extent; ++k) {
            int pos = row_side ? rho.position(k, 1) : rho.position(1, k);
            forms.insert(pos == 1 ? zero : form_key(sol.form_for(pos)));
        }
        return forms;
    };
    std::vector<std::multiset<FormKey>> pair{side(true), side(false)};
    std::sort(pair.begin(), pair.end());
    return pair;
}

// Instance-level check on the true solution cone of a sign-constrained
// system: enumerates every nonnegative integer instance with values up to
// `bound` and looks for one whose refined factorizations differ.
bool has_inequivalent_instance(const ParametricSolution& sol, const GridBijection& b1,
                               const GridBijection& b2, long long bound) {
    std::size_t params = sol.free_indices.size();
    std::vector<long long> u(params, 0);
    bool found = false;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (found) return;
        if (k == params) {
            std::vector<long long> values{0};
            for (int idx = 2; idx <= sol.t; ++idx) {
                Rational acc(0);
                const LinearForm& form = sol.form_for(idx);
                for (std::size_t i = 0; i < params; ++i) {
                    acc = acc + form.coeffs[i] * Rational(u[i]);
                }
                if (!acc.is_integer() || acc.is_negative()) return;
                values.push_back(acc.num());
            }
            auto c = to_exponent_vectors(values);
            if (!equivalent_under(c, b1, b2)) {
                FactorCache cache;
                if (refined_factorizations(c, b1, cache) != refined_factorizations(c, b2, cache)) {
                    found = true;
                }
            }
            return;
        }
        for (long long v = 0; v <= bound && !found; ++v) {
            u[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return found;
}

std::vector<std::vector<long long>> factor_pair_exponents(const std::vector<ExponentVector>& c,
                                                          const GridBijection& rho) {
    auto rec = reconstruct_factors(c, rho);
    if (!rec) throw std::logic_error("reconstruction failed on a solved system");
    std::vector<long long> a, b;
    for (const auto& v : rec->a) a.push_back(v[0]);
    for (const auto& v : rec->b) b.push_back(v[0]);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<std::vector<long long>> pair{a, b};
    std::sort(pair.begin(), pair.end());
    return pair;
}

// First (in parameter-grid order) instance with values within the bound on
// which the two bijections give different factor pairs, in c-index order.
std::optional<std::vector<long long>> smallest_inequivalent_instance(
    const ParametricSolution& sol, const GridBijection& b1, const GridBijection& b2,
    long long bound) {
    std::size_t params = sol.free_indices.size();
    std::vector<long long> u(params, 0);
    std::optional<std::vector<long long>> found;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (found) return;
        if (k == params) {
            std::vector<long long> values{0};
            for (int idx = 2; idx <= sol.t; ++idx) {
                Rational acc(0);
                const LinearForm& form = sol.form_for(idx);
                for (std::size_t i = 0; i < params; ++i) {
                    acc = acc + form.coeffs[i] * Rational(u[i]);
                }
                if (!acc.is_integer() || acc.is_negative() || acc.num() > bound) return;
                values.push_back(acc.num());
            }
            if (!equivalent_under(to_exponent_vectors(values), b1, b2)) found = values;
            return;
        }
        for (long long v = 0; v <= bound && !found; ++v) {
            u[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return found;
}

}  // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::set<std::vector<long long>> bounded_instances(const ParametricSolution& sol, long long bound) {
    std::size_t params = sol.free_indices.size();
    if (params > 3) throw CapExceeded("too many free parameters for instance enumeration");
    std::set<std::vector<long long>> out;
    std::vector<long long> u(params, 0);

    auto emit = [&]() {
        std::vector<long long> values{0};
        for (int idx = 2; idx <= sol.t; ++idx) {
            const LinearForm& form = sol.form_for(idx);
            Rational acc(0);
            for (std::size_t k = 0; k < params; ++k) acc = acc + form.coeffs[k] * Rational(u[k]);
            if (!acc.is_integer() || acc.is_negative() || acc.num() > bound) return;
            values.push_back(acc.num());
        }
        out.insert(sorted_copy(values));
    };

    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == params) {
            emit();
            return;
        }
        for (long long v = 0; v <= bound; ++v) {
            u[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

ClassificationReport classify(int t, const ClassifyOptions& options) {
    if (t < 1) throw std::invalid_argument("term count must be positive");
    ClassificationReport report;
    report.t = t;

    if (t == 1) {
        report.note = "single term: monomials factor uniquely";
        return report;
    }
    if (is_prime(t)) {
        report.note = "prime term count: unique by the prime-count lemma";
        return report;
    }
    if (t > options.cap) {
        throw CapExceeded("classification cap " + std::to_string(options.cap) +
                          " below requested term count " + std::to_string(t));
    }

    struct PairTask {
        GridShape shape;
        const std::vector<GridBijection>* bijections;
        int i, j;
    };
    std::vector<PairTask> tasks;
    std::map<std::pair<int, int>, std::vector<GridBijection>> bijection_store;

    for (int r = 2; r * r <= t; ++r) {
        if (t % r != 0) continue;
        int s = t / r;
        GridShape shape{r, s};
        bool symmetric = (r == s);
        auto& bijections = bijection_store[{r, s}];
        bijections = enumerate_bijections(shape, symmetric);
        report.shapes.push_back(ShapeReport{shape, symmetric, bijections.size()});
        for (int i = 0; i < static_cast<int>(bijections.size()); ++i) {
            for (int j = i + 1; j < static_cast<int>(bijections.size()); ++j) {
                tasks.push_back(PairTask{shape, &bijections, i, j});
            }
        }
    }

    report.pairs.resize(tasks.size());
    parallel_for(tasks.size(), options.threads, [&](std::size_t idx) {
        const PairTask& task = tasks[idx];
        const GridBijection& b1 = (*task.bijections)[static_cast<std::size_t>(task.i)];
        const GridBijection& b2 = (*task.bijections)[static_cast<std::size_t>(task.j)];

        PairVerdict verdict;
        verdict.shape = task.shape;
        verdict.case1 = task.i + 1;
        verdict.case2 = task.j + 1;

        LinearSystem sys = pair_system(b1, b2);
        ParametricSolution first = solve_parametric(sys);
        verdict.left_form1 = first.form_for(b1.position(2, 1));
        verdict.left_form2 = first.form_for(b2.position(2, 1));
        verdict.pre_free_indices = first.free_indices;
        verdict.pre_equivalent = symbolic_factor_pair(first, b1) == symbolic_factor_pair(first, b2);

        ResolvedSolution resolved = resolve_nonnegative(sys);
        verdict.solution = resolved.solution;
        verdict.forced = resolved.forced;
        verdict.free_params = resolved.solution.free_indices.size();
        verdict.generic_values =
            generic_instance(resolved.solution, recommended_base(resolved.solution));

        auto c = to_exponent_vectors(verdict.generic_values);
        if (equivalent_under(c, b1, b2)) {
            verdict.post_equivalent = true;
        } else {
            FactorCache cache;
            verdict.post_equivalent =
                refined_factorizations(c, b1, cache) == refined_factorizations(c, b2, cache);
        }
        if (!verdict.pre_equivalent && !verdict.forced.empty() && verdict.post_equivalent) {
            // the sign analysis collapsed this pair; confirm on the actual
            // solution cone rather than only at the collapsed point
            if (has_inequivalent_instance(first, b1, b2, options.family_bound)) {
                verdict.post_equivalent = false;
            }
        }
        report.pairs[idx] = std::move(verdict);
    });

    for (const PairVerdict& v : report.pairs) {
        if (!v.pre_equivalent) ++report.pre_inequivalent_count;
        if (!v.post_equivalent) ++report.post_inequivalent_count;
    }
    report.unique = (report.post_inequivalent_count == 0);

    // Group the surviving non-equivalences into families.
    std::vector<std::size_t> two_param_order;
    std::vector<std::size_t> one_param_order;
    for (std::size_t idx = 0; idx < report.pairs.size(); ++idx) {
        const PairVerdict& v = report.pairs[idx];
        if (v.post_equivalent) continue;
        if (v.free_params >= 2) {
            two_param_order.push_back(idx);
        } else if (v.free_params == 1) {
            one_param_order.push_back(idx);
        } else {
            throw std::logic_error(
                "sign-constrained pair stayed inequivalent; family extraction unsupported");
        }
    }

    for (std::size_t idx : two_param_order) {
        const PairVerdict& v = report.pairs[idx];
        auto instances = bounded_instances(v.solution, options.family_bound);
        bool merged = false;
        for (FamilyGroup& fam : report.families) {
            if (fam.kind == FamilyGroup::Kind::TwoParameter && fam.instances == instances) {
                fam.members.emplace_back(v.case1, v.case2);
                merged = true;
                break;
            }
        }
        if (!merged) {
            FamilyGroup fam;
            fam.kind = FamilyGroup::Kind::TwoParameter;
            fam.representative = v.solution;
            fam.instances = std::move(instances);
            fam.members.emplace_back(v.case1, v.case2);
            const std::vector<GridBijection>& bijections = bijection_store[{v.shape.r, v.shape.s}];
            const GridBijection& b1 = bijections[static_cast<std::size_t>(v.case1 - 1)];
            const GridBijection& b2 = bijections[static_cast<std::size_t>(v.case2 - 1)];
            auto sample = smallest_inequivalent_instance(v.solution, b1, b2, options.family_bound);
            if (sample) {
                fam.identity = sorted_copy(*sample);
                auto c = to_exponent_vectors(*sample);
                fam.factor_pair_1 = factor_pair_exponents(c, b1);
                fam.factor_pair_2 = factor_pair_exponents(c, b2);
            }
            report.families.push_back(std::move(fam));
        }
    }

    for (std::size_t idx : one_param_order) {
        const PairVerdict& v = report.pairs[idx];
        long long g = 0;
        for (long long value : v.generic_values) g = std::gcd(g, value);
        if (g == 0) g = 1;
        std::vector<long long> identity;
        identity.reserve(v.generic_values.size());
        for (long long value : v.generic_values) identity.push_back(value / g);

        const std::vector<GridBijection>& bijections = bijection_store[{v.shape.r, v.shape.s}];
        auto c = to_exponent_vectors(identity);
        auto pair1 = factor_pair_exponents(c, bijections[static_cast<std::size_t>(v.case1 - 1)]);
        auto pair2 = factor_pair_exponents(c, bijections[static_cast<std::size_t>(v.case2 - 1)]);
        std::vector<long long> sorted_identity = sorted_copy(identity);

        std::size_t parent = report.families.size();
        for (std::size_t f = 0; f < report.families.size(); ++f) {
            const FamilyGroup& fam = report.families[f];
            if (fam.kind != FamilyGroup::Kind::TwoParameter) continue;
            long long needed = sorted_identity.back();
            if (needed <= options.family_bound
                    ? fam.instances.count(sorted_identity) > 0
                    : bounded_instances(fam.representative, needed).count(sorted_identity) > 0) {
                parent = f;
                break;
            }
        }
        if (parent < report.families.size()) {
            report.specializations.push_back(
                SpecializationRecord{v.case1, v.case2, sorted_identity, parent});
            report.families[parent].members.emplace_back(v.case1, v.case2);
            continue;
        }

        bool merged = false;
        for (FamilyGroup& fam : report.families) {
            if (fam.kind == FamilyGroup::Kind::ScaledIdentity && fam.identity == sorted_identity &&
                fam.factor_pair_1 == pair1 && fam.factor_pair_2 == pair2) {
                fam.members.emplace_back(v.case1, v.case2);
                merged = true;
                break;
            }
        }
        if (!merged) {
            FamilyGroup fam;
            fam.kind = FamilyGroup::Kind::ScaledIdentity;
            fam.identity = sorted_identity;
            fam.factor_pair_1 = pair1;
            fam.factor_pair_2 = pair2;
            fam.members.emplace_back(v.case1, v.case2);
            report.families.push_back(std::move(fam));
        }
    }

    return report;
}

std::vector<ScanHit> exhaustive_scan(int t, long long max_exp, const ScanOptions& options) {
    if (t < 1) throw std::invalid_argument("term count must be positive");
    if (max_exp < 0) throw std::invalid_argument("exponent bound must be nonnegative");

    // C(max_exp + t - 1, t - 1) nondecreasing exponent tuples
    __int128 count = 1;
    for (int k = 1; k <= t - 1; ++k) {
        count = count * (max_exp + k) / k;
        if (count > options.budget) {
            throw BudgetExceeded("scan would enumerate more tuples than the budget allows");
        }
    }

    std::vector<std::vector<long long>> tuples;
    tuples.reserve(static_cast<std::size_t>(count));
    std::vector<long long> current(static_cast<std::size_t>(t), 0);
    auto rec = [&](auto&& self, int pos, long long low) -> void {
        if (pos == t) {
            tuples.push_back(current);
            return;
        }
        for (long long e = low; e <= max_exp; ++e) {
            current[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, e);
        }
    };
    rec(rec, 1, 0);  // first exponent pinned to 0

    std::vector<std::size_t> counts(tuples.size(), 0);
    parallel_for(tuples.size(), options.threads, [&](std::size_t idx) {
        thread_local FactorCache cache;
        auto facs = all_factorizations(poly_from_exponents(tuples[idx]), cache, options.factorizer);
        counts[idx] = facs.size();
    });

    std::vector<ScanHit> hits;
    for (std::size_t idx = 0; idx < tuples.size(); ++idx) {
        if (counts[idx] >= 2) hits.push_back(ScanHit{tuples[idx], counts[idx]});
    }
    return hits;
}

// ---- reference data ---------------------------------------------------------

std::vector<long long> family_f1(long long a, long long b) {
    return {0, a, b, a + b, a + 2 * b, 3 * b, a + 3 * b, 4 * b, a + 4 * b, a + 5 * b};
}

std::vector<long long> family_f2(long long a, long long b) {
    return {0, a, b, a + b, 2 * b, 3 * b, a + 3 * b, 4 * b, a + 4 * b, 5 * b};
}

std::vector<long long> family_t6(long long b) { return {0, b, 2 * b, 3 * b, 4 * b, 5 * b}; }

const std::vector<long long>& sporadic_identity(int which) {
    static const std::vector<long long> s1{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    static const std::vector<long long> s2{0, 1, 4, 5, 6, 7, 8, 9, 12, 13};
    static const std::vector<long long> s3{0, 2, 3, 4, 5, 6, 7, 8, 9, 11};
    switch (which) {
        case 1: return s1;
        case 2: return s2;
        case 3: return s3;
        default: throw std::out_of_range("sporadic index must be 1..3");
    }
}

FactorPairPattern family_f1_pairs(long long a, long long b) {
    return FactorPairPattern{{0, 3 * b},
                             {0, a, b, a + b, a + 2 * b},
                             {0, b},
                             {0, a, a + 2 * b, 3 * b, a + 4 * b}};
}

FactorPairPattern family_f2_pairs(long long a, long long b) {
    return FactorPairPattern{{0, 3 * b},
                             {0, a, b, a + b, 2 * b},
                             {0, b},
                             {0, a, 2 * b, a + 3 * b, 4 * b}};
}

FactorPairPattern family_t6_pairs(long long b) {
    return FactorPairPattern{{0, 3 * b}, {0, b, 2 * b}, {0, b}, {0, 2 * b, 4 * b}};
}

FactorPairPattern sporadic_pairs(int which, long long scale) {
    FactorPairPattern p;
    switch (which) {
        case 1:
            p = FactorPairPattern{{0, 1}, {0, 2, 4, 6, 8}, {0, 5}, {0, 1, 2, 3, 4}};
            break;
        case 2:
            p = FactorPairPattern{{0, 1}, {0, 4, 6, 8, 12}, {0, 5}, {0, 1, 4, 7, 8}};
            break;
        case 3:
            p = FactorPairPattern{{0, 3}, {0, 2, 4, 6, 8}, {0, 5}, {0, 2, 3, 4, 6}};
            break;
        default:
            throw std::out_of_range("sporadic index must be 1..3");
    }
    for (auto* part : {&p.left1, &p.right1, &p.left2, &p.right2}) {
        for (long long& e : *part) e *= scale;
    }
    return p;
}

namespace {

long long max_of(const std::vector<long long>& v) {
    return *std::max_element(v.begin(), v.end());
}

std::set<std::vector<long long>> two_param_instances(
    const std::function<std::vector<long long>(long long, long long)>& family, long long bound) {
    std::set<std::vector<long long>> out;
    for (long long b = 0; 1 * b <= bound; ++b) {
        bool any_b = false;
        for (long long a = 0; a <= bound; ++a) {
            auto inst = family(a, b);
            if (max_of(inst) > bound) break;
            out.insert(sorted_copy(inst));
            any_b = true;
        }
        if (!any_b && b > 0) break;
    }
    return out;
}

}  // namespace

std::set<std::vector<long long>> reference_instances_f1(long long bound) {
    return two_param_instances(family_f1, bound);
}

std::set<std::vector<long long>> reference_instances_f2(long long bound) {
    return two_param_instances(family_f2, bound);
}

std::set<std::vector<long long>> reference_instances_sporadic(int which, long long bound) {
    std::set<std::vector<long long>> out;
    const auto& base = sporadic_identity(which);
    for (long long k = 1; k * base.back() <= bound; ++k) {
        std::vector<long long> inst;
        inst.reserve(base.size());
        for (long long e : base) inst.push_back(e * k);
        out.insert(std::move(inst));
    }
    return out;
}

std::set<std::vector<long long>> reference_instances_t6(long long bound) {
    std::set<std::vector<long long>> out;
    for (long long b = 1; 5 * b <= bound; ++b) out.insert(family_t6(b));
    return out;
}

std::set<std::vector<long long>> known_nonunique_instances(int t, long long bound) {
    std::set<std::vector<long long>> out;
    if (t == 6) {
        out = reference_instances_t6(bound);
    } else if (t == 10) {
        out = reference_instances_f1(bound);
        auto f2 = reference_instances_f2(bound);
        out.insert(f2.begin(), f2.end());
        for (int which = 1; which <= 3; ++which) {
            auto s = reference_instances_sporadic(which, bound);
            out.insert(s.begin(), s.end());
        }
    }
    return out;
}

// ---- witness verification ----------------------------------------------------

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

namespace {

std::string factorization_summary(const std::vector<Factorization>& facs) {
    std::ostringstream out;
    out << facs.size() << " factorization(s)";
    return out.str();
}

bool has_factor_pair(const std::vector<Factorization>& facs, const SparsePoly& f1,
                     const SparsePoly& f2) {
    std::vector<std::string> want{format_poly(normalize(f1)), format_poly(normalize(f2))};
    std::sort(want.begin(), want.end());
    for (const auto& fac : facs) {
        if (fac.factors.size() != 2) continue;
        std::vector<std::string> got = fac.factor_keys();
        std::sort(got.begin(), got.end());
        if (got == want) return true;
    }
    return false;
}

}  // namespace

VerifyReport verify_known_cases() {
    VerifyReport report;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        report.checks.push_back(VerifyCheck{name, pass, detail});
    };
    auto P = [](const char* text) { return parse_poly(text); };

    {
        SparsePoly lhs = multiply(P("1+X+X^2"), P("1+X^3"));
        SparsePoly rhs = multiply(P("1+X^2+X^4"), P("1+X"));
        SparsePoly expected = P("1+X+X^2+X^3+X^4+X^5");
        bool equal = (lhs == rhs) && (lhs == expected);
        auto facs = all_factorizations(expected);
        bool pairs_ok = facs.size() == 2 && has_factor_pair(facs, P("1+X+X^2"), P("1+X^3")) &&
                        has_factor_pair(facs, P("1+X^2+X^4"), P("1+X"));
        add("six-term identity", equal && pairs_ok, factorization_summary(facs));
    }
    {
        SparsePoly lhs = multiply(P("2+X+X^3"), P("2+X"));
        SparsePoly rhs = multiply(P("1+X"), P("4+X^2+X^3"));
        bool equal = (lhs == rhs) && lhs.term_count() == 12;
        auto facs = all_factorizations(lhs);
        bool pairs_ok = facs.size() == 2 && has_factor_pair(facs, P("2+X+X^3"), P("2+X")) &&
                        has_factor_pair(facs, P("1+X"), P("4+X^2+X^3"));
        add("twelve-term coefficient identity", equal && pairs_ok, factorization_summary(facs));
    }
    {
        SparsePoly lhs = multiply(P("1+X^3+X^5+X^6"), P("1+X+X^2+X^4"));
        SparsePoly rhs = multiply(multiply(P("1+X"), P("1+X^2")), P("1+2*X^4+X^7"));
        bool equal = (lhs == rhs) && lhs.term_count() == 16;
        auto facs = all_factorizations(lhs);
        std::set<std::size_t> lengths;
        for (const auto& f : facs) lengths.insert(f.factors.size());
        bool ok = facs.size() == 2 && lengths == std::set<std::size_t>{2, 3};
        add("sixteen-term identity, unequal lengths", equal && ok, factorization_summary(facs));
    }

    // The three fixed ten-term expansions.
    struct Sporadic {
        int which;
        const char* left1;
        const char* right1;
        const char* left2;
        const char* right2;
    };
    const Sporadic sporadics[] = {
        {1, "1+X", "1+X^2+X^4+X^6+X^8", "1+X^5", "1+X+X^2+X^3+X^4"},
        {2, "1+X", "1+X^4+X^6+X^8+X^12", "1+X^5", "1+X+X^4+X^7+X^8"},
        {3, "1+X^3", "1+X^2+X^4+X^6+X^8", "1+X^5", "1+X^2+X^3+X^4+X^6"},
    };
    for (const auto& s : sporadics) {
        SparsePoly lhs = multiply(P(s.left1), P(s.right1));
        SparsePoly rhs = multiply(P(s.left2), P(s.right2));
        SparsePoly expected = poly_from_exponents(sporadic_identity(s.which));
        bool equal = (lhs == rhs) && (lhs == expected);
        bool irr = is_irreducible(P(s.left1)) && is_irreducible(P(s.right1)) &&
                   is_irreducible(P(s.left2)) && is_irreducible(P(s.right2));
        auto facs = all_factorizations(expected);
        bool pairs_ok = facs.size() == 2 && has_factor_pair(facs, P(s.left1), P(s.right1)) &&
                        has_factor_pair(facs, P(s.left2), P(s.right2));
        bool self_reciprocal = (reciprocal(expected) == expected);
        add("ten-term expansion " + std::to_string(s.which),
            equal && irr && pairs_ok && self_reciprocal, factorization_summary(facs));
    }

    // The two 2-parameter families, sampled.
    auto pattern_poly = [](const std::vector<long long>& exps) { return poly_from_exponents(exps); };
    bool family_ok = true;
    std::string family_detail;
    for (long long b = 1; b <= 3 && family_ok; ++b) {
        for (long long a = 0; a <= 4 && family_ok; ++a) {
            for (int which = 1; which <= 2; ++which) {
                auto pairs = which == 1 ? family_f1_pairs(a, b) : family_f2_pairs(a, b);
                auto exps = which == 1 ? family_f1(a, b) : family_f2(a, b);
                SparsePoly lhs = multiply(pattern_poly(pairs.left1), pattern_poly(pairs.right1));
                SparsePoly rhs = multiply(pattern_poly(pairs.left2), pattern_poly(pairs.right2));
                SparsePoly prod = pattern_poly(exps);
                if (!(lhs == rhs) || !(lhs == prod)) {
                    family_ok = false;
                    family_detail = "family " + std::to_string(which) + " mismatch at a=" +
                                    std::to_string(a) + " b=" + std::to_string(b);
                    break;
                }
                auto facs = all_factorizations(prod);
                bool pairs_found = has_factor_pair(facs, pattern_poly(pairs.left1),
                                                   pattern_poly(pairs.right1)) &&
                                   has_factor_pair(facs, pattern_poly(pairs.left2),
                                                   pattern_poly(pairs.right2));
                if (!pairs_found || facs.size() < 2) {
                    family_ok = false;
                    family_detail = "family " + std::to_string(which) + " factor pairs missing";
                    break;
                }
            }
        }
    }
    add("two-parameter family identities", family_ok, family_detail);

    // Reciprocals of family instances stay within the two families.
    bool recip_ok = true;
    for (long long b = 1; b <= 3 && recip_ok; ++b) {
        for (long long a = 0; a <= 5 && recip_ok; ++a) {
            for (int which = 1; which <= 2; ++which) {
                auto exps = which == 1 ? family_f1(a, b) : family_f2(a, b);
                SparsePoly rec = reciprocal(poly_from_exponents(exps));
                std::vector<long long> rec_exps;
                for (const auto& term : rec.terms()) rec_exps.push_back(term[0]);
                std::sort(rec_exps.begin(), rec_exps.end());
                long long bound = rec_exps.back();
                bool member = reference_instances_f1(bound).count(rec_exps) > 0 ||
                              reference_instances_f2(bound).count(rec_exps) > 0;
                if (!member) recip_ok = false;
            }
        }
    }
    add("family reciprocals stay in the families", recip_ok, "");

    return report;
}

}  // namespace nfactor
