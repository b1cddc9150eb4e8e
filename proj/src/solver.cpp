#include "nfactor/solver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nfactor {

namespace {

long long checked_ll(__int128 v, const char* what) {
    if (v > static_cast<__int128>(9'223'372'036'854'775'807LL) ||
        v < -static_cast<__int128>(9'223'372'036'854'775'807LL)) {
        throw std::overflow_error(what);
    }
    return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return Rational(checked_ll(n, "rational overflow"), checked_ll(d, "rational overflow"));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return Rational(checked_ll(n, "rational overflow"), checked_ll(d, "rational overflow"));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero");
    return *this * Rational(o.den_, o.num_);
}

std::optional<ReconstructionResult> reconstruct_factors(const std::vector<ExponentVector>& c,
                                                        const GridBijection& rho) {
    const GridShape& shape = rho.shape();
    if (static_cast<int>(c.size()) != shape.cell_count()) {
        throw std::invalid_argument("term count does not match grid shape");
    }
    auto at = [&](int i, int j) -> const ExponentVector& {
        return c[static_cast<std::size_t>(rho.position(i, j) - 1)];
    };

    // First column and first row determine the factors up to a shift that
    // primitivity of both factors pins down.
    ExponentVector shift_a = at(1, 1);
    for (int i = 2; i <= shape.r; ++i) shift_a = shift_a.min_with(at(i, 1));
    ExponentVector shift_b = at(1, 1);
    for (int j = 2; j <= shape.s; ++j) shift_b = shift_b.min_with(at(1, j));
    if (shift_a.plus(shift_b) != at(1, 1)) return std::nullopt;

    ReconstructionResult result;
    result.a.reserve(static_cast<std::size_t>(shape.r));
    result.b.reserve(static_cast<std::size_t>(shape.s));
    for (int i = 1; i <= shape.r; ++i) result.a.push_back(at(i, 1).minus(shift_a));
    for (int j = 1; j <= shape.s; ++j) result.b.push_back(at(1, j).minus(shift_b));

    for (int i = 1; i <= shape.r; ++i) {
        for (int j = 1; j <= shape.s; ++j) {
            if (result.a[static_cast<std::size_t>(i - 1)].plus(
                    result.b[static_cast<std::size_t>(j - 1)]) != at(i, j)) {
                return std::nullopt;
            }
        }
    }
    return result;
}

LinearSystem system_for(const GridBijection& rho) {
    const GridShape& shape = rho.shape();
    LinearSystem sys;
    sys.t = shape.cell_count();
    for (int i = 2; i <= shape.r; ++i) {
        for (int j = 2; j <= shape.s; ++j) {
            int p = rho.position(i, 1);
            int q = rho.position(1, j);
            sys.equations.push_back(SystemEquation{rho.position(i, j), std::min(p, q), std::max(p, q)});
        }
    }
    std::sort(sys.equations.begin(), sys.equations.end());
    return sys;
}

LinearSystem pair_system(const GridBijection& rho1, const GridBijection& rho2) {
    if (rho1.term_count() != rho2.term_count()) {
        throw std::invalid_argument("bijections target different term counts");
    }
    LinearSystem s1 = system_for(rho1);
    LinearSystem s2 = system_for(rho2);
    std::set<SystemEquation> merged(s1.equations.begin(), s1.equations.end());
    merged.insert(s2.equations.begin(), s2.equations.end());
    LinearSystem sys;
    sys.t = s1.t;
    sys.equations.assign(merged.begin(), merged.end());
    return sys;
}

bool LinearForm::is_integral() const {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const Rational& r) { return r.is_integer(); });
}

bool LinearForm::has_negative() const {
    return std::any_of(coeffs.begin(), coeffs.end(),
                       [](const Rational& r) { return r.is_negative(); });
}

const LinearForm& ParametricSolution::form_for(int c_index) const {
    if (c_index < 2 || c_index > t) throw std::out_of_range("c index out of range");
    return forms[static_cast<std::size_t>(c_index - 2)];
}

std::vector<long long> ParametricSolution::integral_scales() const {
    std::vector<long long> scales(free_indices.size(), 1);
    for (const LinearForm& f : forms) {
        for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
            scales[k] = std::lcm(scales[k], f.coeffs[k].den());
        }
    }
    return scales;
}

namespace {

// Row over variables c_2..c_t (column v represents c_{v+2}).
using Row = std::vector<Rational>;

ParametricSolution solve_rows(int t, std::vector<Row> rows) {
    int vars = t - 1;
    // Eliminate on the highest-index variable first so that free parameters
    // end up at the lowest indices, matching how the case analyses choose
    // their parameters.
    std::vector<int> pivot_row_of(static_cast<std::size_t>(vars), -1);
    std::size_t used = 0;
    for (int col = vars - 1; col >= 0; --col) {
        std::size_t pivot = used;
        while (pivot < rows.size() && rows[pivot][static_cast<std::size_t>(col)].is_zero()) {
            ++pivot;
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[used], rows[pivot]);
        Rational lead = rows[used][static_cast<std::size_t>(col)];
        for (auto& x : rows[used]) x = x / lead;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == used) continue;
            Rational factor = rows[r][static_cast<std::size_t>(col)];
            if (factor.is_zero()) continue;
            for (int cc = 0; cc < vars; ++cc) {
                rows[r][static_cast<std::size_t>(cc)] =
                    rows[r][static_cast<std::size_t>(cc)] -
                    factor * rows[used][static_cast<std::size_t>(cc)];
            }
        }
        pivot_row_of[static_cast<std::size_t>(col)] = static_cast<int>(used);
        ++used;
    }

    ParametricSolution sol;
    sol.t = t;
    for (int col = 0; col < vars; ++col) {
        if (pivot_row_of[static_cast<std::size_t>(col)] < 0) sol.free_indices.push_back(col + 2);
    }
    std::size_t param_count = sol.free_indices.size();

    sol.forms.resize(static_cast<std::size_t>(vars));
    for (int col = 0; col < vars; ++col) {
        LinearForm form;
        form.coeffs.assign(param_count, Rational(0));
        int pr = pivot_row_of[static_cast<std::size_t>(col)];
        if (pr < 0) {
            for (std::size_t k = 0; k < param_count; ++k) {
                if (sol.free_indices[k] == col + 2) form.coeffs[k] = Rational(1);
            }
        } else {
            // pivot row: c_col + sum(coef * c_free) = 0
            for (std::size_t k = 0; k < param_count; ++k) {
                int free_col = sol.free_indices[k] - 2;
                form.coeffs[k] =
                    -rows[static_cast<std::size_t>(pr)][static_cast<std::size_t>(free_col)];
            }
        }
        sol.forms[static_cast<std::size_t>(col)] = form;
    }

    for (int col = 0; col < vars; ++col) {
        if (sol.forms[static_cast<std::size_t>(col)].has_negative()) {
            sol.constrained_indices.push_back(col + 2);
        }
    }
    return sol;
}

std::vector<Row> rows_from_equations(const LinearSystem& sys) {
    int vars = sys.t - 1;
    std::vector<Row> rows;
    rows.reserve(sys.equations.size());
    for (const SystemEquation& eq : sys.equations) {
        if (eq.k < 2 || eq.k > sys.t || eq.p < 2 || eq.p > sys.t || eq.q < 2 || eq.q > sys.t) {
            throw std::invalid_argument("equation index out of range");
        }
        Row row(static_cast<std::size_t>(vars), Rational(0));
        row[static_cast<std::size_t>(eq.k - 2)] = row[static_cast<std::size_t>(eq.k - 2)] + Rational(1);
        row[static_cast<std::size_t>(eq.p - 2)] = row[static_cast<std::size_t>(eq.p - 2)] - Rational(1);
        row[static_cast<std::size_t>(eq.q - 2)] = row[static_cast<std::size_t>(eq.q - 2)] - Rational(1);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

ParametricSolution solve_parametric(const LinearSystem& sys) {
    if (sys.t < 1) throw std::invalid_argument("system needs t >= 1");
    return solve_rows(sys.t, rows_from_equations(sys));
}

ResolvedSolution resolve_nonnegative(const LinearSystem& sys) {
    std::vector<Row> rows = rows_from_equations(sys);
    ResolvedSolution out;
    out.solution = solve_rows(sys.t, rows);
    std::size_t max_iterations = out.solution.free_indices.size() + 1;
    for (std::size_t iter = 0; iter < max_iterations && out.solution.has_constraints(); ++iter) {
        // Force each offending form to zero: its value is a nonnegative
        // integer, and in the cases encountered here the negative part has
        // no way to be balanced (the "forced to be 0" situation).
        for (int c_index : out.solution.constrained_indices) {
            const LinearForm& form = out.solution.form_for(c_index);
            Row row(static_cast<std::size_t>(sys.t - 1), Rational(0));
            for (std::size_t k = 0; k < form.coeffs.size(); ++k) {
                int col = out.solution.free_indices[k] - 2;
                row[static_cast<std::size_t>(col)] = form.coeffs[k];
            }
            rows.push_back(std::move(row));
            out.forced.push_back(ForcedZeroEvent{c_index, form});
        }
        out.solution = solve_rows(sys.t, rows);
    }
    if (out.solution.has_constraints()) {
        throw std::logic_error("constraint propagation did not converge");
    }
    return out;
}

long long recommended_base(const ParametricSolution& sol) {
    std::vector<long long> scales = sol.integral_scales();
    long long max_coeff = 1;
    for (const LinearForm& f : sol.forms) {
        for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
            Rational scaled = f.coeffs[k] * Rational(scales[k]);
            long long mag = scaled.num() < 0 ? -scaled.num() : scaled.num();
            max_coeff = std::max(max_coeff, mag);
        }
    }
    long long params = std::max<long long>(1, static_cast<long long>(sol.free_indices.size()));
    long long bound = static_cast<long long>(sol.t) * max_coeff * params;
    long long base = 10;
    while (base <= bound) base *= 10;
    return base;
}

std::vector<long long> generic_instance(const ParametricSolution& sol, long long base) {
    if (sol.has_constraints()) {
        throw std::invalid_argument("solution still carries sign constraints");
    }
    if (base < 2) throw std::invalid_argument("base must be at least 2");
    std::vector<long long> scales = sol.integral_scales();
    std::vector<long long> param_values(sol.free_indices.size(), 0);
    long long power = 1;
    for (std::size_t k = 0; k < param_values.size(); ++k) {
        power = checked_ll(static_cast<__int128>(power) * base, "generic base overflow");
        param_values[k] = checked_ll(static_cast<__int128>(scales[k]) * power,
                                     "generic parameter overflow");
    }

    std::vector<long long> values(static_cast<std::size_t>(sol.t), 0);
    for (int c_index = 2; c_index <= sol.t; ++c_index) {
        const LinearForm& form = sol.form_for(c_index);
        __int128 acc = 0;
        for (std::size_t k = 0; k < form.coeffs.size(); ++k) {
            // coeff * scale is integral by construction of the scales
            Rational scaled = form.coeffs[k] * Rational(scales[k]);
            acc += static_cast<__int128>(scaled.num()) * (param_values[k] / scales[k]);
        }
        long long v = checked_ll(acc, "generic value overflow");
        if (v < 0) throw std::logic_error("generic instance produced a negative exponent");
        values[static_cast<std::size_t>(c_index - 1)] = v;
    }
    return values;
}

bool equivalent_under(const std::vector<ExponentVector>& c, const GridBijection& rho1,
                      const GridBijection& rho2) {
    auto r1 = reconstruct_factors(c, rho1);
    auto r2 = reconstruct_factors(c, rho2);
    if (!r1 || !r2) throw std::invalid_argument("reconstruction failed for a bijection");

    auto factor_pair = [](const ReconstructionResult& r) {
        int m = r.a.empty() ? 0 : r.a[0].size();
        SparsePoly sa = normalize(SparsePoly(m, r.a));
        SparsePoly sb = normalize(SparsePoly(m, r.b));
        std::string ka = format_poly(sa);
        std::string kb = format_poly(sb);
        if (kb < ka) std::swap(ka, kb);
        return std::pair<std::string, std::string>(ka, kb);
    };
    return factor_pair(*r1) == factor_pair(*r2);
}

std::vector<ExponentVector> to_exponent_vectors(const std::vector<long long>& values) {
    std::vector<ExponentVector> out;
    out.reserve(values.size());
    for (long long v : values) out.push_back(ExponentVector(std::vector<Exponent>{v}));
    return out;
}

}  // namespace nfactor
