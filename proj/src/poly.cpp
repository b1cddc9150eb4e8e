#include "nfactor/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace nfactor {

namespace {

constexpr long long kMaxParsedCoefficient = 100000;
constexpr std::size_t kMaxProductTerms = 10'000'000;

}  // namespace

ExponentVector::ExponentVector(std::vector<Exponent> entries) : entries_(std::move(entries)) {
    for (Exponent e : entries_) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e > kMaxExponent) throw std::overflow_error("exponent above cap");
    }
}

ExponentVector ExponentVector::zeros(int var_count) {
    return ExponentVector(std::vector<Exponent>(static_cast<std::size_t>(var_count), 0));
}

bool ExponentVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Exponent e) { return e == 0; });
}

Exponent ExponentVector::degree() const {
    return std::accumulate(entries_.begin(), entries_.end(), Exponent{0});
}

ExponentVector ExponentVector::plus(const ExponentVector& other) const {
    if (size() != other.size()) throw std::invalid_argument("variable count mismatch");
    std::vector<Exponent> out(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out[i] = checked_exponent_add(entries_[i], other.entries_[i]);
    }
    return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::minus(const ExponentVector& other) const {
    if (size() != other.size()) throw std::invalid_argument("variable count mismatch");
    std::vector<Exponent> out(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < other.entries_[i]) {
            throw std::invalid_argument("subtraction would produce a negative exponent");
        }
        out[i] = entries_[i] - other.entries_[i];
    }
    return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::min_with(const ExponentVector& other) const {
    if (size() != other.size()) throw std::invalid_argument("variable count mismatch");
    std::vector<Exponent> out(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out[i] = std::min(entries_[i], other.entries_[i]);
    }
    return ExponentVector(std::move(out));
}

bool ExponentVector::dominates(const ExponentVector& other) const {
    if (size() != other.size()) throw std::invalid_argument("variable count mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < other.entries_[i]) return false;
    }
    return true;
}

bool grlex_less(const ExponentVector& a, const ExponentVector& b) {
    Exponent da = a.degree();
    Exponent db = b.degree();
    if (da != db) return da < db;
    return a.entries() < b.entries();
}

SparsePoly::SparsePoly(int var_count, std::vector<ExponentVector> terms)
    : var_count_(var_count), terms_(std::move(terms)) {
    if (var_count < 0) throw std::invalid_argument("negative variable count");
    for (const auto& t : terms_) {
        if (t.size() != var_count_) {
            throw std::invalid_argument("term length does not match variable count");
        }
    }
}

SparsePoly SparsePoly::zero(int var_count) { return SparsePoly(var_count, {}); }

SparsePoly SparsePoly::one(int var_count) {
    return SparsePoly(var_count, {ExponentVector::zeros(var_count)});
}

SparsePoly SparsePoly::monomial(ExponentVector exponents) {
    int m = exponents.size();
    return SparsePoly(m, {std::move(exponents)});
}

SparsePoly SparsePoly::constant(int var_count, long long k) {
    if (k < 0) throw std::invalid_argument("negative constant");
    std::vector<ExponentVector> terms(static_cast<std::size_t>(k),
                                      ExponentVector::zeros(var_count));
    return SparsePoly(var_count, std::move(terms));
}

bool SparsePoly::is_normalized() const {
    for (std::size_t i = 1; i < terms_.size(); ++i) {
        if (grlex_less(terms_[i], terms_[i - 1])) return false;
    }
    return true;
}

bool SparsePoly::is_primitive() const {
    if (terms_.empty()) return false;
    ExponentVector m = terms_[0];
    for (std::size_t i = 1; i < terms_.size(); ++i) m = m.min_with(terms_[i]);
    return m.is_zero();
}

SparsePoly normalize(const SparsePoly& p) {
    std::vector<ExponentVector> terms = p.terms();
    std::stable_sort(terms.begin(), terms.end(), grlex_less);
    return SparsePoly(p.var_count(), std::move(terms));
}

SparsePoly multiply(const SparsePoly& s, const SparsePoly& t) {
    if (s.var_count() != t.var_count()) {
        throw std::invalid_argument("variable count mismatch in product");
    }
    if (s.term_count() * t.term_count() > kMaxProductTerms) {
        throw CapExceeded("product would have too many terms");
    }
    std::vector<ExponentVector> terms;
    terms.reserve(s.term_count() * t.term_count());
    for (const auto& a : s.terms()) {
        for (const auto& b : t.terms()) {
            terms.push_back(a.plus(b));
        }
    }
    return normalize(SparsePoly(s.var_count(), std::move(terms)));
}

std::pair<ExponentVector, SparsePoly> strip_content(const SparsePoly& p) {
    if (p.empty()) throw std::invalid_argument("cannot strip content of empty polynomial");
    ExponentVector content = p.terms()[0];
    for (std::size_t i = 1; i < p.term_count(); ++i) {
        content = content.min_with(p.terms()[i]);
    }
    std::vector<ExponentVector> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) terms.push_back(t.minus(content));
    return {content, SparsePoly(p.var_count(), std::move(terms))};
}

SparsePoly project(const SparsePoly& p, int j) {
    if (j < 1 || j > p.var_count()) throw std::out_of_range("variable index out of range");
    std::vector<ExponentVector> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        terms.push_back(ExponentVector(std::vector<Exponent>{t[j - 1]}));
    }
    return SparsePoly(1, std::move(terms));
}

std::vector<SparsePoly> project_all(const SparsePoly& p) {
    std::vector<SparsePoly> out;
    out.reserve(static_cast<std::size_t>(p.var_count()));
    for (int j = 1; j <= p.var_count(); ++j) out.push_back(project(p, j));
    return out;
}

SparsePoly reciprocal(const SparsePoly& p) {
    if (p.var_count() != 1) throw std::invalid_argument("reciprocal requires a univariate polynomial");
    if (p.empty()) return p;
    Exponent top = 0;
    for (const auto& t : p.terms()) top = std::max(top, t[0]);
    std::vector<ExponentVector> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        terms.push_back(ExponentVector(std::vector<Exponent>{top - t[0]}));
    }
    return normalize(SparsePoly(1, std::move(terms)));
}

SparsePoly with_var_count(const SparsePoly& p, int var_count) {
    if (var_count < 0) throw std::invalid_argument("negative variable count");
    std::vector<ExponentVector> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        std::vector<Exponent> entries(static_cast<std::size_t>(var_count), 0);
        for (int j = 0; j < t.size(); ++j) {
            if (t[j] == 0) continue;
            if (j >= var_count) {
                throw std::invalid_argument("cannot drop a variable that is in use");
            }
            entries[static_cast<std::size_t>(j)] = t[j];
        }
        terms.push_back(ExponentVector(std::move(entries)));
    }
    return SparsePoly(var_count, std::move(terms));
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    long long parse_int(const char* what) {
        skip_ws();
        std::size_t start = pos;
        long long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > kMaxExponent) fail(std::string(what) + " too large");
            ++pos;
        }
        if (pos == start) fail(std::string("expected ") + what);
        return value;
    }

    // factor := var ['^' nonneg-int]; var := 'X' [index]
    void parse_factor(std::map<int, Exponent>& exps, int& max_var) {
        skip_ws();
        if (peek() != 'X' && peek() != 'x') fail("expected variable");
        ++pos;
        int index = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            long long idx = parse_int("variable index");
            if (idx < 1 || idx > 64) fail("variable index out of range");
            index = static_cast<int>(idx);
        }
        Exponent e = 1;
        if (peek() == '^') {
            ++pos;
            e = parse_int("exponent");
        }
        Exponent& slot = exps[index];
        slot = checked_exponent_add(slot, e);
        max_var = std::max(max_var, index);
    }

    // term := [coeff '*'] factor ('*' factor)* | coeff
    void parse_term(std::vector<std::map<int, Exponent>>& terms, int& max_var) {
        skip_ws();
        if (peek() == '-') fail("negative coefficients are not representable");
        long long coeff = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_int("coefficient");
            saw_coeff = true;
            if (coeff == 0) fail("zero coefficient");
            if (coeff > kMaxParsedCoefficient) fail("coefficient too large");
        }
        std::map<int, Exponent> exps;
        bool saw_factor = false;
        if (!saw_coeff) {
            parse_factor(exps, max_var);
            saw_factor = true;
        }
        while (peek() == '*') {
            ++pos;
            parse_factor(exps, max_var);
            saw_factor = true;
        }
        if (!saw_coeff && !saw_factor) fail("expected term");
        for (long long i = 0; i < coeff; ++i) terms.push_back(exps);
    }
};

}  // namespace

SparsePoly parse_poly(std::string_view text) {
    Parser parser{text};
    std::vector<std::map<int, Exponent>> raw_terms;
    int max_var = 0;

    if (parser.at_end()) throw ParseError("empty polynomial", 0);
    parser.parse_term(raw_terms, max_var);
    while (!parser.at_end()) {
        char c = parser.peek();
        if (c == '+') {
            ++parser.pos;
            parser.parse_term(raw_terms, max_var);
        } else if (c == '-') {
            parser.fail("negative coefficients are not representable");
        } else {
            parser.fail("unexpected character");
        }
    }

    std::vector<ExponentVector> terms;
    terms.reserve(raw_terms.size());
    for (const auto& exps : raw_terms) {
        std::vector<Exponent> entries(static_cast<std::size_t>(max_var), 0);
        for (const auto& [index, e] : exps) entries[static_cast<std::size_t>(index - 1)] = e;
        terms.push_back(ExponentVector(std::move(entries)));
    }
    return normalize(SparsePoly(max_var, std::move(terms)));
}

namespace {

std::string format_monomial(const ExponentVector& t, const std::vector<std::string>& names) {
    std::ostringstream out;
    bool first = true;
    for (int j = 0; j < t.size(); ++j) {
        if (t[j] == 0) continue;
        if (!first) out << "*";
        out << names[static_cast<std::size_t>(j)];
        if (t[j] >= 2) out << "^" << t[j];
        first = false;
    }
    return out.str();
}

std::string format_impl(const SparsePoly& p, const std::vector<std::string>& names) {
    if (p.empty()) return "0";
    SparsePoly q = normalize(p);
    std::ostringstream out;
    bool first_term = true;
    std::size_t i = 0;
    while (i < q.term_count()) {
        std::size_t j = i;
        while (j < q.term_count() && q.terms()[j] == q.terms()[i]) ++j;
        std::size_t coeff = j - i;
        if (!first_term) out << " + ";
        std::string mono = format_monomial(q.terms()[i], names);
        if (mono.empty()) {
            out << coeff;
        } else if (coeff == 1) {
            out << mono;
        } else {
            out << coeff << "*" << mono;
        }
        first_term = false;
        i = j;
    }
    return out.str();
}

}  // namespace

std::string format_poly(const SparsePoly& p) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(p.var_count()));
    for (int j = 1; j <= p.var_count(); ++j) {
        names.push_back(p.var_count() == 1 ? "X" : "X" + std::to_string(j));
    }
    return format_impl(p, names);
}

std::string format_poly_with_names(const SparsePoly& p, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) < p.var_count()) {
        throw std::invalid_argument("not enough variable names");
    }
    return format_impl(p, names);
}

}  // namespace nfactor
