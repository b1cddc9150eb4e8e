#pragma once

#include <stdexcept>
#include <string>

namespace nfactor {

// Hard limit for a single exponent entry; additions beyond it fail loudly.
inline constexpr long long kMaxExponent = (1LL << 31) - 1;

class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Raised when the brute-force search finds more than one irreducible
// factorisation of a connected graph with loops under the Cartesian or
// strong product. Uniqueness in that setting is an open question, so the
// situation is reported instead of silently picking one.
class AmbiguousGraphFactorization : public std::runtime_error {
public:
    explicit AmbiguousGraphFactorization(const std::string& what)
        : std::runtime_error(what) {}
};

inline long long checked_exponent_add(long long a, long long b) {
    long long r = a + b;
    if (r > kMaxExponent) {
        throw std::overflow_error("exponent overflow: " + std::to_string(a) + " + " +
                                  std::to_string(b));
    }
    return r;
}

}  // namespace nfactor
