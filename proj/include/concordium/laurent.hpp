#ifndef CONCORDIUM_LAURENT_HPP
#define CONCORDIUM_LAURENT_HPP

// Exact arithmetic in the two-variable Laurent ring Z[t1^{+-1}, t2^{+-1}],
// with a canonical representative for equality up to units +-t1^a t2^b.

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace concordium {

using BigInt = boost::multiprecision::cpp_int;

// Exponent pair (power of t1, power of t2). std::pair compares
// lexicographically, which is the term order used throughout.
using ExpPair = std::pair<int, int>;

struct Term {
    BigInt coeff;
    int exp1 = 0;
    int exp2 = 0;
};

// A Laurent polynomial stored as an ordered term map keyed by exponent
// pair. Zero coefficients are never materialized; the zero polynomial is
// the empty map. Values are immutable in spirit: all operations below are
// pure and return fresh polynomials.
class LaurentPoly {
public:
    using TermMap = std::map<ExpPair, BigInt>;

    LaurentPoly() = default;  // zero

    static LaurentPoly constant(BigInt c);
    static LaurentPoly monomial(BigInt c, int e1, int e2);
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly t1() { return monomial(1, 1, 0); }
    static LaurentPoly t2() { return monomial(1, 0, 1); }

    // Collects duplicates and drops zeros, in any input order.
    static LaurentPoly from_terms(const std::vector<Term>& terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

private:
    void add_term(const ExpPair& e, const BigInt& c);

    TermMap terms_;
};

// Canonical representative of the unit orbit {+-t1^a t2^b * p}: shifts
// exponents so the minimal exp1 and minimal exp2 over all terms are both
// zero, then flips the global sign so the coefficient of the
// lexicographically smallest exponent pair is positive. Idempotent;
// normalize(0) = 0.
LaurentPoly normalize_up_to_units(const LaurentPoly& p);

// True iff p is a single term with coefficient +-1.
bool is_unit(const LaurentPoly& p);

// Equality modulo multiplication by units +-t1^a t2^b.
bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q);

// Sum of all coefficients, i.e. evaluation at t1 = t2 = 1.
BigInt eval_at_ones(const LaurentPoly& p);

// Substitution t1 -> t1^{-1}, t2 -> t2^{-1}; an involution.
LaurentPoly invert_variables(const LaurentPoly& p);

// Rendering in descending lexicographic order, e.g. "-t1^2*t2 + 2*t1 - 1".
std::string to_string(const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace concordium

#endif
