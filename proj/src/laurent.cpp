#include "concordium/laurent.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace concordium {

LaurentPoly LaurentPoly::constant(BigInt c) { return monomial(std::move(c), 0, 0); }

LaurentPoly LaurentPoly::monomial(BigInt c, int e1, int e2) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(ExpPair{e1, e2}, std::move(c));
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<Term>& terms) {
    LaurentPoly p;
    for (const Term& t : terms) p.add_term({t.exp1, t.exp2}, t.coeff);
    return p;
}

void LaurentPoly::add_term(const ExpPair& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly prod;
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_)
            prod.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return prod;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly neg;
    for (const auto& [e, c] : terms_) neg.terms_.emplace(e, -c);
    return neg;
}

LaurentPoly normalize_up_to_units(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    int min1 = std::numeric_limits<int>::max();
    int min2 = std::numeric_limits<int>::max();
    for (const auto& [e, c] : p.terms()) {
        min1 = std::min(min1, e.first);
        min2 = std::min(min2, e.second);
    }
    LaurentPoly::TermMap shifted;
    for (const auto& [e, c] : p.terms())
        shifted.emplace(ExpPair{e.first - min1, e.second - min2}, c);
    // Sign rule: the lexicographically smallest exponent pair gets a
    // positive coefficient.
    const bool flip = shifted.begin()->second < 0;
    std::vector<Term> out;
    out.reserve(shifted.size());
    for (const auto& [e, c] : shifted)
        out.push_back({flip ? BigInt(-c) : c, e.first, e.second});
    return LaurentPoly::from_terms(out);
}

bool is_unit(const LaurentPoly& p) {
    if (p.term_count() != 1) return false;
    const BigInt& c = p.terms().begin()->second;
    return c == 1 || c == -1;
}

bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q) {
    return normalize_up_to_units(p) == normalize_up_to_units(q);
}

BigInt eval_at_ones(const LaurentPoly& p) {
    BigInt sum = 0;
    for (const auto& [e, c] : p.terms()) sum += c;
    return sum;
}

LaurentPoly invert_variables(const LaurentPoly& p) {
    std::vector<Term> out;
    out.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) out.push_back({c, -e.first, -e.second});
    return LaurentPoly::from_terms(out);
}

namespace {

void render_term(std::ostream& os, const BigInt& c, int e1, int e2, bool first) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    const bool has_vars = e1 != 0 || e2 != 0;
    if (mag != 1 || !has_vars) {
        os << mag;
        if (has_vars) os << "*";
    }
    if (e1 != 0) {
        os << "t1";
        if (e1 != 1) os << "^" << e1;
        if (e2 != 0) os << "*";
    }
    if (e2 != 0) {
        os << "t2";
        if (e2 != 1) os << "^" << e2;
    }
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending lexicographic order reads like handwritten polynomials.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        render_term(os, it->second, it->first.first, it->first.second, first);
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << to_string(p);
}

}  // namespace concordium
