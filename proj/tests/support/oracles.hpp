#ifndef CONCORDIUM_TESTS_ORACLES_HPP
#define CONCORDIUM_TESTS_ORACLES_HPP

// Independent reference computations the implementations are checked
// against. These deliberately avoid the library's own code paths: raw
// term maps for the ring operations, a permutation sum for determinants.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "concordium/diagram.hpp"
#include "concordium/laurent.hpp"
#include "concordium/polymatrix.hpp"

namespace concordium::testing {

using RawTerms = std::map<ExpPair, BigInt>;

inline void raw_add_term(RawTerms& acc, ExpPair e, const BigInt& c) {
    acc[e] += c;
    if (acc[e] == 0) acc.erase(e);
}

inline RawTerms add_oracle(const LaurentPoly& p, const LaurentPoly& q) {
    RawTerms acc;
    for (const auto& [e, c] : p.terms()) raw_add_term(acc, e, c);
    for (const auto& [e, c] : q.terms()) raw_add_term(acc, e, c);
    return acc;
}

inline RawTerms mul_oracle(const LaurentPoly& p, const LaurentPoly& q) {
    RawTerms acc;
    for (const auto& [ea, ca] : p.terms())
        for (const auto& [eb, cb] : q.terms())
            raw_add_term(acc, {ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return acc;
}

inline RawTerms negate_oracle(const LaurentPoly& p) {
    RawTerms acc;
    for (const auto& [e, c] : p.terms()) acc.emplace(e, -c);
    return acc;
}

inline int permutation_parity(const std::vector<std::size_t>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// Full Leibniz permutation sum; factorial cost, fine for n <= 4.
inline LaurentPoly leibniz_det(const PolyMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    LaurentPoly sum;
    do {
        LaurentPoly prod = LaurentPoly::one();
        for (std::size_t i = 0; i < n; ++i) prod *= m.at(i, perm[i]);
        if (permutation_parity(perm) > 0)
            sum += prod;
        else
            sum -= prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

// Signed inter-component crossing count, tallied positive and negative
// sides separately.
inline int linking_sign_sum_oracle(const CrossingList& d, const std::string& a,
                                   const std::string& b) {
    int plus = 0, minus = 0;
    for (const Crossing& c : d.crossings()) {
        const bool between = (c.over == a && c.under == b) || (c.over == b && c.under == a);
        if (!between) continue;
        if (c.sign > 0)
            ++plus;
        else
            ++minus;
    }
    return (plus - minus) / 2;
}

}  // namespace concordium::testing

#endif
