#ifndef CONCORDIUM_TESTS_GENERATORS_HPP
#define CONCORDIUM_TESTS_GENERATORS_HPP

// Seeded random-value generators shared by the property tests and the
// acceptance suite. Deterministic: every suite seeds its own engine.

#include <random>
#include <vector>

#include "concordium/diagram.hpp"
#include "concordium/laurent.hpp"
#include "concordium/legendrian.hpp"
#include "concordium/polymatrix.hpp"

namespace concordium::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(Rng& rng) { return uniform_int(rng, 0, 1) == 1; }

// Up to max_terms random terms; duplicates collapse, so sparser (and
// sometimes zero) polynomials come out.
inline LaurentPoly random_poly(Rng& rng, int max_terms = 8, int exp_bound = 5,
                               int coeff_bound = 9) {
    std::vector<Term> terms;
    const int count = uniform_int(rng, 0, max_terms);
    for (int i = 0; i < count; ++i) {
        Term t;
        t.coeff = uniform_int(rng, -coeff_bound, coeff_bound);
        t.exp1 = uniform_int(rng, -exp_bound, exp_bound);
        t.exp2 = uniform_int(rng, -exp_bound, exp_bound);
        terms.push_back(t);
    }
    return LaurentPoly::from_terms(terms);
}

// A unit +-t1^a t2^b.
inline LaurentPoly random_unit(Rng& rng, int exp_bound = 5) {
    return LaurentPoly::monomial(coin(rng) ? 1 : -1, uniform_int(rng, -exp_bound, exp_bound),
                                 uniform_int(rng, -exp_bound, exp_bound));
}

inline PolyMatrix random_integer_matrix(Rng& rng, std::size_t n, int coeff_bound = 4) {
    std::vector<LaurentPoly> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n * n; ++i)
        entries.push_back(LaurentPoly::constant(uniform_int(rng, -coeff_bound, coeff_bound)));
    return PolyMatrix(n, std::move(entries));
}

inline PolyMatrix random_laurent_matrix(Rng& rng, std::size_t n) {
    std::vector<LaurentPoly> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n * n; ++i) entries.push_back(random_poly(rng, 2, 2, 3));
    return PolyMatrix(n, std::move(entries));
}

// Winding-one, tb = 0 patterns accepted by iteration and composition.
inline PatternInvariants random_admissible_pattern(Rng& rng) {
    PatternInvariants p;
    p.tb = 0;
    p.rot = uniform_int(rng, -6, 6);
    p.winding = 1;
    p.pu_unknotted = coin(rng);
    if (p.pu_unknotted)
        p.tau_pu = 0;
    else if (coin(rng))
        p.tau_pu = uniform_int(rng, -3, 3);
    if (coin(rng)) {
        p.n_minus = uniform_int(rng, 0, 4);
        p.n_plus = *p.n_minus + 1;
    }
    return p;
}

// Fronts grown from knot seeds by stabilizations and crossing-pair
// insertions, the moves that stay within single-knot fronts.
inline FrontDiagram random_front(Rng& rng, int max_moves = 12) {
    FrontDiagram f;
    if (coin(rng)) {
        f.events = {FrontEvent::LeftCuspUp, FrontEvent::RightCuspDown};
    } else {
        // (2, 2k+1) torus-knot front: four cusps, odd positive crossings.
        f.events = {FrontEvent::LeftCuspUp, FrontEvent::LeftCuspDown};
        const int crossings = 2 * uniform_int(rng, 0, 3) + 1;
        for (int i = 0; i < crossings; ++i) f.events.push_back(FrontEvent::PositiveCrossing);
        f.events.push_back(FrontEvent::RightCuspUp);
        f.events.push_back(FrontEvent::RightCuspDown);
    }
    const int moves = uniform_int(rng, 0, max_moves);
    for (int i = 0; i < moves; ++i) {
        switch (uniform_int(rng, 0, 2)) {
            case 0:  // positive stabilization
                f.events.push_back(FrontEvent::LeftCuspDown);
                f.events.push_back(FrontEvent::RightCuspDown);
                break;
            case 1:  // negative stabilization
                f.events.push_back(FrontEvent::LeftCuspUp);
                f.events.push_back(FrontEvent::RightCuspUp);
                break;
            default:  // Reidemeister-II pair
                f.events.push_back(FrontEvent::PositiveCrossing);
                f.events.push_back(FrontEvent::NegativeCrossing);
                break;
        }
    }
    return f;
}

// Two-component diagrams; inter-component crossings come in pairs so the
// linking number stays an integer.
inline CrossingList random_two_component_diagram(Rng& rng) {
    std::vector<Crossing> crossings;
    const int inter_pairs = uniform_int(rng, 0, 4);
    for (int i = 0; i < 2 * inter_pairs; ++i) {
        Crossing c;
        c.sign = coin(rng) ? 1 : -1;
        c.over = coin(rng) ? "a" : "b";
        c.under = c.over == "a" ? "b" : "a";
        crossings.push_back(c);
    }
    const int self = uniform_int(rng, 0, 5);
    for (int i = 0; i < self; ++i) {
        Crossing c;
        c.sign = coin(rng) ? 1 : -1;
        c.over = c.under = coin(rng) ? "a" : "b";
        crossings.push_back(c);
    }
    return CrossingList({"a", "b"}, std::move(crossings));
}

}  // namespace concordium::testing

#endif
