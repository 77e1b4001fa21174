#ifndef CONCORDIUM_TESTS_FIXTURES_HPP
#define CONCORDIUM_TESTS_FIXTURES_HPP

// Reference values built in code; the JSON files under fixtures/ must
// agree with these (checked in the json round-trip tests).

#include <vector>

#include "concordium/laurent.hpp"
#include "concordium/polymatrix.hpp"

namespace concordium::testing {

// -t1^2*t2^2 + 2*t1^2*t2 - t1^2 + 2*t1*t2^2 - 3*t1*t2 + 2*t1 - t2^2 + 2*t2 - 1
inline LaurentPoly doubled_clasp_alexander_poly() {
    return LaurentPoly::from_terms({{-1, 2, 2},
                                    {2, 2, 1},
                                    {-1, 2, 0},
                                    {2, 1, 2},
                                    {-3, 1, 1},
                                    {2, 1, 0},
                                    {-1, 0, 2},
                                    {2, 0, 1},
                                    {-1, 0, 0}});
}

// The 4x4 presentation matrix with determinant t1*t2:
//   [ 0   1   0   0    ]
//   [ t1  0   0   0    ]
//   [ 0   0   0   1    ]
//   [ 0   0   t2  t2-1 ]
inline PolyMatrix presentation_matrix_a() {
    const LaurentPoly zero;
    const LaurentPoly one = LaurentPoly::one();
    const LaurentPoly t1 = LaurentPoly::t1();
    const LaurentPoly t2 = LaurentPoly::t2();
    return PolyMatrix(4, {zero, one, zero, zero,
                          t1, zero, zero, zero,
                          zero, zero, zero, one,
                          zero, zero, t2, t2 - one});
}

}  // namespace concordium::testing

#endif
