#ifndef CONCORDIUM_POLYMATRIX_HPP
#define CONCORDIUM_POLYMATRIX_HPP

// Square matrices over the Laurent ring, exact division-free determinants,
// and the Alexander-module presentation-matrix computations built on them.

#include <cstddef>
#include <vector>

#include "concordium/laurent.hpp"

namespace concordium {

class PolyMatrix {
public:
    // Row-major entries; throws std::invalid_argument on n == 0 (empty
    // matrix) or when entries.size() != n*n.
    PolyMatrix(std::size_t n, std::vector<LaurentPoly> entries);

    static PolyMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    const LaurentPoly& at(std::size_t row, std::size_t col) const;
    LaurentPoly& at(std::size_t row, std::size_t col);
    const std::vector<LaurentPoly>& entries() const { return entries_; }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    std::size_t n_;
    std::vector<LaurentPoly> entries_;
};

// Exact determinant by expansion over column subsets with memoization.
// Division-free (the entry ring has none to offer) and independent of
// expansion order. Sized for n <= 16.
LaurentPoly det(const PolyMatrix& m);

// det brought to the canonical unit-orbit representative; this is the
// multivariable Alexander polynomial presented by the matrix.
LaurentPoly alexander_polynomial(const PolyMatrix& m);

// True iff det is a unit, i.e. the presented Alexander module is trivial.
bool is_alexander_trivial(const PolyMatrix& m);

}  // namespace concordium

#endif
