#include "concordium/polymatrix.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace concordium {

PolyMatrix::PolyMatrix(std::size_t n, std::vector<LaurentPoly> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ == 0) throw std::invalid_argument("empty matrix: dimension must be positive");
    if (entries_.size() != n_ * n_)
        throw std::invalid_argument("matrix entry count does not match dimension");
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
    std::vector<LaurentPoly> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = LaurentPoly::one();
    return PolyMatrix(n, std::move(e));
}

const LaurentPoly& PolyMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= n_ || col >= n_) throw std::out_of_range("matrix index out of range");
    return entries_[row * n_ + col];
}

LaurentPoly& PolyMatrix::at(std::size_t row, std::size_t col) {
    if (row >= n_ || col >= n_) throw std::out_of_range("matrix index out of range");
    return entries_[row * n_ + col];
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch in product");
    const std::size_t n = a.n_;
    std::vector<LaurentPoly> prod(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly acc;
            for (std::size_t k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
            prod[i * n + j] = std::move(acc);
        }
    return PolyMatrix(n, std::move(prod));
}

// dp[S] holds the determinant of the submatrix on rows 0..|S|-1 and the
// column set S, filled in increasing mask order (every submask of S is
// smaller than S, so each expansion along row |S|-1 only reads finished
// entries). 2^n stored polynomials, hence the size cap.
LaurentPoly det(const PolyMatrix& m) {
    const std::size_t n = m.dim();
    if (n > 16) throw std::invalid_argument("determinant implemented for n <= 16");
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<LaurentPoly> dp(std::size_t{1} << n);
    dp[0] = LaurentPoly::one();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int k = std::popcount(mask);
        const std::size_t row = static_cast<std::size_t>(k - 1);
        LaurentPoly acc;
        int pos = 0;
        for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1, ++pos) {
            const int col = std::countr_zero(bits);
            const LaurentPoly& entry = m.at(row, static_cast<std::size_t>(col));
            if (entry.is_zero()) continue;
            LaurentPoly contrib = entry * dp[mask & ~(std::uint32_t{1} << col)];
            if (((k - 1) + pos) % 2 != 0)
                acc -= contrib;
            else
                acc += contrib;
        }
        dp[mask] = std::move(acc);
    }
    return dp[full];
}

LaurentPoly alexander_polynomial(const PolyMatrix& m) {
    return normalize_up_to_units(det(m));
}

bool is_alexander_trivial(const PolyMatrix& m) { return is_unit(det(m)); }

}  // namespace concordium
