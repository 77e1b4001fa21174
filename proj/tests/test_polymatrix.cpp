#include <doctest.h>

#include <stdexcept>

#include "concordium/polymatrix.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace concordium;
using namespace concordium::testing;

namespace {

PolyMatrix with_swapped_rows(const PolyMatrix& m, std::size_t r1, std::size_t r2) {
    const std::size_t n = m.dim();
    std::vector<LaurentPoly> entries = m.entries();
    for (std::size_t j = 0; j < n; ++j)
        std::swap(entries[r1 * n + j], entries[r2 * n + j]);
    return PolyMatrix(n, std::move(entries));
}

}  // namespace

TEST_SUITE("polymatrix") {

TEST_CASE("determinant of the presentation matrix is t1*t2") {
    CHECK(det(presentation_matrix_a()) == LaurentPoly::t1() * LaurentPoly::t2());
}

TEST_CASE("determinant of the identity") {
    for (std::size_t n = 1; n <= 8; ++n) CHECK(det(PolyMatrix::identity(n)) == LaurentPoly::one());
}

TEST_CASE("determinant matches the Leibniz sum") {
    Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        const PolyMatrix m = random_integer_matrix(rng, 3);
        CHECK(det(m) == leibniz_det(m));
    }
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        const PolyMatrix m = random_laurent_matrix(rng, n);
        CHECK(det(m) == leibniz_det(m));
    }
}

TEST_CASE("alexander polynomial") {
    CHECK(alexander_polynomial(presentation_matrix_a()) == LaurentPoly::one());
    CHECK(alexander_polynomial(PolyMatrix(1, {LaurentPoly{}})) == LaurentPoly{});

    const LaurentPoly a = LaurentPoly::t1() - LaurentPoly::one();
    const LaurentPoly b = LaurentPoly::t2() - LaurentPoly::one();
    const PolyMatrix diag(2, {a, LaurentPoly{}, LaurentPoly{}, b});
    CHECK(alexander_polynomial(diag) == normalize_up_to_units(a * b));
}

TEST_CASE("alexander triviality") {
    CHECK(is_alexander_trivial(presentation_matrix_a()));
    CHECK_FALSE(is_alexander_trivial(PolyMatrix(1, {LaurentPoly{}})));

    const LaurentPoly zero;
    const PolyMatrix diag(3, {LaurentPoly::t1(), zero, zero,
                              zero, LaurentPoly::t2(), zero,
                              zero, zero, LaurentPoly::constant(-1)});
    CHECK(det(diag) == LaurentPoly::monomial(-1, 1, 1));
    CHECK(is_alexander_trivial(diag));
}

TEST_CASE("construction rejects bad shapes") {
    CHECK_THROWS_AS(PolyMatrix(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(PolyMatrix(2, {LaurentPoly{}}), std::invalid_argument);
    CHECK_THROWS_AS(det(PolyMatrix::identity(17)), std::invalid_argument);
}

TEST_CASE("row swap negates the determinant") {
    Rng rng(12);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 4));
        const PolyMatrix m = random_laurent_matrix(rng, n);
        std::size_t r1 = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
        std::size_t r2 = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 2));
        if (r2 >= r1) ++r2;
        CHECK(det(with_swapped_rows(m, r1, r2)) == -det(m));
    }
}

TEST_CASE("duplicate rows kill the determinant") {
    Rng rng(13);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 4));
        PolyMatrix m = random_laurent_matrix(rng, n);
        const std::size_t src = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
        const std::size_t dst = (src + 1) % n;
        for (std::size_t j = 0; j < n; ++j) m.at(dst, j) = m.at(src, j);
        CHECK(det(m) == LaurentPoly{});
    }
}

TEST_CASE("determinant is multiplicative") {
    Rng rng(14);
    for (int i = 0; i < 30; ++i) {
        const PolyMatrix m = random_laurent_matrix(rng, 3);
        const PolyMatrix n = random_laurent_matrix(rng, 3);
        CHECK(det(m * n) == det(m) * det(n));
    }
}

TEST_CASE("block-diagonal determinant is the product of block determinants") {
    Rng rng(15);
    for (int i = 0; i < 30; ++i) {
        const std::size_t a = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        const std::size_t b = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        const PolyMatrix ma = random_laurent_matrix(rng, a);
        const PolyMatrix mb = random_laurent_matrix(rng, b);
        const std::size_t n = a + b;
        std::vector<LaurentPoly> entries(n * n);
        for (std::size_t r = 0; r < a; ++r)
            for (std::size_t c = 0; c < a; ++c) entries[r * n + c] = ma.at(r, c);
        for (std::size_t r = 0; r < b; ++r)
            for (std::size_t c = 0; c < b; ++c) entries[(a + r) * n + (a + c)] = mb.at(r, c);
        CHECK(det(PolyMatrix(n, std::move(entries))) == det(ma) * det(mb));
    }
}

}  // TEST_SUITE
