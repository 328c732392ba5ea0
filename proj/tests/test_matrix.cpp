#include <catch2/catch_amalgamated.hpp>

#include "alexg/matrix.hpp"

#include "gen.hpp"

using namespace alexg;

namespace {

LaurentPoly P(const char* s) { return parse_poly(s); }

// independent oracle: cofactor expansion along the first row
LaurentPoly det_cofactor(const Matrix<LaurentPoly>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return LaurentPoly(1);
    if (n == 1) return m(0, 0);
    LaurentPoly d;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        const LaurentPoly minor = det_cofactor(m.without_row_col(0, c));
        const LaurentPoly term = m(0, c) * minor;
        d = (c % 2 == 0) ? d + term : d - term;
    }
    return d;
}

} // namespace

TEST_CASE("determinant stock examples", "[matrix]") {
    Matrix<LaurentPoly> m(2, 2);
    m(0, 0) = P("T");
    m(1, 0) = P("1 - T^2");
    m(1, 1) = P("T");
    CHECK(det(m) == P("T^2"));
    CHECK(det(Matrix<LaurentPoly>::identity(5)) == LaurentPoly(1));

    Matrix<LaurentPoly> rect(2, 3);
    CHECK_THROWS_AS(det(rect), DimensionError);
}

TEST_CASE("fraction-free determinant agrees with cofactor expansion", "[matrix]") {
    testgen::Rng rng(314);
    for (int it = 0; it < 120; ++it) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        const Matrix<LaurentPoly> m = testgen::random_matrix(rng, n);
        CHECK(det(m) == det_cofactor(m));
    }
}

TEST_CASE("determinant is multiplicative", "[matrix]") {
    testgen::Rng rng(2718);
    for (int it = 0; it < 80; ++it) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        const Matrix<LaurentPoly> a = testgen::random_matrix(rng, n);
        const Matrix<LaurentPoly> b = testgen::random_matrix(rng, n);
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("fraction determinant matches fraction-free route", "[matrix]") {
    testgen::Rng rng(161);
    for (int it = 0; it < 60; ++it) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        const Matrix<LaurentPoly> m = testgen::random_matrix(rng, n);
        CHECK(det(lift(m)) == LaurentFrac(det(m)));
    }
}

TEST_CASE("linear solve inverts nonsingular systems", "[matrix]") {
    testgen::Rng rng(55);
    int done = 0;
    while (done < 40) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        const Matrix<LaurentPoly> a = testgen::random_matrix(rng, n);
        if (det(a).is_zero()) continue;
        const Matrix<LaurentFrac> af = lift(a);
        const Matrix<LaurentFrac> inv = inverse(af);
        CHECK(af * inv == Matrix<LaurentFrac>::identity(n));
        ++done;
    }
}
