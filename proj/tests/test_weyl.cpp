#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "alexg/gaussian.hpp"
#include "alexg/weyl.hpp"

#include "gen.hpp"

using namespace alexg;

namespace {

const Truncation kTr{4, 6};

PowerSeries one(int order = kTr.order) { return PowerSeries(order, Rational(1)); }

WeylElem mono(std::set<int> legs, WeylMonomial m, Truncation tr = kTr) {
    return WeylElem::monomial(std::move(legs), tr, std::move(m), one(tr.order));
}

Matrix<PowerSeries> random_series_unipotent(testgen::Rng& rng, std::size_t n, int order) {
    Matrix<PowerSeries> a = series_identity(n, order);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (int k = 1; k <= order; ++k) {
                const int num = rng.uniform(-2, 2);
                if (num == 0) continue;
                a(r, c) += PowerSeries::u_power(order, k, Rational(num, rng.uniform(1, 3)));
            }
    return a;
}

GaussElem random_gauss(testgen::Rng& rng, std::size_t n) {
    std::vector<int> legs(n);
    for (std::size_t i = 0; i < n; ++i) legs[i] = static_cast<int>(i) + 1;
    return gauss_phi(testgen::random_unipotent(rng, n), legs);
}

} // namespace

TEST_CASE("normal ordering of products", "[weyl]") {
    // p x = x p + 1 on one leg
    const WeylElem p = mono({1}, {{1, {0, 1}}});
    const WeylElem x = mono({1}, {{1, {1, 0}}});
    WeylElem expect = mono({1}, {{1, {1, 1}}}) + WeylElem::unit({1}, kTr);
    CHECK(p * x == expect);
    CHECK(x * p == mono({1}, {{1, {1, 1}}}));

    // p1^2 x1 x2 reduces to 2 x2 p1 + x1 x2 p1^2
    const WeylElem p1sq = mono({1, 2}, {{1, {0, 2}}});
    const WeylElem x1x2 = mono({1, 2}, {{1, {1, 0}}, {2, {1, 0}}});
    const WeylElem got = p1sq * x1x2;
    WeylElem want = mono({1, 2}, {{1, {0, 1}}, {2, {1, 0}}}).scaled(Rational(2)) +
                    mono({1, 2}, {{1, {1, 2}}, {2, {1, 0}}});
    CHECK(got == want);

    CHECK_THROWS_AS(p * mono({2}, {{2, {1, 0}}}), ContextError);
    CHECK_THROWS_AS(p * mono({1}, {{1, {1, 0}}}, Truncation{3, 6}), ContextError);
}

TEST_CASE("contraction of leg pairs", "[weyl]") {
    // x_i p_j -> x_k p_k
    const WeylElem xipj = mono({1, 2}, {{1, {1, 0}}, {2, {0, 1}}});
    CHECK(xipj.contract(1, 2, 3) == mono({3}, {{3, {1, 1}}}));

    // p_i x_j -> x_k p_k + 1
    const WeylElem pixj = mono({1, 2}, {{1, {0, 1}}, {2, {1, 0}}});
    const WeylElem got = pixj.contract(1, 2, 3);
    CHECK(got == mono({3}, {{3, {1, 1}}}) + WeylElem::unit({3}, kTr));

    // monomial factors multiply into the target leg, spectators ride along
    const WeylElem abc = mono({1, 2, 5}, {{1, {1, 0}}, {2, {1, 0}}, {5, {0, 1}}});
    CHECK(abc.contract(1, 2, 3) == mono({3, 5}, {{3, {2, 0}}, {5, {0, 1}}}));

    // target leg must be trivial
    CHECK_THROWS_AS(pixj.contract(1, 2, 2), DomainError);
    const WeylElem three = mono({1, 2, 3}, {{1, {1, 0}}, {3, {1, 0}}});
    CHECK_THROWS_AS(three.contract(1, 2, 3), DomainError);
}

TEST_CASE("ordered contraction runs", "[weyl]") {
    // a1 b2 c3 d5 contracted along (1,2,3) -> 4 gives (abc)4 d5
    const WeylElem e = mono({1, 2, 3, 5},
                            {{1, {1, 0}}, {2, {1, 0}}, {3, {1, 0}}, {5, {0, 1}}});
    CHECK(e.contract_run({1, 2, 3}, 4) == mono({4, 5}, {{4, {3, 0}}, {5, {0, 1}}}));

    // single-leg run relabels
    CHECK(e.contract_run({2}, 9) ==
          mono({1, 9, 3, 5}, {{1, {1, 0}}, {9, {1, 0}}, {3, {1, 0}}, {5, {0, 1}}}));

    // disjoint runs commute
    testgen::Rng rng(31);
    for (int it = 0; it < 10; ++it) {
        const GaussElem g = random_gauss(rng, 6);
        const WeylElem w = expand(g, kTr);
        const WeylElem ab = w.contract(1, 2, 7).contract(4, 5, 8);
        const WeylElem ba = w.contract(4, 5, 8).contract(1, 2, 7);
        CHECK(ab == ba);
    }
}

TEST_CASE("factored products contract leg by leg", "[weyl]") {
    testgen::Rng rng(87);
    for (int it = 0; it < 20; ++it) {
        auto re = [&] { return std::make_pair(rng.uniform(0, 2), rng.uniform(0, 2)); };
        const WeylMonomial u{{4, re()}};
        const WeylMonomial v{{5, re()}};
        const std::pair<int, int> fa = re();
        const std::pair<int, int> fb = re();
        // u a_1 v b_2 contracted along (1,2) -> 3 equals u v (a b)_3
        WeylMonomial whole = u;
        whole.insert(v.begin(), v.end());
        whole[1] = fa;
        whole[2] = fb;
        const WeylElem lhs = mono({1, 2, 4, 5}, whole).contract(1, 2, 3);

        WeylElem prod = mono({3, 4, 5}, {{3, fa}});
        prod = prod * mono({3, 4, 5}, {{3, fb}});
        WeylMonomial uv = u;
        uv.insert(v.begin(), v.end());
        const WeylElem rhs = prod * mono({3, 4, 5}, uv);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("contraction is equivariant under relabeling", "[weyl]") {
    testgen::Rng rng(88);
    for (int it = 0; it < 10; ++it) {
        const GaussElem g = random_gauss(rng, 3);
        const WeylElem w = expand(g, kTr);
        const std::map<int, int> sigma{{1, 11}, {2, 12}, {3, 13}};
        const WeylElem lhs = w.contract(1, 2, 4).relabeled({{4, 14}, {3, 13}});
        const WeylElem rhs = w.relabeled(sigma).contract(11, 12, 14);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exponential presentation basics", "[weyl]") {
    // identity matrix presents the unit
    CHECK(weyl_phi(series_identity(2, kTr.order), {1, 2}, kTr) ==
          WeylElem::unit({1, 2}, kTr));

    // diag(e^u, 1): sum over m of (e^u - 1)^m / m! x1^m p1^m
    Matrix<PowerSeries> a = series_identity(2, kTr.order);
    a(0, 0) = PowerSeries::exp_scaled(kTr.order, 1);
    const WeylElem got = weyl_phi(a, {1, 2}, kTr);
    WeylElem want = WeylElem::unit({1, 2}, kTr);
    const PowerSeries em1 = PowerSeries::exp_scaled(kTr.order, 1) - one();
    PowerSeries pw = one();
    for (int m = 1; m <= 3; ++m) { // degree cap 6 allows m <= 3
        pw = pw * em1;
        pw = pw.scaled(Rational(1, m));
        want += WeylElem::monomial({1, 2}, kTr, {{1, {m, m}}}, pw);
    }
    CHECK(got == want);

    Matrix<PowerSeries> bad = series_identity(2, kTr.order);
    bad(0, 1) = one();
    CHECK_THROWS_AS(weyl_phi(bad, {1, 2}, kTr), DomainError);
}

TEST_CASE("presentation is a monoid homomorphism", "[weyl]") {
    testgen::Rng rng(2025);
    for (int it = 0; it < 25; ++it) {
        const auto a = random_series_unipotent(rng, 2, kTr.order);
        const auto b = random_series_unipotent(rng, 2, kTr.order);
        const WeylElem lhs = weyl_phi(a, {1, 2}, kTr) * weyl_phi(b, {1, 2}, kTr);
        const WeylElem rhs = weyl_phi(series_mat_mul(a, b), {1, 2}, kTr);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("conjugation moves x by the matrix", "[weyl]") {
    // phi(A) x_j phi(A)^-1 = sum_i x_i A[i][j]; degree cap widened since the
    // odd-degree conjugand leaves the even-degree cone
    const Truncation tr{4, 9};
    testgen::Rng rng(321);
    for (int it = 0; it < 10; ++it) {
        const auto a = random_series_unipotent(rng, 2, tr.order);
        const auto ainv = series_inverse_unipotent(a);
        const WeylElem pa = weyl_phi(a, {1, 2}, tr);
        const WeylElem painv = weyl_phi(ainv, {1, 2}, tr);
        for (std::size_t j = 0; j < 2; ++j) {
            const WeylElem xj = mono({1, 2}, {{static_cast<int>(j) + 1, {1, 0}}}, tr);
            const WeylElem lhs = pa * xj * painv;
            WeylElem rhs(std::set<int>{1, 2}, tr);
            for (std::size_t i = 0; i < 2; ++i)
                rhs += WeylElem::monomial({1, 2}, tr,
                                          {{static_cast<int>(i) + 1, {1, 0}}}, a(i, j));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("series inverse is exact at truncation", "[weyl]") {
    testgen::Rng rng(654);
    for (int it = 0; it < 10; ++it) {
        const auto a = random_series_unipotent(rng, 3, kTr.order);
        const auto ainv = series_inverse_unipotent(a);
        CHECK(series_mat_mul(a, ainv) == series_identity(3, kTr.order));
    }
}

TEST_CASE("gaussian contraction matches the oracle", "[weyl]") {
    // guard degree 2d keeps the expansion drop-free, making both routes exact
    const Truncation tr{4, 8};
    testgen::Rng rng(777);
    for (int it = 0; it < 15; ++it) {
        const GaussElem g = random_gauss(rng, 3);
        const int i = rng.uniform(1, 3);
        int j = rng.uniform(1, 3);
        while (j == i) j = rng.uniform(1, 3);
        const int k = 7;
        const WeylElem lhs = expand(g, tr).contract(i, j, k);
        const WeylElem rhs = expand(contract_pair(g, i, j, k), tr);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("gaussian composition matches the oracle", "[weyl]") {
    testgen::Rng rng(778);
    for (int it = 0; it < 15; ++it) {
        const GaussElem a = random_gauss(rng, 2);
        const GaussElem b = random_gauss(rng, 2);
        const WeylElem lhs = expand(a, kTr) * expand(b, kTr);
        const WeylElem rhs = expand(compose(a, b), kTr);
        CHECK(lhs == rhs);
    }
}
