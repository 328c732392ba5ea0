#pragma once

// Seeded oracle suites behind the `selftest` command: the presentation
// homomorphism, the contraction commuting square, and the determinant
// collapse of whole-element contraction. Deterministic for a given seed.

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "alexg/gaussian.hpp"
#include "alexg/weyl.hpp"

namespace alexg::selftest {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    int uniform(int lo, int hi) { // inclusive
        return lo + static_cast<int>(g_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(int num, int den) { return uniform(1, den) <= num; }

private:
    std::mt19937_64 g_;
};

// identity at T = 1: 1 + (T - 1) * sparse small Laurent entries
inline Matrix<LaurentPoly> random_unipotent_laurent(Rng& rng, std::size_t n) {
    Matrix<LaurentPoly> m = Matrix<LaurentPoly>::identity(n);
    const LaurentPoly tm1 = LaurentPoly::t() - LaurentPoly(1);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (!rng.chance(2, 3)) continue;
            const int co = rng.uniform(-2, 2);
            if (co == 0) continue;
            m(r, c) += tm1 * LaurentPoly::term(BigInt(co), rng.uniform(-2, 2));
        }
    return m;
}

inline Matrix<PowerSeries> random_unipotent_series(Rng& rng, std::size_t n, int order) {
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

struct Config {
    std::uint64_t seed = 12345;
    int order = 4;               // u-truncation of the oracle
    int hom_instances = 50;      // presentation homomorphism
    int square_instances = 50;   // contraction commuting square
    int collapse_instances = 200;
};

struct SuiteResult {
    std::string name;
    int passed = 0;
    int total = 0;
    double millis = 0.0;
    bool ok() const { return passed == total; }
};

struct Report {
    std::vector<SuiteResult> suites;
    bool all_pass = true;
    double total_millis = 0.0;
};

namespace detail {

template <class F>
SuiteResult run_suite(const std::string& name, int total, F&& check) {
    SuiteResult r;
    r.name = name;
    r.total = total;
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < total; ++i)
        if (check(i)) ++r.passed;
    const auto t1 = std::chrono::steady_clock::now();
    r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

} // namespace detail

// phi(A) phi(B) = phi(A B) in the oracle, coefficientwise
inline SuiteResult suite_homomorphism(const Config& cfg) {
    Rng rng(cfg.seed * 3 + 1);
    const Truncation tr{cfg.order, 2 * cfg.order > 6 ? 6 : 2 * cfg.order};
    return detail::run_suite("presentation-homomorphism", cfg.hom_instances, [&](int) {
        const auto a = random_unipotent_series(rng, 2, cfg.order);
        const auto b = random_unipotent_series(rng, 2, cfg.order);
        const WeylElem lhs = weyl_phi(a, {1, 2}, tr) * weyl_phi(b, {1, 2}, tr);
        const WeylElem rhs = weyl_phi(series_mat_mul(a, b), {1, 2}, tr);
        return lhs == rhs;
    });
}

// oracle contraction of the expansion vs expansion of the closed-form
// contraction; guard degree 2d keeps both routes drop-free
inline SuiteResult suite_square(const Config& cfg) {
    Rng rng(cfg.seed * 5 + 2);
    const Truncation tr{cfg.order, 2 * cfg.order};
    return detail::run_suite("contraction-square", cfg.square_instances, [&](int) {
        const Matrix<LaurentPoly> q = random_unipotent_laurent(rng, 3);
        const GaussElem g = gauss_phi(q, {1, 2, 3});
        const int i = rng.uniform(1, 3);
        int j = rng.uniform(1, 3);
        while (j == i) j = rng.uniform(1, 3);
        const WeylElem lhs = expand(g, tr).contract(i, j, 7);
        const WeylElem rhs = expand(contract_pair(g, i, j, 7), tr);
        return lhs == rhs;
    });
}

// folded pairwise scalar = 1/Det(1 - Q^), and the two whole-element routes
// agree (scalar and residual)
inline SuiteResult suite_collapse(const Config& cfg) {
    Rng rng(cfg.seed * 7 + 3);
    return detail::run_suite("determinant-collapse", cfg.collapse_instances, [&](int it) {
        const std::size_t n = static_cast<std::size_t>(2 + it % 4); // 2..5
        const Matrix<LaurentPoly> q = random_unipotent_laurent(rng, n);
        std::vector<int> legs(n);
        for (std::size_t i = 0; i < n; ++i) legs[i] = static_cast<int>(i) + 1;
        const GaussElem e = gauss_phi(q, legs);

        const GaussElem folded = contract_run(e, legs, 0);
        const LaurentPoly hat_det =
            det(Matrix<LaurentPoly>::identity(n - 1) - q.without_row_col(0, n - 1));
        if (hat_det.is_zero()) return false;
        if (folded.scalar != LaurentFrac(LaurentPoly(1), hat_det)) return false;

        const BulkResult asc = contract_all(e);
        const BulkResult desc = contract_all_transposed(e);
        return asc.scalar == folded.scalar && asc.scalar == desc.scalar &&
               asc.residual.q == folded.q && desc.residual.q == folded.q;
    });
}

inline Report run(const Config& cfg) {
    Report rep;
    rep.suites.push_back(suite_homomorphism(cfg));
    rep.suites.push_back(suite_square(cfg));
    rep.suites.push_back(suite_collapse(cfg));
    for (const SuiteResult& s : rep.suites) {
        rep.all_pass = rep.all_pass && s.ok();
        rep.total_millis += s.millis;
    }
    return rep;
}

} // namespace alexg::selftest
