#pragma once

// Finite presentations (omega, Q) of Gaussian elements omega * phi(Q) on a
// list of labeled tensor legs. Composition multiplies matrix parts; stitching
// two legs into a fresh one has a closed form whose scalar factor is
// 1/(1 - gamma); contracting many legs at once goes through the block matrix
// W = [[0, Q - 1], [M, 0]] and a single exact linear solve. The whole-element
// contraction admits the cheaper determinant form Det(1 - Q^) with Q^ the
// matrix part stripped of its first row and last column.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "alexg/matrix.hpp"

namespace alexg {

struct GaussElem {
    LaurentFrac scalar;      // omega
    Matrix<LaurentFrac> q;   // matrix part, size = leg count
    std::vector<int> legs;   // ordered leg labels, unique

    std::size_t pos(int leg) const {
        for (std::size_t i = 0; i < legs.size(); ++i)
            if (legs[i] == leg) return i;
        throw ContextError("leg " + std::to_string(leg) + " is not live");
    }
    bool has_leg(int leg) const {
        return std::find(legs.begin(), legs.end(), leg) != legs.end();
    }

    std::string str() const {
        return "scalar " + scalar.str() + ", matrix " + q.str();
    }

    friend bool operator==(const GaussElem& a, const GaussElem& b) {
        return a.scalar == b.scalar && a.legs == b.legs && a.q == b.q;
    }
    friend bool operator!=(const GaussElem& a, const GaussElem& b) { return !(a == b); }
};

namespace detail {
inline void check_legs_unique(const std::vector<int>& legs) {
    std::vector<int> s = legs;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw ContextError("duplicate leg labels");
}
} // namespace detail

inline GaussElem gauss_phi(Matrix<LaurentFrac> a, std::vector<int> legs) {
    if (!a.square() || a.rows() != legs.size())
        throw DimensionError("gauss_phi: matrix size must equal leg count");
    detail::check_legs_unique(legs);
    return GaussElem{LaurentFrac(1), std::move(a), std::move(legs)};
}

inline GaussElem gauss_phi(const Matrix<LaurentPoly>& a, std::vector<int> legs) {
    return gauss_phi(lift(a), std::move(legs));
}

inline GaussElem gauss_identity(std::vector<int> legs) {
    const std::size_t n = legs.size();
    return gauss_phi(Matrix<LaurentFrac>::identity(n), std::move(legs));
}

inline GaussElem relabeled(GaussElem e, std::vector<int> new_legs) {
    if (new_legs.size() != e.legs.size())
        throw ContextError("relabel: leg count mismatch");
    detail::check_legs_unique(new_legs);
    e.legs = std::move(new_legs);
    return e;
}

// Block-inserts the matrix part of `e` into an identity `total` x `total`
// matrix: entry (a, b) of e.q lands at (slots[a], slots[b]), 1-based, so the
// slot order also realizes the flipped placement when slots decrease.
// Resulting legs are labeled 1..total.
inline GaussElem embed(const GaussElem& e, const std::vector<std::size_t>& slots,
                       std::size_t total) {
    if (slots.size() != e.legs.size())
        throw DimensionError("embed: one slot per leg required");
    std::vector<bool> used(total + 1, false);
    for (std::size_t s : slots) {
        if (s < 1 || s > total) throw DimensionError("embed: slot out of range");
        if (used[s]) throw DimensionError("embed: slot collision");
        used[s] = true;
    }
    Matrix<LaurentFrac> q = Matrix<LaurentFrac>::identity(total);
    for (std::size_t a = 0; a < slots.size(); ++a)
        for (std::size_t b = 0; b < slots.size(); ++b)
            q(slots[a] - 1, slots[b] - 1) = e.q(a, b);
    std::vector<int> legs(total);
    for (std::size_t i = 0; i < total; ++i) legs[i] = static_cast<int>(i + 1);
    return GaussElem{e.scalar, std::move(q), std::move(legs)};
}

inline GaussElem compose(const GaussElem& a, const GaussElem& b) {
    if (a.legs != b.legs) throw ContextError("compose: leg lists differ");
    return GaussElem{a.scalar * b.scalar, a.q * b.q, a.legs};
}

// --- pairwise contraction (closed form) --------------------------------------

// Stitch legs (i, j) into the fresh leg k. With gamma = Q[j][i] and
// dinv = 1/(1 - gamma):
//   scalar *= dinv
//   Q'[k][k] = Q[i][j] + Q[i][i] Q[j][j] dinv
//   Q'[k][b] = Q[i][b] + Q[i][i] Q[j][b] dinv
//   Q'[a][k] = Q[a][j] + Q[a][i] Q[j][j] dinv
//   Q'[a][b] = Q[a][b] + Q[a][i] Q[j][b] dinv
// The new leg takes i's position in the leg order.
inline GaussElem contract_pair(const GaussElem& e, int i, int j, int k) {
    if (i == j) throw ContextError("contract_pair: source legs must differ");
    const std::size_t pi = e.pos(i);
    const std::size_t pj = e.pos(j);
    if (k != i && k != j && e.has_leg(k))
        throw ContextError("contract_pair: target leg is live");

    const LaurentFrac& gamma = e.q(pj, pi);
    const LaurentFrac denom = LaurentFrac(1) - gamma;
    if (denom.is_zero())
        throw SingularError("contract_pair: 1 - gamma is not invertible");
    const LaurentFrac dinv = denom.reciprocal();

    std::vector<int> legs;
    legs.reserve(e.legs.size() - 1);
    std::vector<std::size_t> survivors; // positions in e of surviving legs, k marked by pi
    for (std::size_t p = 0; p < e.legs.size(); ++p) {
        if (p == pj) continue;
        if (p == pi) {
            legs.push_back(k);
            survivors.push_back(pi);
        } else {
            legs.push_back(e.legs[p]);
            survivors.push_back(p);
        }
    }

    const std::size_t n = legs.size();
    Matrix<LaurentFrac> q(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const bool rk = survivors[r] == pi;
        for (std::size_t c = 0; c < n; ++c) {
            const bool ck = survivors[c] == pi;
            const std::size_t pr = survivors[r];
            const std::size_t pc = survivors[c];
            if (rk && ck)
                q(r, c) = e.q(pi, pj) + e.q(pi, pi) * e.q(pj, pj) * dinv;
            else if (rk)
                q(r, c) = e.q(pi, pc) + e.q(pi, pi) * e.q(pj, pc) * dinv;
            else if (ck)
                q(r, c) = e.q(pr, pj) + e.q(pr, pi) * e.q(pj, pj) * dinv;
            else
                q(r, c) = e.q(pr, pc) + e.q(pr, pi) * e.q(pj, pc) * dinv;
        }
    }
    return GaussElem{e.scalar * dinv, std::move(q), std::move(legs)};
}

// --- ordered multi-leg contraction -------------------------------------------

namespace detail {
inline int fresh_label(const GaussElem& e, int avoid) {
    int m = avoid;
    for (int l : e.legs) m = std::max(m, l);
    return m + 1;
}
} // namespace detail

// Left fold of contract_pair over the ordered source list.
inline GaussElem contract_run(GaussElem e, const std::vector<int>& order, int k) {
    if (order.empty()) throw ContextError("contract_run: empty source list");
    detail::check_legs_unique(order);
    if (order.size() == 1) {
        const int src = order[0];
        std::vector<int> legs = e.legs;
        legs[e.pos(src)] = k;
        if (src != k && e.has_leg(k)) throw ContextError("contract_run: target leg is live");
        return relabeled(std::move(e), std::move(legs));
    }
    int acc = detail::fresh_label(e, k);
    e = contract_pair(e, order[0], order[1], acc);
    for (std::size_t idx = 2; idx < order.size(); ++idx) {
        const int next = detail::fresh_label(e, k);
        e = contract_pair(e, acc, order[idx], next);
        acc = next;
    }
    std::vector<int> legs = e.legs;
    legs[e.pos(acc)] = k;
    return relabeled(std::move(e), std::move(legs));
}

// One-shot contraction of the ordered source list via the block matrix
// W = [[0, Q_SS - 1], [M, 0]] (M strictly upper triangular in the given
// order): scalar multiplier 1/Det(1 - W), surviving entries from the
// bilinear g (1-W)^-1 f term.
inline GaussElem contract_run_oneshot(const GaussElem& e, const std::vector<int>& order,
                                      int k) {
    if (order.empty()) throw ContextError("contract_run: empty source list");
    detail::check_legs_unique(order);
    const std::size_t m = order.size();
    std::vector<std::size_t> spos(m);
    for (std::size_t a = 0; a < m; ++a) spos[a] = e.pos(order[a]);

    std::vector<std::size_t> upos; // surviving positions, in leg order
    std::vector<int> legs;
    for (std::size_t p = 0; p < e.legs.size(); ++p) {
        if (p == spos[0]) {
            legs.push_back(k);
            continue;
        }
        if (std::find(spos.begin(), spos.end(), p) != spos.end()) continue;
        if (e.legs[p] == k) throw ContextError("contract_run: target leg is live");
        upos.push_back(p);
        legs.push_back(e.legs[p]);
    }
    const std::size_t u = upos.size();

    // 1 - W, rows/cols: m x-slots then m pair-slots
    Matrix<LaurentFrac> iw = Matrix<LaurentFrac>::identity(2 * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            LaurentFrac v = -e.q(spos[a], spos[b]);
            if (a == b) v += LaurentFrac(1);
            iw(a, m + b) = std::move(v);
            if (a < b) iw(m + a, b) = LaurentFrac(-1);
        }

    // right-hand sides: one column per survivor plus one for the fresh leg
    Matrix<LaurentFrac> f(2 * m, u + 1);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t c = 0; c < u; ++c) f(a, c) = e.q(spos[a], upos[c]);
        f(m + a, u) = LaurentFrac(1);
    }

    auto [dw, y] = solve(iw, f);
    if (dw.is_zero()) throw SingularError("contract_run: Det(1 - W) = 0");

    // left vectors: column per survivor (pair-slots) plus fresh leg (x-slots)
    // result(r, c) = sum_a G(a, r) * y(a, c)
    Matrix<LaurentFrac> bil(u + 1, u + 1);
    for (std::size_t r = 0; r <= u; ++r)
        for (std::size_t c = 0; c <= u; ++c) {
            LaurentFrac s;
            if (r == u)
                for (std::size_t a = 0; a < m; ++a) s += y(a, c);
            else
                for (std::size_t a = 0; a < m; ++a) s += e.q(upos[r], spos[a]) * y(m + a, c);
            bil(r, c) = std::move(s);
        }

    // assemble Q' over legs (survivors with k at the first source's position)
    const std::size_t n = legs.size();
    auto bil_index = [&](std::size_t leg_idx) -> std::size_t {
        // maps a new-leg index to (survivor rank | u for k)
        std::size_t rank = 0;
        for (std::size_t p = 0; p < n; ++p) {
            if (legs[p] == k) {
                if (p == leg_idx) return u;
                continue;
            }
            if (p == leg_idx) return rank;
            ++rank;
        }
        throw ContextError("contract_run: internal leg bookkeeping");
    };
    Matrix<LaurentFrac> q(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t br = bil_index(r);
            const std::size_t bc = bil_index(c);
            LaurentFrac v = bil(br, bc);
            if (br < u && bc < u) v += e.q(upos[br], upos[bc]);
            else if (r == c) v += LaurentFrac(1);
            q(r, c) = std::move(v);
        }
    return GaussElem{e.scalar / dw, std::move(q), std::move(legs)};
}

// --- whole-element contraction ------------------------------------------------

struct BulkResult {
    LaurentFrac scalar;  // omega / Det(1 - Q^)
    GaussElem residual;  // one remaining leg, unit scalar
};

namespace detail {
inline GaussElem one_leg_residual(const GaussElem& contracted) {
    return GaussElem{LaurentFrac(1), contracted.q, contracted.legs};
}
} // namespace detail

// Contracts every leg, in stored order, into one fresh leg. The scalar uses
// the determinant form Det(1 - Q^); the residual comes from the one-shot
// block solve (an independent route, cross-checked in tests against the
// pairwise fold).
inline BulkResult contract_all(const GaussElem& e, int target = 0) {
    if (e.legs.empty()) throw ContextError("contract_all: no legs");
    if (e.has_leg(target)) target = detail::fresh_label(e, target);
    const std::size_t n = e.legs.size();
    LaurentFrac scalar = e.scalar;
    if (n > 1) {
        const Matrix<LaurentFrac> hat = e.q.without_row_col(0, n - 1);
        const LaurentFrac d = det(Matrix<LaurentFrac>::identity(n - 1) - hat);
        if (d.is_zero()) throw SingularError("contract_all: Det(1 - Q^) = 0");
        scalar = e.scalar / d;
    }
    GaussElem run = contract_run_oneshot(e, e.legs, target);
    return BulkResult{std::move(scalar), detail::one_leg_residual(run)};
}

// Contracts the transposed matrix part in descending leg order; the scalar
// part must agree with contract_all (asserted by the acceptance suite).
inline BulkResult contract_all_transposed(const GaussElem& e, int target = 0) {
    if (e.legs.empty()) throw ContextError("contract_all: no legs");
    if (e.has_leg(target)) target = detail::fresh_label(e, target);
    GaussElem t{e.scalar, e.q.transposed(), e.legs};
    std::vector<int> order(e.legs.rbegin(), e.legs.rend());
    GaussElem run = contract_run_oneshot(t, order, target);
    return BulkResult{run.scalar, detail::one_leg_residual(run)};
}

// --- contraction plans ---------------------------------------------------------

struct PlanStep {
    int first;
    int second;
    int target; // may reuse a label that dies in this step
};

using ContractionPlan = std::vector<PlanStep>;

inline GaussElem apply_plan(GaussElem e, const ContractionPlan& plan) {
    for (const PlanStep& s : plan) e = contract_pair(e, s.first, s.second, s.target);
    return e;
}

// descending fold (l_n, l_n-1) -> t, (t, l_n-2) -> t, ..., ending in `target`
inline ContractionPlan descending_plan(const std::vector<int>& legs, int target) {
    if (legs.size() < 2) throw ContextError("descending_plan: need at least two legs");
    ContractionPlan plan;
    int tmp = std::max(*std::max_element(legs.begin(), legs.end()), target);
    auto it = legs.rbegin();
    int acc = *it++;
    while (it != legs.rend()) {
        const int next = *it++;
        const int nt = (it == legs.rend()) ? target : ++tmp;
        plan.push_back({acc, next, nt});
        acc = nt;
    }
    return plan;
}

} // namespace alexg
