#pragma once

// Desk-scale oracle: elements of a tensor power of the Weyl-Heisenberg
// algebra, held in normal order (all x generators before all p generators)
// with truncated-series coefficients. Multiplication reduces p x = x p + 1
// within each leg; legs commute. Everything is doubly truncated: series
// order d in u and total generator degree g.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "alexg/matrix.hpp"
#include "alexg/series.hpp"

namespace alexg {

// leg -> (x exponent, p exponent); legs with (0, 0) are not stored
using WeylMonomial = std::map<int, std::pair<int, int>>;

struct Truncation {
    int order = 4;  // max u power
    int degree = 6; // max total generator degree
    friend bool operator==(const Truncation& a, const Truncation& b) {
        return a.order == b.order && a.degree == b.degree;
    }
    friend bool operator!=(const Truncation& a, const Truncation& b) { return !(a == b); }
};

namespace detail {

inline int monomial_degree(const WeylMonomial& m) {
    int d = 0;
    for (const auto& [leg, xp] : m) d += xp.first + xp.second;
    return d;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return BigInt(0);
    BigInt r(1);
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline BigInt factorial(int n) {
    BigInt r(1);
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// (x^a1 p^b1)(x^a2 p^b2) on one leg in normal order:
// sum over t of C(b1,t) C(a2,t) t!  x^{a1+a2-t} p^{b1+b2-t}
inline std::vector<std::pair<std::pair<int, int>, BigInt>>
one_leg_product(std::pair<int, int> lhs, std::pair<int, int> rhs) {
    const auto [a1, b1] = lhs;
    const auto [a2, b2] = rhs;
    std::vector<std::pair<std::pair<int, int>, BigInt>> out;
    const int tmax = std::min(b1, a2);
    for (int t = 0; t <= tmax; ++t) {
        const BigInt c = binomial(b1, t) * binomial(a2, t) * factorial(t);
        out.push_back({{a1 + a2 - t, b1 + b2 - t}, c});
    }
    return out;
}

} // namespace detail

class WeylElem {
public:
    WeylElem(std::set<int> legs, Truncation tr) : legs_(std::move(legs)), tr_(tr) {}

    static WeylElem unit(std::set<int> legs, Truncation tr) {
        WeylElem e(std::move(legs), tr);
        e.terms_[WeylMonomial{}] = PowerSeries(tr.order, Rational(1));
        return e;
    }

    static WeylElem monomial(std::set<int> legs, Truncation tr, WeylMonomial m,
                             PowerSeries coeff) {
        WeylElem e(std::move(legs), tr);
        for (auto it = m.begin(); it != m.end();) {
            if (!e.legs_.count(it->first))
                throw ContextError("monomial uses a leg outside the set");
            if (it->second == std::make_pair(0, 0))
                it = m.erase(it);
            else
                ++it;
        }
        if (coeff.order() != tr.order) throw ContextError("coefficient order mismatch");
        e.add_term(std::move(m), std::move(coeff));
        return e;
    }

    const std::set<int>& legs() const { return legs_; }
    const Truncation& truncation() const { return tr_; }
    const std::map<WeylMonomial, PowerSeries>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PowerSeries coeff(const WeylMonomial& m) const {
        auto it = terms_.find(m);
        if (it != terms_.end()) return it->second;
        return PowerSeries(tr_.order);
    }

    friend WeylElem operator+(const WeylElem& a, const WeylElem& b) {
        a.check_context(b);
        WeylElem r = a;
        for (const auto& [m, s] : b.terms_) r.add_term(m, s);
        return r;
    }
    friend WeylElem operator-(const WeylElem& a, const WeylElem& b) {
        a.check_context(b);
        WeylElem r = a;
        for (const auto& [m, s] : b.terms_) r.add_term(m, -s);
        return r;
    }
    WeylElem& operator+=(const WeylElem& o) { return *this = *this + o; }

    WeylElem scaled(const PowerSeries& s) const {
        WeylElem r(legs_, tr_);
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }
    WeylElem scaled(const Rational& q) const {
        WeylElem r(legs_, tr_);
        for (const auto& [m, c] : terms_) r.add_term(m, c.scaled(q));
        return r;
    }

    // normal-ordered product: within each leg p x rewrites to x p + 1
    friend WeylElem operator*(const WeylElem& a, const WeylElem& b) {
        return a.product(b, /*reorder=*/true);
    }

    // product of the underlying commutative polynomials (exponents add);
    // used to build exponentials that are then read as normal-ordered
    WeylElem commutative_mul(const WeylElem& b) const {
        return product(b, /*reorder=*/false);
    }

    // Multiply the leg-i factor by the leg-j factor, in that order, write the
    // normal-ordered result into leg k; i and j disappear.
    WeylElem contract(int i, int j, int k) const {
        if (i == j) throw ContextError("contract: source legs must differ");
        if (!legs_.count(i) || !legs_.count(j))
            throw ContextError("contract: source leg not in the leg set");
        if (k == i || k == j) throw DomainError("contract: target leg must be fresh");
        if (legs_.count(k)) {
            for (const auto& [m, s] : terms_)
                if (m.count(k)) throw DomainError("contract: target leg is not trivial");
        }
        std::set<int> legs = legs_;
        legs.erase(i);
        legs.erase(j);
        legs.insert(k);
        WeylElem r(std::move(legs), tr_);
        for (const auto& [m, s] : terms_) {
            const auto fi = m.count(i) ? m.at(i) : std::make_pair(0, 0);
            const auto fj = m.count(j) ? m.at(j) : std::make_pair(0, 0);
            WeylMonomial base = m;
            base.erase(i);
            base.erase(j);
            for (const auto& [xp, c] : detail::one_leg_product(fi, fj)) {
                WeylMonomial nm = base;
                if (xp.first != 0 || xp.second != 0) nm[k] = xp;
                if (detail::monomial_degree(nm) > tr_.degree) continue;
                r.add_term(std::move(nm), s.scaled(Rational(c)));
            }
        }
        return r;
    }

    WeylElem contract_run(const std::vector<int>& order, int k) const {
        if (order.empty()) throw ContextError("contract_run: empty source list");
        if (order.size() == 1) {
            std::map<int, int> relmap;
            relmap[order[0]] = k;
            return relabeled(relmap);
        }
        int tmp = (legs_.empty() ? 0 : *legs_.rbegin()) + 1;
        if (tmp <= k) tmp = k + 1;
        WeylElem acc = contract(order[0], order[1], tmp);
        for (std::size_t idx = 2; idx < order.size(); ++idx) {
            const int next = tmp + 1 > k ? tmp + 1 : k + 1;
            acc = acc.contract(tmp, order[idx], next);
            tmp = next;
        }
        std::map<int, int> relmap;
        relmap[tmp] = k;
        return acc.relabeled(relmap);
    }

    // relabel legs; labels absent from the map stay fixed
    WeylElem relabeled(const std::map<int, int>& sigma) const {
        auto apply = [&](int leg) {
            auto it = sigma.find(leg);
            return it == sigma.end() ? leg : it->second;
        };
        std::set<int> legs;
        for (int l : legs_) {
            if (!legs.insert(apply(l)).second)
                throw ContextError("relabel: leg collision");
        }
        WeylElem r(std::move(legs), tr_);
        for (const auto& [m, s] : terms_) {
            WeylMonomial nm;
            for (const auto& [leg, xp] : m) nm[apply(leg)] = xp;
            r.add_term(std::move(nm), s);
        }
        return r;
    }

    friend bool operator==(const WeylElem& a, const WeylElem& b) {
        return a.legs_ == b.legs_ && a.tr_ == b.tr_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const WeylElem& a, const WeylElem& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, s] : terms_) {
            if (!out.empty()) out += "\n";
            out += "(" + s.str() + ")";
            for (const auto& [leg, xp] : m) {
                if (xp.first) {
                    out += " x" + std::to_string(leg);
                    if (xp.first > 1) out += "^" + std::to_string(xp.first);
                }
            }
            for (const auto& [leg, xp] : m) {
                if (xp.second) {
                    out += " p" + std::to_string(leg);
                    if (xp.second > 1) out += "^" + std::to_string(xp.second);
                }
            }
        }
        return out;
    }

private:
    void check_context(const WeylElem& o) const {
        if (legs_ != o.legs_) throw ContextError("leg sets differ");
        if (tr_ != o.tr_) throw ContextError("truncations differ");
    }

    void add_term(WeylMonomial m, PowerSeries s) {
        if (s.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), s);
        if (!inserted) {
            it->second += s;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    WeylElem product(const WeylElem& b, bool reorder) const {
        check_context(b);
        WeylElem r(legs_, tr_);
        using Partial = std::pair<WeylMonomial, BigInt>;
        for (const auto& [ma, sa] : terms_) {
            for (const auto& [mb, sb] : b.terms_) {
                const PowerSeries s = sa * sb;
                if (s.is_zero()) continue;
                std::vector<Partial> partials{{WeylMonomial{}, BigInt(1)}};
                std::set<int> touched;
                for (const auto& [leg, xp] : ma) touched.insert(leg);
                for (const auto& [leg, xp] : mb) touched.insert(leg);
                for (int leg : touched) {
                    const auto fa = ma.count(leg) ? ma.at(leg) : std::make_pair(0, 0);
                    const auto fb = mb.count(leg) ? mb.at(leg) : std::make_pair(0, 0);
                    std::vector<std::pair<std::pair<int, int>, BigInt>> options;
                    if (reorder) {
                        options = detail::one_leg_product(fa, fb);
                    } else {
                        options = {{{fa.first + fb.first, fa.second + fb.second}, BigInt(1)}};
                    }
                    std::vector<Partial> next;
                    next.reserve(partials.size() * options.size());
                    for (const auto& [pm, pc] : partials)
                        for (const auto& [xp, oc] : options) {
                            WeylMonomial nm = pm;
                            if (xp.first != 0 || xp.second != 0) nm[leg] = xp;
                            next.push_back({std::move(nm), pc * oc});
                        }
                    partials = std::move(next);
                }
                for (auto& [pm, pc] : partials) {
                    if (detail::monomial_degree(pm) > tr_.degree) continue;
                    r.add_term(std::move(pm), s.scaled(Rational(pc)));
                }
            }
        }
        return r;
    }

    std::set<int> legs_;
    Truncation tr_;
    std::map<WeylMonomial, PowerSeries> terms_;
};

// --- series matrices -----------------------------------------------------------

inline Matrix<PowerSeries> series_matrix(const Matrix<LaurentFrac>& m, int order) {
    Matrix<PowerSeries> s(m.rows(), m.cols(), PowerSeries(order));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            s(r, c) = PowerSeries::from_frac(m(r, c), order);
    return s;
}

inline Matrix<PowerSeries> series_matrix(const Matrix<LaurentPoly>& m, int order) {
    return series_matrix(lift(m), order);
}

inline Matrix<PowerSeries> series_identity(std::size_t n, int order) {
    Matrix<PowerSeries> s(n, n, PowerSeries(order));
    for (std::size_t i = 0; i < n; ++i) s(i, i) = PowerSeries(order, Rational(1));
    return s;
}

inline Matrix<PowerSeries> series_mat_mul(const Matrix<PowerSeries>& a,
                                          const Matrix<PowerSeries>& b) {
    if (a.cols() != b.rows()) throw DimensionError("series matrix product: shape mismatch");
    const int order = a(0, 0).order();
    Matrix<PowerSeries> r(a.rows(), b.cols(), PowerSeries(order));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

inline bool is_identity_mod_u(const Matrix<PowerSeries>& a) {
    if (!a.square()) return false;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c).coeff(0) != (r == c ? Rational(1) : Rational(0))) return false;
    return true;
}

// Neumann series inverse of a matrix that is the identity modulo u.
inline Matrix<PowerSeries> series_inverse_unipotent(const Matrix<PowerSeries>& a) {
    if (!is_identity_mod_u(a)) throw DomainError("series inverse: matrix is not 1 mod u");
    const int order = a(0, 0).order();
    const std::size_t n = a.rows();
    Matrix<PowerSeries> nil = series_identity(n, order) - a; // O(u)
    Matrix<PowerSeries> acc = series_identity(n, order);
    Matrix<PowerSeries> power = series_identity(n, order);
    for (int k = 1; k <= order; ++k) {
        power = series_mat_mul(power, nil);
        acc = acc + power;
    }
    return acc;
}

// --- the normal-ordered exponential presentation --------------------------------

// The element presented by a matrix A with A = 1 mod u: the normal-ordered
// expansion of exp(sum x_a (A - 1)[a][b] p_b) over the given legs.
inline WeylElem weyl_phi(const Matrix<PowerSeries>& a, const std::vector<int>& legs,
                         Truncation tr) {
    if (!a.square() || a.rows() != legs.size())
        throw DimensionError("weyl_phi: matrix size must equal leg count");
    if (!is_identity_mod_u(a))
        throw DomainError("weyl_phi: matrix is not the identity mod u");
    std::set<int> legset(legs.begin(), legs.end());
    if (legset.size() != legs.size()) throw ContextError("weyl_phi: duplicate legs");

    WeylElem quad(legset, tr);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            PowerSeries e = a(r, c);
            if (r == c) e -= PowerSeries(tr.order, Rational(1));
            if (e.is_zero()) continue;
            WeylMonomial m;
            if (legs[r] == legs[c]) {
                m[legs[r]] = {1, 1};
            } else {
                m[legs[r]] = {1, 0};
                m[legs[c]] = {0, 1};
            }
            quad += WeylElem::monomial(legset, tr, std::move(m), std::move(e));
        }

    WeylElem result = WeylElem::unit(legset, tr);
    WeylElem power = WeylElem::unit(legset, tr);
    for (int m = 1; m <= tr.order; ++m) {
        power = power.commutative_mul(quad).scaled(Rational(1, m));
        if (power.is_zero()) break;
        result += power;
    }
    return result;
}

// The oracle image of a Gaussian presentation, with T expanded as e^u.
inline WeylElem expand(const GaussElem& e, Truncation tr) {
    const WeylElem body = weyl_phi(series_matrix(e.q, tr.order), e.legs, tr);
    return body.scaled(PowerSeries::from_frac(e.scalar, tr.order));
}

} // namespace alexg
