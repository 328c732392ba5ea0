#pragma once

// Truncated power series in one formal variable u with exact rational
// coefficients. All operands in an expression must share the truncation
// order. T enters the oracle as the series of e^u.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "alexg/laurent_frac.hpp"

namespace alexg {

using Rational = boost::multiprecision::cpp_rational;

class PowerSeries {
public:
    PowerSeries() : c_(1, Rational(0)) {}
    explicit PowerSeries(int order, Rational constant = Rational(0))
        : c_(static_cast<std::size_t>(order) + 1, Rational(0)) {
        c_[0] = std::move(constant);
    }

    static PowerSeries u_power(int order, int k, Rational coeff = Rational(1)) {
        PowerSeries s(order);
        if (k <= order) s.c_[static_cast<std::size_t>(k)] = std::move(coeff);
        return s;
    }

    // e^{k u} truncated
    static PowerSeries exp_scaled(int order, long k) {
        PowerSeries s(order);
        Rational term(1);
        s.c_[0] = term;
        for (int i = 1; i <= order; ++i) {
            term *= Rational(k, i);
            s.c_[static_cast<std::size_t>(i)] = term;
        }
        return s;
    }

    // p(T) with T = e^u
    static PowerSeries from_laurent(const LaurentPoly& p, int order) {
        PowerSeries s(order);
        for (const auto& [e, co] : p.terms()) {
            PowerSeries t = exp_scaled(order, e);
            for (auto& r : t.c_) r *= Rational(co);
            s += t;
        }
        return s;
    }

    // num(e^u)/den(e^u); requires den(1) != 0
    static PowerSeries from_frac(const LaurentFrac& f, int order) {
        const PowerSeries d = from_laurent(f.den(), order);
        if (d.c_[0] == 0)
            throw DomainError("series expansion: denominator vanishes at T = 1");
        return from_laurent(f.num(), order) * d.inverse();
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    bool is_zero() const {
        for (const auto& r : c_)
            if (r != 0) return false;
        return true;
    }
    // least k with nonzero u^k coefficient; order() + 1 when zero
    int valuation() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return static_cast<int>(k);
        return order() + 1;
    }

    friend PowerSeries operator-(const PowerSeries& a) {
        PowerSeries r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        check(a, b);
        PowerSeries r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        check(a, b);
        PowerSeries r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        check(a, b);
        PowerSeries r(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    PowerSeries& operator+=(const PowerSeries& o) { return *this = *this + o; }
    PowerSeries& operator-=(const PowerSeries& o) { return *this = *this - o; }
    PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

    PowerSeries scaled(const Rational& r) const {
        PowerSeries s = *this;
        for (auto& x : s.c_) x *= r;
        return s;
    }

    PowerSeries inverse() const {
        if (c_[0] == 0) throw ArithmeticError("series inverse: zero constant term");
        PowerSeries r(order());
        r.c_[0] = Rational(1) / c_[0];
        for (std::size_t k = 1; k < c_.size(); ++k) {
            Rational s(0);
            for (std::size_t j = 1; j <= k; ++j) s += c_[j] * r.c_[k - j];
            r.c_[k] = -s / c_[0];
        }
        return r;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

    std::string str() const {
        std::string out;
        bool any = false;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            if (any) out += " + ";
            out += c_[k].str();
            if (k > 0) out += "u^" + std::to_string(k);
            any = true;
        }
        if (!any) out = "0";
        return out + " + O(u^" + std::to_string(order() + 1) + ")";
    }

private:
    static void check(const PowerSeries& a, const PowerSeries& b) {
        if (a.order() != b.order())
            throw ContextError("series truncation orders differ");
    }

    std::vector<Rational> c_;
};

} // namespace alexg
