#pragma once

// Reduced fractions of Laurent polynomials. Canonical form: numerator and
// denominator coprime (primitive-part gcd with contents divided out), the
// denominator has lowest exponent 0 and positive leading coefficient; any
// T-power unit lives in the numerator.

#include <string>
#include <utility>

#include "alexg/laurent.hpp"

namespace alexg {

class LaurentFrac {
public:
    LaurentFrac() : num_(), den_(1) {}
    LaurentFrac(long constant) : num_(constant), den_(1) {} // NOLINT: implicit by design
    LaurentFrac(LaurentPoly p) : num_(std::move(p)), den_(1) {} // NOLINT
    LaurentFrac(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ArithmeticError("fraction with zero denominator");
        reduce();
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    const LaurentPoly& as_polynomial() const {
        if (!is_polynomial()) throw DomainError("fraction is not a Laurent polynomial: " + str());
        return num_;
    }

    LaurentFrac reciprocal() const {
        if (is_zero()) throw ArithmeticError("reciprocal of zero");
        return LaurentFrac(den_, num_);
    }

    friend LaurentFrac operator-(const LaurentFrac& a) {
        LaurentFrac r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    friend LaurentFrac operator+(const LaurentFrac& a, const LaurentFrac& b) {
        return LaurentFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend LaurentFrac operator-(const LaurentFrac& a, const LaurentFrac& b) {
        return LaurentFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend LaurentFrac operator*(const LaurentFrac& a, const LaurentFrac& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return LaurentFrac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend LaurentFrac operator/(const LaurentFrac& a, const LaurentFrac& b) {
        if (b.is_zero()) throw ArithmeticError("division by zero fraction");
        return LaurentFrac(a.num_ * b.den_, a.den_ * b.num_);
    }

    LaurentFrac& operator+=(const LaurentFrac& o) { return *this = *this + o; }
    LaurentFrac& operator-=(const LaurentFrac& o) { return *this = *this - o; }
    LaurentFrac& operator*=(const LaurentFrac& o) { return *this = *this * o; }
    LaurentFrac& operator/=(const LaurentFrac& o) { return *this = *this / o; }

    // canonical form makes structural equality exact equality
    friend bool operator==(const LaurentFrac& a, const LaurentFrac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const LaurentFrac& a, const LaurentFrac& b) { return !(a == b); }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        const int sn = num_.lowest_exp();
        const int sd = den_.lowest_exp();
        LaurentPoly n0 = num_.shifted(-sn);
        LaurentPoly d0 = den_.shifted(-sd);
        const LaurentPoly g = laurent_gcd(n0, d0);
        if (!g.is_one()) {
            n0 = exact_div(n0, g);
            d0 = exact_div(d0, g);
        }
        if (d0.leading_coeff() < 0) {
            n0 = -n0;
            d0 = -d0;
        }
        num_ = n0.shifted(sn - sd);
        den_ = std::move(d0);
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

// a == unit * b for some unit +-T^m (both nonzero), the paper-style "=" up
// to normalization; zero only equals zero.
inline bool equal_up_to_unit(const LaurentFrac& a, const LaurentFrac& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const LaurentFrac q = a / b;
    return q.is_polynomial() && q.num().is_unit();
}

inline bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
    return equal_up_to_unit(LaurentFrac(a), LaurentFrac(b));
}

} // namespace alexg
