#pragma once

// Exact arithmetic over Z[T, T^-1]: sparse Laurent polynomials with
// arbitrary-precision integer coefficients, the canonical representative
// up to units +-T^m, and the textual grammar `1 - T + T^2` / `T^-1 + T`.

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "alexg/errors.hpp"

namespace alexg {

using BigInt = boost::multiprecision::cpp_int;

class LaurentPoly {
public:
    // (exponent, coefficient) pairs, ascending exponents, no zero coefficients.
    using Terms = std::vector<std::pair<int, BigInt>>;

    LaurentPoly() = default;
    LaurentPoly(long constant) { // NOLINT: implicit by design, mirrors int -> ring
        if (constant != 0) terms_.emplace_back(0, BigInt(constant));
    }
    explicit LaurentPoly(const BigInt& constant) {
        if (constant != 0) terms_.emplace_back(0, constant);
    }

    static LaurentPoly term(BigInt coeff, int exp) {
        LaurentPoly p;
        if (coeff != 0) p.terms_.emplace_back(exp, std::move(coeff));
        return p;
    }
    static LaurentPoly t(int exp = 1) { return term(BigInt(1), exp); }

    static LaurentPoly from_terms(Terms terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        LaurentPoly p;
        for (auto& [e, c] : terms) {
            if (c == 0) continue;
            if (!p.terms_.empty() && p.terms_.back().first == e)
                throw Error("from_terms: duplicate exponent");
            p.terms_.emplace_back(e, std::move(c));
        }
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
    }
    // true for +-T^m
    bool is_unit() const {
        return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
    }

    int lowest_exp() const {
        if (is_zero()) throw DegenerateError("lowest_exp of zero polynomial");
        return terms_.front().first;
    }
    int highest_exp() const {
        if (is_zero()) throw DegenerateError("highest_exp of zero polynomial");
        return terms_.back().first;
    }
    const BigInt& leading_coeff() const {
        if (is_zero()) throw DegenerateError("leading_coeff of zero polynomial");
        return terms_.back().second;
    }

    BigInt coeff(int exp) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                                   [](const auto& t, int e) { return t.first < e; });
        if (it != terms_.end() && it->first == exp) return it->second;
        return BigInt(0);
    }

    // value at T = 1 (sum of coefficients)
    BigInt eval_one() const {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    LaurentPoly shifted(int k) const { // multiply by T^k
        LaurentPoly p = *this;
        for (auto& [e, c] : p.terms_) e += k;
        return p;
    }

    LaurentPoly reversed() const { // T -> T^-1
        LaurentPoly p;
        p.terms_.reserve(terms_.size());
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            p.terms_.emplace_back(-it->first, it->second);
        return p;
    }

    bool even_exponents() const {
        for (const auto& [e, c] : terms_)
            if (e % 2 != 0) return false;
        return true;
    }

    friend LaurentPoly operator-(const LaurentPoly& p) {
        LaurentPoly r = p;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        return merge(a, b, /*negate_b=*/false);
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return merge(a, b, /*negate_b=*/true);
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::map<int, BigInt> acc;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
        LaurentPoly r;
        r.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (c != 0) r.terms_.emplace_back(e, std::move(c));
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool neg = c < 0;
            const BigInt mag = neg ? BigInt(-c) : c;
            std::string core;
            if (e == 0) {
                core = mag.str();
            } else {
                if (mag != 1) core = mag.str();
                core += "T";
                if (e != 1) core += "^" + std::to_string(e);
            }
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            out += core;
        }
        return out;
    }

private:
    static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool negate_b) {
        LaurentPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                r.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->first < ia->first) {
                r.terms_.emplace_back(ib->first, negate_b ? BigInt(-ib->second) : ib->second);
                ++ib;
            } else {
                BigInt c = negate_b ? BigInt(ia->second - ib->second)
                                    : BigInt(ia->second + ib->second);
                if (c != 0) r.terms_.emplace_back(ia->first, std::move(c));
                ++ia;
                ++ib;
            }
        }
        return r;
    }

    Terms terms_;
};

// --- unit normalization -----------------------------------------------------

// Canonical representative of p up to +-T^m: lowest exponent 0; of the two
// signs, the one with positive value at T = 1, falling back to a positive
// lowest-degree coefficient when that value is 0.
inline LaurentPoly normalize(const LaurentPoly& p) {
    if (p.is_zero()) throw DegenerateError("normalize: zero polynomial");
    LaurentPoly q = p.shifted(-p.lowest_exp());
    const BigInt at_one = q.eval_one();
    if (at_one < 0) return -q;
    if (at_one == 0 && q.terms().front().second < 0) return -q;
    return q;
}

// Halve every exponent (the substitution T^2 -> T). Odd exponents indicate a
// pipeline bug upstream and are rejected.
inline LaurentPoly halve_exponents(const LaurentPoly& p) {
    LaurentPoly::Terms out;
    out.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) {
        if (e % 2 != 0) throw ParityError("halve_exponents: odd exponent " + std::to_string(e));
        out.emplace_back(e / 2, c);
    }
    return LaurentPoly::from_terms(std::move(out));
}

// --- exact division ----------------------------------------------------------

// Exact quotient a / b in Z[T, T^-1]; throws if the division is not exact.
// Inexactness in callers like fraction-free elimination indicates a bug.
inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw ArithmeticError("exact_div: division by zero");
    if (a.is_zero()) return {};
    const int shift = a.lowest_exp() - b.lowest_exp();
    LaurentPoly r = a.shifted(-a.lowest_exp());
    const LaurentPoly d = b.shifted(-b.lowest_exp());
    const int ddeg = d.highest_exp();
    const BigInt& dlc = d.leading_coeff();
    LaurentPoly::Terms qterms;
    while (!r.is_zero()) {
        const int rdeg = r.highest_exp();
        if (rdeg < ddeg) throw Error("exact_div: inexact division (remainder)");
        BigInt q, rem;
        boost::multiprecision::divide_qr(r.leading_coeff(), dlc, q, rem);
        if (rem != 0) throw Error("exact_div: inexact division (coefficient)");
        const int qe = rdeg - ddeg;
        qterms.emplace_back(qe, q);
        r -= d * LaurentPoly::term(std::move(q), qe);
    }
    return LaurentPoly::from_terms(std::move(qterms)).shifted(shift);
}

inline bool divides(const LaurentPoly& b, const LaurentPoly& a) {
    try {
        exact_div(a, b);
        return true;
    } catch (const Error&) {
        return false;
    }
}

// --- gcd (for fraction reduction) -------------------------------------------

inline BigInt content(const LaurentPoly& p) {
    BigInt g = 0;
    for (const auto& [e, c] : p.terms()) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g; // 0 for the zero polynomial, positive otherwise
}

namespace detail {

inline LaurentPoly primitive_part(const LaurentPoly& p) {
    const BigInt c = content(p);
    if (c == 0 || c == 1) return p;
    LaurentPoly::Terms out;
    out.reserve(p.terms().size());
    for (const auto& [e, co] : p.terms()) out.emplace_back(e, BigInt(co / c));
    return LaurentPoly::from_terms(std::move(out));
}

// Pseudo-remainder of f by g (both with lowest exponent >= 0, g != 0).
inline LaurentPoly pseudo_rem(LaurentPoly f, const LaurentPoly& g) {
    const int dg = g.highest_exp();
    const BigInt& lcg = g.leading_coeff();
    while (!f.is_zero() && f.highest_exp() >= dg) {
        const int df = f.highest_exp();
        const BigInt lcf = f.leading_coeff();
        f = f * LaurentPoly(lcg) - g * LaurentPoly::term(lcf, df - dg);
    }
    return f;
}

} // namespace detail

// gcd of a and b in Z[T, T^-1], canonicalized to lowest exponent 0 and
// positive leading coefficient; combines the primitive-part gcd with the
// integer gcd of contents so that a/result and b/result are both exact.
inline LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    auto canon = [](LaurentPoly p) {
        if (p.is_zero()) return p;
        p = p.shifted(-p.lowest_exp());
        if (p.leading_coeff() < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return canon(b);
    if (b.is_zero()) return canon(a);
    const LaurentPoly a0 = a.shifted(-a.lowest_exp());
    const LaurentPoly b0 = b.shifted(-b.lowest_exp());
    const BigInt c = boost::multiprecision::gcd(content(a0), content(b0));
    LaurentPoly f = detail::primitive_part(a0);
    LaurentPoly g = detail::primitive_part(b0);
    if (f.highest_exp() < g.highest_exp()) std::swap(f, g);
    while (true) {
        LaurentPoly r = detail::pseudo_rem(f, g);
        if (r.is_zero()) break;
        f = std::move(g);
        g = detail::primitive_part(r.shifted(-r.lowest_exp()));
    }
    return canon(g * LaurentPoly(c));
}

// --- textual grammar ----------------------------------------------------------
//
//   poly    := "0" | ["+"|"-"] term ( ("+"|"-") term )*
//   term    := integer | [integer ["*"]] "T" ["^" integer]
//   integer := digit+
//
// Whitespace is insignificant. `str()` emits ascending exponents and this
// parser accepts everything `str()` emits.

inline LaurentPoly parse_poly(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_int = [&](bool allow_sign) -> BigInt {
        skip_ws();
        std::string digits;
        if (allow_sign && i < text.size() && (text[i] == '+' || text[i] == '-'))
            digits += text[i++];
        skip_ws();
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            digits += text[i++];
        if (digits.empty() || digits == "+" || digits == "-")
            throw ParseError("polynomial: expected integer at offset " + std::to_string(i));
        return BigInt(digits);
    };

    std::map<int, BigInt> acc;
    skip_ws();
    if (i >= text.size()) throw ParseError("polynomial: empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw ParseError("polynomial: expected '+' or '-' at offset " + std::to_string(i));
        }
        first = false;

        BigInt coeff = 1;
        bool saw_number = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = parse_int(false);
            saw_number = true;
        }
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        int exp = 0;
        if (i < text.size() && (text[i] == 'T' || text[i] == 't')) {
            ++i;
            exp = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                const BigInt e = parse_int(true);
                exp = static_cast<int>(e.convert_to<long>());
            }
        } else if (!saw_number) {
            throw ParseError("polynomial: expected term at offset " + std::to_string(i));
        }
        acc[exp] += sign * coeff;
    }

    LaurentPoly::Terms terms;
    for (auto& [e, c] : acc)
        if (c != 0) terms.emplace_back(e, std::move(c));
    return LaurentPoly::from_terms(std::move(terms));
}

} // namespace alexg
