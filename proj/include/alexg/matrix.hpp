#pragma once

// Dense matrices over the exact rings used throughout: Bareiss fraction-free
// determinants over Z[T, T^-1] and ordinary exact elimination over its
// fraction field.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "alexg/laurent.hpp"
#include "alexg/laurent_frac.hpp"

namespace alexg {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Matrix transposed() const {
        Matrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    // copy without row `dr` and column `dc`
    Matrix without_row_col(std::size_t dr, std::size_t dc) const {
        Matrix m(rows_ - 1, cols_ - 1);
        for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
            if (r == dr) continue;
            for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
                if (c == dc) continue;
                m(rr, cc) = (*this)(r, c);
                ++cc;
            }
            ++rr;
        }
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matrix product: shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& ark = a(r, k);
                for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += ark * b(k, c);
            }
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionError("matrix sum: shape mismatch");
        Matrix m = a;
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionError("matrix difference: shape mismatch");
        Matrix m = a;
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const {
        std::string out = "[";
        for (std::size_t r = 0; r < rows_; ++r) {
            out += r == 0 ? "[" : " [";
            for (std::size_t c = 0; c < cols_; ++c) {
                out += (*this)(r, c).str();
                if (c + 1 < cols_) out += ", ";
            }
            out += "]";
            if (r + 1 < rows_) out += ",\n";
        }
        return out + "]";
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

inline Matrix<LaurentFrac> lift(const Matrix<LaurentPoly>& m) {
    Matrix<LaurentFrac> f(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) f(r, c) = LaurentFrac(m(r, c));
    return f;
}

// Fraction-free (Bareiss) determinant over Z[T, T^-1]. The interleaved exact
// divisions are guaranteed to succeed; a failure would mean a bug, and
// exact_div throws accordingly.
inline LaurentPoly det(const Matrix<LaurentPoly>& m) {
    if (!m.square()) throw DimensionError("det: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return LaurentPoly(1);
    Matrix<LaurentPoly> a = m;
    int sign = 1;
    LaurentPoly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k).is_zero()) ++piv;
            if (piv == n) return {};
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
        prev = a(k, k);
    }
    return sign < 0 ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

// Exact Gaussian elimination over the fraction field.
inline LaurentFrac det(const Matrix<LaurentFrac>& m) {
    if (!m.square()) throw DimensionError("det: matrix is not square");
    const std::size_t n = m.rows();
    Matrix<LaurentFrac> a = m;
    LaurentFrac d(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k).is_zero()) ++piv;
        if (piv == n) return {};
        if (piv != k) {
            for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(piv, c));
            d = -d;
        }
        d *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            const LaurentFrac f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return d;
}

// Solves A X = B over the fraction field, also reporting Det(A).
struct LinearSolution {
    LaurentFrac det;
    Matrix<LaurentFrac> x;
};

inline LinearSolution solve(const Matrix<LaurentFrac>& a0, const Matrix<LaurentFrac>& b0) {
    if (!a0.square()) throw DimensionError("solve: matrix is not square");
    if (a0.rows() != b0.rows()) throw DimensionError("solve: right-hand side shape mismatch");
    const std::size_t n = a0.rows();
    const std::size_t m = b0.cols();
    Matrix<LaurentFrac> a = a0;
    Matrix<LaurentFrac> b = b0;
    LaurentFrac d(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k).is_zero()) ++piv;
        if (piv == n) return {LaurentFrac(), Matrix<LaurentFrac>()};
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
            for (std::size_t c = 0; c < m; ++c) std::swap(b(k, c), b(piv, c));
            d = -d;
        }
        d *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            const LaurentFrac f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            for (std::size_t j = 0; j < m; ++j) b(i, j) -= f * b(k, j);
        }
    }
    Matrix<LaurentFrac> x(n, m);
    for (std::size_t col = 0; col < m; ++col)
        for (std::size_t i = n; i-- > 0;) {
            LaurentFrac s = b(i, col);
            for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x(j, col);
            x(i, col) = s / a(i, i);
        }
    return {d, std::move(x)};
}

inline Matrix<LaurentFrac> inverse(const Matrix<LaurentFrac>& m) {
    auto [d, x] = solve(m, Matrix<LaurentFrac>::identity(m.rows()));
    if (d.is_zero()) throw SingularError("inverse: singular matrix");
    return x;
}

} // namespace alexg
