#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "dwr/errors.hpp"

namespace dwr {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Entries are (re, im) pairs of 64-bit floats;
/// values are immutable in spirit: every operation returns a fresh matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw DimensionMismatchError("entry count does not match rows*cols");
        ensure_finite();
    }

    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw DimensionMismatchError("ragged initializer rows");
            data_.insert(data_.end(), r.begin(), r.end());
        }
        ensure_finite();
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_ && rows_ > 0; }
    bool empty() const { return data_.empty(); }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Complex* data() { return data_.data(); }
    const Complex* data() const { return data_.data(); }
    const std::vector<Complex>& entries() const { return data_; }

    /// Column j as a vector.
    std::vector<Complex> column(std::size_t j) const {
        std::vector<Complex> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    ComplexMatrix& operator*=(Complex s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatchError("matrix product shape mismatch");
        ComplexMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex(0.0, 0.0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& v : data_) s += std::norm(v);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : data_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    void require_same_shape(const ComplexMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatchError("matrix shapes differ");
    }

    void ensure_finite() const {
        for (const auto& v : data_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw ParseError("non-finite matrix entry");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Conjugate transpose.
inline ComplexMatrix adjoint(const ComplexMatrix& t) {
    ComplexMatrix a(t.cols(), t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) a(j, i) = std::conj(t(i, j));
    return a;
}

/// Hermitian part (T + T*)/2.
inline ComplexMatrix hermitian_part(const ComplexMatrix& t) {
    if (!t.square()) throw DimensionMismatchError("hermitian_part needs a square matrix");
    ComplexMatrix h(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j)
            h(i, j) = 0.5 * (t(i, j) + std::conj(t(j, i)));
    return h;
}

/// Skew part mapped to a Hermitian matrix: (T - T*)/(2i).
inline ComplexMatrix imaginary_part(const ComplexMatrix& t) {
    if (!t.square()) throw DimensionMismatchError("imaginary_part needs a square matrix");
    ComplexMatrix h(t.rows(), t.cols());
    const Complex half_over_i(0.0, -0.5);
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j)
            h(i, j) = half_over_i * (t(i, j) - std::conj(t(j, i)));
    return h;
}

inline double hermiticity_defect(const ComplexMatrix& h) {
    double s = 0.0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) s += std::norm(h(i, j) - std::conj(h(j, i)));
    return std::sqrt(s);
}

inline bool is_hermitian(const ComplexMatrix& h) {
    if (!h.square()) return false;
    return hermiticity_defect(h) <= 1e-12 * (1.0 + h.frobenius_norm());
}

/// y = M x for a square matrix and a dense vector.
inline std::vector<Complex> matvec(const ComplexMatrix& m, const std::vector<Complex>& x) {
    if (m.cols() != x.size()) throw DimensionMismatchError("matvec shape mismatch");
    std::vector<Complex> y(m.rows(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Complex acc(0.0, 0.0);
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

/// <u, v> = sum conj(v_i) u_i, linear in the first argument.
inline Complex inner(const std::vector<Complex>& u, const std::vector<Complex>& v) {
    Complex s(0.0, 0.0);
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * std::conj(v[i]);
    return s;
}

inline double norm2(const std::vector<Complex>& x) {
    double s = 0.0;
    for (const auto& v : x) s += std::norm(v);
    return std::sqrt(s);
}

/// <T x, x> = x* T x.
inline Complex quadratic_form(const ComplexMatrix& t, const std::vector<Complex>& x) {
    const auto tx = matvec(t, x);
    return inner(tx, x);
}

} // namespace dwr
