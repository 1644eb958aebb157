#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "dwr/complex_matrix.hpp"
#include "dwr/detail/jacobi.hpp"
#include "dwr/errors.hpp"

namespace dwr {

struct EigenDecomposition {
    std::vector<double> eigenvalues;  ///< ascending
    ComplexMatrix eigenvectors;       ///< orthonormal columns, column j pairs with eigenvalues[j]
};

namespace detail {

/// Phase-fix a column so its largest-modulus entry is real positive. Makes
/// reported eigenvectors (and the witnesses built from them) reproducible.
inline void canonicalize_column(ComplexMatrix& v, std::size_t j) {
    std::size_t best = 0;
    double best_abs = -1.0;
    for (std::size_t i = 0; i < v.rows(); ++i) {
        const double a = std::abs(v(i, j));
        if (a > best_abs) {
            best_abs = a;
            best = i;
        }
    }
    if (best_abs <= 0.0) return;
    const Complex phase = v(best, j) / best_abs;
    const Complex rot = std::conj(phase);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, j) *= rot;
}

inline void canonicalize_phases(ComplexMatrix& v) {
    for (std::size_t j = 0; j < v.cols(); ++j) canonicalize_column(v, j);
}

inline void require_hermitian(const ComplexMatrix& h) {
    if (!h.square()) throw DimensionMismatchError("expected a square matrix");
    if (!is_hermitian(h)) throw NotHermitianError("matrix fails the Hermiticity tolerance");
}

} // namespace detail

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix. Deterministic:
/// fixed rotation order, off-diagonal threshold 1e-13*||H||_F, sweep cap 100.
inline EigenDecomposition hermitian_eig(const ComplexMatrix& h) {
    detail::require_hermitian(h);
    const int n = static_cast<int>(h.rows());
    detail::WarmEig solver(n);
    solver.solve(h.data(), 1e-13, 100);

    EigenDecomposition out;
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = ComplexMatrix(h.rows(), h.cols());
    const detail::cd* v = solver.vectors();
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            out.eigenvectors(i, j) = v[i * h.cols() + j];
    detail::canonicalize_phases(out.eigenvectors);
    return out;
}

/// Singular values, descending, as the square roots of eigenvalues of T*T.
inline std::vector<double> singular_values(const ComplexMatrix& t) {
    if (t.rows() == 0 || t.cols() == 0) throw DimensionMismatchError("empty matrix");
    const ComplexMatrix gram = hermitian_part(adjoint(t) * t);
    EigenDecomposition eig = hermitian_eig(gram);
    std::vector<double> sv(eig.eigenvalues.size());
    for (std::size_t i = 0; i < sv.size(); ++i)
        sv[i] = std::sqrt(std::max(0.0, eig.eigenvalues[sv.size() - 1 - i]));
    return sv;
}

/// Right singular pair for the largest (which=+1) or smallest (which=-1)
/// singular value: (sigma, unit vector x with ||Tx|| = sigma).
inline std::pair<double, std::vector<Complex>> extremal_singular_pair(const ComplexMatrix& t,
                                                                      int which = +1) {
    const ComplexMatrix gram = hermitian_part(adjoint(t) * t);
    EigenDecomposition eig = hermitian_eig(gram);
    const std::size_t j = which >= 0 ? eig.eigenvalues.size() - 1 : 0;
    return {std::sqrt(std::max(0.0, eig.eigenvalues[j])), eig.eigenvectors.column(j)};
}

/// Functional calculus V f(Lambda) V* for Hermitian positive semidefinite H.
/// Eigenvalues in [-1e-10, 0) are clamped to 0; below that is an error.
template <class Fn>
inline ComplexMatrix herm_fn(const ComplexMatrix& h, Fn&& f) {
    detail::require_hermitian(h);
    EigenDecomposition eig = hermitian_eig(h);
    std::vector<double> fv(eig.eigenvalues.size());
    for (std::size_t k = 0; k < fv.size(); ++k) {
        double lambda = eig.eigenvalues[k];
        if (lambda < -1e-10)
            throw NegativeSpectrumError("eigenvalue below the PSD tolerance");
        if (lambda < 0.0) lambda = 0.0;
        fv[k] = f(lambda);
    }
    const std::size_t n = h.rows();
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k)
                acc += eig.eigenvectors(i, k) * fv[k] * std::conj(eig.eigenvectors(j, k));
            out(i, j) = acc;
        }
    return hermitian_part(out);
}

/// |T| = (T*T)^(1/2).
inline ComplexMatrix matrix_abs(const ComplexMatrix& t) {
    if (!t.square()) throw DimensionMismatchError("matrix_abs needs a square matrix");
    return herm_fn(hermitian_part(adjoint(t) * t), [](double x) { return std::sqrt(x); });
}

} // namespace dwr
