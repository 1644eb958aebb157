#pragma once

#include <cstdint>
#include <vector>

#include "dwr/complex_matrix.hpp"
#include "dwr/detail/rng.hpp"

namespace dwr {

/// Standard complex Gaussian entries.
inline ComplexMatrix random_matrix(std::size_t n, detail::Rng& rng) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.gaussian_complex();
    return m;
}

/// Haar-ish unitary: Gram-Schmidt of a Gaussian matrix, re-orthogonalized once.
inline ComplexMatrix random_unitary(std::size_t n, detail::Rng& rng) {
    ComplexMatrix g = random_matrix(n, rng);
    std::vector<std::vector<Complex>> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = g.column(j);
    for (std::size_t j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < j; ++k) {
                const Complex proj = inner(cols[j], cols[k]);
                for (std::size_t i = 0; i < n; ++i) cols[j][i] -= proj * cols[k][i];
            }
        double nm = norm2(cols[j]);
        while (nm < 1e-8) {  // essentially impossible, but keep it total
            for (auto& v : cols[j]) v = rng.gaussian_complex();
            nm = norm2(cols[j]);
        }
        for (auto& v : cols[j]) v /= nm;
    }
    ComplexMatrix u(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) u(i, j) = cols[j][i];
    return u;
}

/// Random normal matrix U diag(z) U* with complex Gaussian eigenvalues.
inline ComplexMatrix random_normal_matrix(std::size_t n, detail::Rng& rng) {
    const ComplexMatrix u = random_unitary(n, rng);
    ComplexMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = rng.gaussian_complex();
    return u * d * adjoint(u);
}

} // namespace dwr
