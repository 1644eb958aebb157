#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dwr/complex_matrix.hpp"
#include "dwr/detail/rng.hpp"
#include "dwr/eig.hpp"
#include "dwr/random_inputs.hpp"

using namespace dwr;
using Catch::Approx;

namespace {

ComplexMatrix random_hermitian(std::size_t n, detail::Rng& rng) {
    return hermitian_part(random_matrix(n, rng));
}

double reconstruction_residual(const ComplexMatrix& h, const EigenDecomposition& eig) {
    const std::size_t n = h.rows();
    ComplexMatrix lambda(n, n);
    for (std::size_t i = 0; i < n; ++i) lambda(i, i) = eig.eigenvalues[i];
    const ComplexMatrix rebuilt = eig.eigenvectors * lambda * adjoint(eig.eigenvectors);
    return (h - rebuilt).frobenius_norm();
}

} // namespace

TEST_CASE("adjoint: examples and involution") {
    const ComplexMatrix t{{0.0, 1.0}, {0.0, 0.0}};
    const ComplexMatrix ta = adjoint(t);
    CHECK(ta(0, 0) == Complex(0.0, 0.0));
    CHECK(ta(1, 0) == Complex(1.0, 0.0));
    CHECK(ta(0, 1) == Complex(0.0, 0.0));

    const ComplexMatrix one_i{{Complex(0.0, 1.0)}};
    CHECK(adjoint(one_i)(0, 0) == Complex(0.0, -1.0));

    detail::Rng rng(11);
    const ComplexMatrix m = random_matrix(3, rng);
    CHECK(adjoint(adjoint(m)) == m);
    // Frobenius isometry
    CHECK(adjoint(m).frobenius_norm() == Approx(m.frobenius_norm()).margin(1e-12));
}

TEST_CASE("hermitian_eig: examples") {
    {
        const ComplexMatrix h{{1.0, 0.0}, {0.0, 2.0}};
        const auto eig = hermitian_eig(h);
        CHECK(eig.eigenvalues[0] == Approx(1.0).margin(1e-12));
        CHECK(eig.eigenvalues[1] == Approx(2.0).margin(1e-12));
    }
    {
        const ComplexMatrix h{{0.0, 1.0}, {1.0, 0.0}};
        const auto eig = hermitian_eig(h);
        CHECK(eig.eigenvalues[0] == Approx(-1.0).margin(1e-12));
        CHECK(eig.eigenvalues[1] == Approx(1.0).margin(1e-12));
    }
    {
        // Hermitian part of [[0,2],[0,0]]
        const ComplexMatrix h = hermitian_part(ComplexMatrix{{0.0, 2.0}, {0.0, 0.0}});
        CHECK(hermitian_eig(h).eigenvalues.back() == Approx(1.0).margin(1e-12));
    }
    CHECK_THROWS_AS(hermitian_eig(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), NotHermitianError);
}

TEST_CASE("hermitian_eig: reconstruction, orthonormality, spectral shift") {
    detail::Rng rng(29);
    for (std::size_t n = 1; n <= 8; ++n) {
        const ComplexMatrix h = random_hermitian(n, rng);
        const auto eig = hermitian_eig(h);
        CHECK(reconstruction_residual(h, eig) <= 1e-10 * (1.0 + h.frobenius_norm()));
        const ComplexMatrix gram = adjoint(eig.eigenvectors) * eig.eigenvectors;
        CHECK((gram - ComplexMatrix::identity(n)).frobenius_norm() <= 1e-10);

        ComplexMatrix shifted = h;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) += 0.37;
        const auto eig2 = hermitian_eig(shifted);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::abs(eig2.eigenvalues[i] - (eig.eigenvalues[i] + 0.37)) <= 1e-9);
    }
}

TEST_CASE("singular_values: examples") {
    {
        const auto sv = singular_values(ComplexMatrix{{-1.0, 0.0}, {0.0, -2.0}});
        CHECK(sv[0] == Approx(2.0).margin(1e-12));
        CHECK(sv[1] == Approx(1.0).margin(1e-12));
    }
    {
        const auto sv = singular_values(ComplexMatrix{{0.0, 2.0}, {0.0, 0.0}});
        CHECK(sv[0] == Approx(2.0).margin(1e-12));
        CHECK(sv[1] == Approx(0.0).margin(1e-12));
    }
    for (const double s : singular_values(ComplexMatrix::identity(4)))
        CHECK(s == Approx(1.0).margin(1e-12));
}

TEST_CASE("singular_values: norm consistency with T*T") {
    detail::Rng rng(5);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix t = random_matrix(4, rng);
        const double direct = std::sqrt(
            hermitian_eig(hermitian_part(adjoint(t) * t)).eigenvalues.back());
        CHECK(std::abs(singular_values(t).front() - direct) <= 1e-10);
    }
}

TEST_CASE("herm_fn: examples and composition") {
    {
        const ComplexMatrix h{{4.0, 0.0}, {0.0, 9.0}};
        const ComplexMatrix r = herm_fn(h, [](double x) { return std::sqrt(x); });
        CHECK(r(0, 0).real() == Approx(2.0).margin(1e-12));
        CHECK(r(1, 1).real() == Approx(3.0).margin(1e-12));
    }
    detail::Rng rng(7);
    {
        const ComplexMatrix b = random_matrix(3, rng);
        const ComplexMatrix h = hermitian_part(adjoint(b) * b);  // PSD
        const ComplexMatrix r = herm_fn(h, [](double x) { return x; });
        CHECK((r - h).frobenius_norm() <= 1e-10 * (1.0 + h.frobenius_norm()));

        // power-family composition f(t)=t^0.4 after g(t)=t^0.7
        const ComplexMatrix lhs = herm_fn(h, [](double x) { return std::pow(x, 0.28); });
        const ComplexMatrix rhs = herm_fn(herm_fn(h, [](double x) { return std::pow(x, 0.7); }),
                                          [](double x) { return std::pow(x, 0.4); });
        CHECK((lhs - rhs).frobenius_norm() <= 1e-9);
    }
    {
        const ComplexMatrix t{{0.0, 2.0}, {0.0, 0.0}};
        const ComplexMatrix abs_t =
            herm_fn(hermitian_part(adjoint(t) * t), [](double x) { return std::sqrt(x); });
        CHECK(abs_t(0, 0).real() == Approx(0.0).margin(1e-12));
        CHECK(abs_t(1, 1).real() == Approx(2.0).margin(1e-12));
    }
    CHECK_THROWS_AS(herm_fn(ComplexMatrix{{-1.0, 0.0}, {0.0, 1.0}},
                            [](double x) { return std::sqrt(x); }),
                    NegativeSpectrumError);
}

TEST_CASE("matrix_abs: examples") {
    {
        const ComplexMatrix r = matrix_abs(ComplexMatrix{{-1.0, 0.0}, {0.0, -2.0}});
        CHECK(r(0, 0).real() == Approx(1.0).margin(1e-12));
        CHECK(r(1, 1).real() == Approx(2.0).margin(1e-12));
    }
    {
        const ComplexMatrix r = matrix_abs(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}});
        CHECK(r(0, 0).real() == Approx(0.0).margin(1e-12));
        CHECK(r(1, 1).real() == Approx(1.0).margin(1e-12));
        CHECK(std::abs(r(0, 1)) <= 1e-12);
    }
    detail::Rng rng(13);
    const ComplexMatrix u = random_unitary(3, rng);
    CHECK((matrix_abs(u) - ComplexMatrix::identity(3)).frobenius_norm() <= 1e-10);
}
