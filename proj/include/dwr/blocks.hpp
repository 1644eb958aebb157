#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "dwr/bounds.hpp"
#include "dwr/complex_matrix.hpp"
#include "dwr/eig.hpp"
#include "dwr/errors.hpp"
#include "dwr/quantities.hpp"

namespace dwr {

enum class BlockLayout { diag, antidiag, upper_left, nilpotent, triangular };

inline const char* to_string(BlockLayout l) {
    switch (l) {
        case BlockLayout::diag: return "diag";
        case BlockLayout::antidiag: return "antidiag";
        case BlockLayout::upper_left: return "upper_left";
        case BlockLayout::nilpotent: return "nilpotent";
        case BlockLayout::triangular: return "triangular";
    }
    return "?";
}

/// Symbolic 2x2 block operator matrix. Which blocks matter depends on layout:
/// diag/antidiag use A,B; upper_left ([[I,B],[0,0]]) and nilpotent ([[0,B],[0,0]])
/// use B only; triangular ([[A,B],[0,C]]) uses all three.
struct BlockSpec {
    BlockLayout layout = BlockLayout::diag;
    ComplexMatrix a, b, c;
};

namespace detail {

inline void require_block(const ComplexMatrix& m, const char* name) {
    if (!m.square()) throw DimensionMismatchError(std::string("block ") + name + " must be square");
}

inline void require_same_block(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (x.rows() != y.rows()) throw DimensionMismatchError("blocks differ in size");
}

inline ComplexMatrix block2x2(const ComplexMatrix& a11, const ComplexMatrix& a12,
                              const ComplexMatrix& a21, const ComplexMatrix& a22) {
    const std::size_t n = a11.rows();
    ComplexMatrix out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = a11(i, j);
            out(i, j + n) = a12(i, j);
            out(i + n, j) = a21(i, j);
            out(i + n, j + n) = a22(i, j);
        }
    return out;
}

// The exact dw of [[0,B],[0,0]] as a function of b = ||B||; also the tail term
// of the triangular bound. Both piecewise branches meet at b = 1/sqrt(2).
inline double nilpotent_term(double b) {
    if (b <= 1e-12) return 0.0;
    if (b < 1.0 / std::sqrt(2.0)) return b / (2.0 * std::sqrt(1.0 - b * b));
    return b * b;
}

} // namespace detail

inline ComplexMatrix assemble(const BlockSpec& spec) {
    using detail::block2x2;
    switch (spec.layout) {
        case BlockLayout::diag: {
            detail::require_block(spec.a, "A");
            detail::require_block(spec.b, "B");
            detail::require_same_block(spec.a, spec.b);
            const auto z = ComplexMatrix::zero(spec.a.rows(), spec.a.rows());
            return block2x2(spec.a, z, z, spec.b);
        }
        case BlockLayout::antidiag: {
            detail::require_block(spec.a, "A");
            detail::require_block(spec.b, "B");
            detail::require_same_block(spec.a, spec.b);
            const auto z = ComplexMatrix::zero(spec.a.rows(), spec.a.rows());
            return block2x2(z, spec.a, spec.b, z);
        }
        case BlockLayout::upper_left: {
            detail::require_block(spec.b, "B");
            const auto z = ComplexMatrix::zero(spec.b.rows(), spec.b.rows());
            return block2x2(ComplexMatrix::identity(spec.b.rows()), spec.b, z, z);
        }
        case BlockLayout::nilpotent: {
            detail::require_block(spec.b, "B");
            const auto z = ComplexMatrix::zero(spec.b.rows(), spec.b.rows());
            return block2x2(z, spec.b, z, z);
        }
        case BlockLayout::triangular: {
            detail::require_block(spec.a, "A");
            detail::require_block(spec.b, "B");
            detail::require_block(spec.c, "C");
            detail::require_same_block(spec.a, spec.b);
            detail::require_same_block(spec.a, spec.c);
            const auto z = ComplexMatrix::zero(spec.a.rows(), spec.a.rows());
            return block2x2(spec.a, spec.b, z, spec.c);
        }
    }
    throw LayoutError("unknown block layout");
}

/// dw(diag(A,B)) = max{dw(A), dw(B)}.
inline double dw_diag_exact(const ComplexMatrix& a, const ComplexMatrix& b,
                            const SolverOptions& opts = {}) {
    detail::require_block(a, "A");
    detail::require_block(b, "B");
    detail::require_same_block(a, b);
    return std::max(dw_radius(a, opts).first, dw_radius(b, opts).first);
}

/// dw([[0,B],[e^{i theta} B, 0]]) = dw(B) for every theta.
inline double dw_antidiag_same(const ComplexMatrix& b, double theta,
                               const SolverOptions& opts = {}) {
    (void)theta;  // the value is theta-independent
    detail::require_block(b, "B");
    return dw_radius(b, opts).first;
}

/// Scalars of the cubic that locates the maximizing angle for [[I,B],[0,0]].
struct CubicTheta {
    double b = 0.0;
    double p = 0.0, q = 0.0, r = 0.0, s = 0.0;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    double theta0 = 0.0;
    bool from_grid = false;  ///< discriminant fallback fired (s < 0)
};

inline CubicTheta cubic_theta(double b) {
    if (!(b > 0.0)) throw NonPositiveNormError("need ||B|| > 0");
    CubicTheta ct;
    ct.b = b;
    const double b2 = b * b;
    ct.p = -(2.0 * b2 - 5.0) / (2.0 * b);
    ct.q = -(2.0 * b2 - 2.0) / b2;
    ct.r = -3.0 / (2.0 * b);
    const double b6 = b2 * b2 * b2;
    ct.s = (8.0 * b6 * b2 + 20.0 * b6 + 45.0 * b2 * b2 + 61.0 * b2 + 28.0) / (432.0 * b6);
    ct.alpha = (2.0 * ct.p * ct.p * ct.p - 9.0 * ct.p * ct.q + 27.0 * ct.r) / 27.0;
    if (ct.s >= 0.0) {
        const double root = std::sqrt(ct.s);
        ct.beta = std::cbrt(-ct.alpha / 2.0 + root);
        ct.gamma = std::cbrt(-ct.alpha / 2.0 - root);
        ct.theta0 = std::atan(ct.beta + ct.gamma - ct.p / 3.0);
    } else {
        // negative discriminant: locate theta0 on a dense grid instead
        ct.from_grid = true;
        double best = -1.0, best_theta = 0.0;
        const int grid = 1000000;
        for (int k = 0; k <= grid; ++k) {
            const double theta = (detail::kPi / 2.0) * k / grid;
            const double u = std::cos(theta) + b * std::sin(theta);
            const double g = u * u * (std::cos(theta) * std::cos(theta) + u * u);
            if (g > best) {
                best = g;
                best_theta = theta;
            }
        }
        ct.theta0 = best_theta;
    }
    return ct;
}

/// Exact dw([[I,B],[0,0]]): sqrt(2) at B = 0, else the closed form at theta0.
inline double dw_I_B_exact(const ComplexMatrix& b) {
    detail::require_block(b, "B");
    const double nb = op_norm(b);
    if (nb <= 1e-12) return std::sqrt(2.0);
    const CubicTheta ct = cubic_theta(nb);
    const double u = std::cos(ct.theta0) + nb * std::sin(ct.theta0);
    const double c0 = std::cos(ct.theta0);
    return u * std::sqrt(c0 * c0 + u * u);
}

/// Exact dw([[0,B],[0,0]]): piecewise in ||B|| around 1/sqrt(2).
inline double dw_nilpotent_exact(const ComplexMatrix& b) {
    detail::require_block(b, "B");
    return detail::nilpotent_term(op_norm(b));
}

/// Lower bound for dw([[0,A],[B,0]]):
/// (1/2)(max{dw(A+B), dw(A-B)} - ||A*B + B*A||).
inline double dw_antidiag_lower(const ComplexMatrix& a, const ComplexMatrix& b,
                                const SolverOptions& opts = {}) {
    detail::require_block(a, "A");
    detail::require_block(b, "B");
    detail::require_same_block(a, b);
    const double dwp = dw_radius(a + b, opts).first;
    const double dwm = dw_radius(a - b, opts).first;
    const double cross = detail::herm_norm(hermitian_part(adjoint(a) * b + adjoint(b) * a));
    return std::max(0.0, 0.5 * (std::max(dwp, dwm) - cross));
}

/// Upper bound for dw([[0,A],[B,0]]) as the sum of the two nilpotent exact values.
inline double dw_antidiag_upper_piecewise(const ComplexMatrix& a, const ComplexMatrix& b) {
    detail::require_block(a, "A");
    detail::require_block(b, "B");
    detail::require_same_block(a, b);
    return detail::nilpotent_term(op_norm(a)) + detail::nilpotent_term(op_norm(b));
}

/// Upper bound for dw([[0,A],[B,0]]) via functional calculus:
/// dw^2 <= (1/2) max{|| |B|^2 + |A*|^2 + 2|B|^4 ||, || |A|^2 + |B*|^2 + 2|A|^4 ||}.
inline double dw_antidiag_upper_abs(const ComplexMatrix& a, const ComplexMatrix& b,
                                    const SolverOptions& opts = {}) {
    (void)opts;
    detail::require_block(a, "A");
    detail::require_block(b, "B");
    detail::require_same_block(a, b);
    const detail::PsdPowers pa(hermitian_part(adjoint(a) * a));
    const detail::PsdPowers pb(hermitian_part(adjoint(b) * b));
    const ComplexMatrix qa = hermitian_part(a * adjoint(a));
    const ComplexMatrix qb = hermitian_part(b * adjoint(b));
    const double first = detail::herm_lambda_max(pb.pow(1.0) + qa + Complex(2.0) * pb.pow(2.0));
    const double second = detail::herm_lambda_max(pa.pow(1.0) + qb + Complex(2.0) * pa.pow(2.0));
    return std::sqrt(0.5 * std::max(first, second));
}

/// Norm-only upper bound for dw([[0,A],[B,0]]), exact under the attainment
/// condition. Returns the value and a tag naming the branch that fired plus
/// whether a numerical eigenvector check certifies attainment.
inline std::pair<double, std::string> dw_antidiag_upper_norm(const ComplexMatrix& a,
                                                             const ComplexMatrix& b) {
    detail::require_block(a, "A");
    detail::require_block(b, "B");
    detail::require_same_block(a, b);
    const double na = op_norm(a);
    const double nb = op_norm(b);
    if (na == 0.0 || nb == 0.0) throw ZeroBlockError("both blocks must be non-zero");

    const double ratio = (na - nb) / (na + nb);
    const bool ratio_branch = (-1.0 / (2.0 * nb * nb) < ratio) && (ratio < 1.0 / (2.0 * na * na));
    double value_sq;
    std::string tag;
    if (ratio_branch) {
        value_sq = ((na + nb) * (na + nb) + 4.0 * na * na * nb * nb) /
                   (4.0 * (1.0 - (na - nb) * (na - nb)));
        tag = "ratio";
    } else {
        value_sq = std::max(std::pow(na, 4.0), std::pow(nb, 4.0));
        tag = "max-norm4";
    }

    // attainment: Au0 = ||A|| u0, Bv0 = ||B|| v0, u0 parallel to v0 with real ratio
    const auto [sa, u0] = extremal_singular_pair(a, +1);
    const auto [sb, v0] = extremal_singular_pair(b, +1);
    const auto au = matvec(a, u0);
    const auto bv = matvec(b, v0);
    double res_a = 0.0, res_b = 0.0, diff_minus = 0.0, diff_plus = 0.0;
    for (std::size_t i = 0; i < u0.size(); ++i) {
        res_a += std::norm(au[i] - sa * u0[i]);
        res_b += std::norm(bv[i] - sb * v0[i]);
        diff_minus += std::norm(u0[i] - v0[i]);
        diff_plus += std::norm(u0[i] + v0[i]);
    }
    const bool attained = std::sqrt(res_a) <= 1e-8 && std::sqrt(res_b) <= 1e-8 &&
                          std::sqrt(std::min(diff_minus, diff_plus)) <= 1e-8;
    tag += attained ? ";attainment-certified" : ";attainment-unverified";
    return {std::sqrt(value_sq), tag};
}

/// Upper bound for dw([[A,B],[0,C]]) from block norms alone:
/// dw^2 <= (9/4) max ||.||^2 + ((14 + 6 sqrt 5)/4) max ||.||^4.
inline double dw_triangular_upper_35(const ComplexMatrix& a, const ComplexMatrix& b,
                                     const ComplexMatrix& c) {
    detail::require_block(a, "A");
    detail::require_block(b, "B");
    detail::require_block(c, "C");
    detail::require_same_block(a, b);
    detail::require_same_block(a, c);
    const double m2 = std::max({op_norm(a), op_norm(b), op_norm(c)});
    const double max_sq = m2 * m2;
    const double max_4 = max_sq * max_sq;
    return std::sqrt(2.25 * max_sq + (14.0 + 6.0 * std::sqrt(5.0)) / 4.0 * max_4);
}

/// Upper bound for dw([[A,B],[0,C]]):
/// max{dw(A), dw(C)} + ||A*B|| + nilpotent term of ||B||. Equality at B = 0.
inline double dw_triangular_upper_34(const ComplexMatrix& a, const ComplexMatrix& b,
                                     const ComplexMatrix& c, const SolverOptions& opts = {}) {
    detail::require_block(a, "A");
    detail::require_block(b, "B");
    detail::require_block(c, "C");
    detail::require_same_block(a, b);
    detail::require_same_block(a, c);
    const double head = std::max(dw_radius(a, opts).first, dw_radius(c, opts).first);
    return head + op_norm(adjoint(a) * b) + detail::nilpotent_term(op_norm(b));
}

/// Shift matrix on C^n: direction = +1 puts ones on the subdiagonal (right
/// shift), -1 on the superdiagonal (left shift).
inline ComplexMatrix shift_matrix(int n, int direction = +1) {
    if (n < 2) throw BadDimensionError("need n >= 2");
    ComplexMatrix t(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((direction >= 0 && j == i - 1) || (direction < 0 && j == i + 1)) t(i, j) = 1.0;
    return t;
}

struct ShiftBounds {
    double lower = 0.0;
    double upper = 0.0;
    double dw_estimate = 0.0;
};

/// sqrt(cos^2(pi/n) + 1) <= dw(shift on C^n) <= sqrt(cos^2(pi/(n+1)) + 1),
/// with the search estimate in between.
inline ShiftBounds shift_bounds(int n, const SolverOptions& opts = {}) {
    if (n < 2) throw BadDimensionError("need n >= 2");
    ShiftBounds out;
    const double cn = std::cos(detail::kPi / n);
    const double cn1 = std::cos(detail::kPi / (n + 1));
    out.lower = std::sqrt(cn * cn + 1.0);
    out.upper = std::sqrt(cn1 * cn1 + 1.0);
    out.dw_estimate = dw_radius(shift_matrix(n, +1), opts).first;
    return out;
}

} // namespace dwr
