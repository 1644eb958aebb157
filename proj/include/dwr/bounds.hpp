#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dwr/complex_matrix.hpp"
#include "dwr/eig.hpp"
#include "dwr/errors.hpp"
#include "dwr/quantities.hpp"

namespace dwr {

enum class BoundKind { lower, upper };

inline const char* to_string(BoundKind k) { return k == BoundKind::lower ? "lower" : "upper"; }

/// One catalog entry. `value` is always on the dw scale; squared forms are
/// converted before they land here. `detail` carries interesting intermediate
/// scalars (optimal theta or lambda, component quantities).
struct BoundResult {
    std::string id;
    BoundKind kind = BoundKind::upper;
    double value = 0.0;
    std::string citation;
    std::map<std::string, double> detail;
};

struct EqualityDiagnostics {
    bool dw_eq_w = false;                        ///< dw(T) = w(T), true iff T = 0
    bool dw_eq_norm_sq_consistent = true;        ///< necessary condition for dw(T) = ||T||^2
    double norm_witness_crawford_value = 0.0;    ///< |<Tx0,x0>| at the norm-attaining witness
};

namespace detail {

inline double herm_lambda_max(const ComplexMatrix& h) {
    return hermitian_eig(h).eigenvalues.back();
}

inline double herm_lambda_min(const ComplexMatrix& h) {
    return hermitian_eig(h).eigenvalues.front();
}

/// Operator norm of a Hermitian matrix, max |eigenvalue|. Also its numerical
/// radius, since w = spectral radius for Hermitian input.
inline double herm_norm(const ComplexMatrix& h) {
    const auto ev = hermitian_eig(h).eigenvalues;
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

/// Shared spectral data of a PSD matrix; pow(c) evaluates M^c cheaply for
/// several exponents off one decomposition.
class PsdPowers {
public:
    explicit PsdPowers(const ComplexMatrix& m) : eig_(hermitian_eig(m)) {
        for (auto& lambda : eig_.eigenvalues) {
            if (lambda < -1e-10) throw NegativeSpectrumError("matrix is not PSD");
            if (lambda < 0.0) lambda = 0.0;
        }
    }

    ComplexMatrix pow(double c) const {
        const std::size_t n = eig_.eigenvalues.size();
        std::vector<double> fv(n);
        for (std::size_t k = 0; k < n; ++k) fv[k] = std::pow(eig_.eigenvalues[k], c);
        ComplexMatrix out(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Complex acc(0.0, 0.0);
                for (std::size_t k = 0; k < n; ++k)
                    acc += eig_.eigenvectors(i, k) * fv[k] * std::conj(eig_.eigenvectors(j, k));
                out(i, j) = acc;
            }
        return hermitian_part(out);
    }

    double lambda_max() const { return eig_.eigenvalues.back(); }

private:
    EigenDecomposition eig_;
};

inline BoundResult make_bound(std::string id, BoundKind kind, double value, std::string citation) {
    BoundResult b;
    b.id = std::move(id);
    b.kind = kind;
    b.value = value;
    b.citation = std::move(citation);
    return b;
}

} // namespace detail

/// max{w, ||T||^2} <= dw <= sqrt(w^2 + ||T||^4).
inline std::array<BoundResult, 2> classic_bounds(const ComplexMatrix& t,
                                                 const SolverOptions& opts = {}) {
    detail::require_square(t);
    const double w = detail::num_radius_value(t, opts);
    const double nrm = op_norm(t);
    auto lower = detail::make_bound("classic.lower", BoundKind::lower, std::max(w, nrm * nrm),
                                    "ineq. (1.1) lower");
    auto upper = detail::make_bound("classic.upper", BoundKind::upper,
                                    std::sqrt(w * w + std::pow(nrm, 4.0)), "ineq. (1.1) upper");
    lower.detail = {{"num_radius", w}, {"op_norm", nrm}};
    upper.detail = lower.detail;
    return {lower, upper};
}

/// dw^2 >= max{w^2 + c^2(T*T), ||T||^4 + c^2(T)} and
/// dw^2 >= 2 max{w c(T*T), c(T) ||T||^2}.
inline std::array<BoundResult, 2> lower_thm24(const ComplexMatrix& t,
                                              const SolverOptions& opts = {}) {
    detail::require_square(t);
    const double w = detail::num_radius_value(t, opts);
    const double nrm = op_norm(t);
    const double c = detail::crawford_value(t, opts);
    const double ctt = crawford_psd(hermitian_part(adjoint(t) * t));
    const double part1_sq = std::max(w * w + ctt * ctt, std::pow(nrm, 4.0) + c * c);
    const double part2_sq = 2.0 * std::max(w * ctt, c * nrm * nrm);
    auto p1 = detail::make_bound("thm2.4i", BoundKind::lower, std::sqrt(part1_sq), "Th. 2.4 (i)");
    auto p2 = detail::make_bound("thm2.4ii", BoundKind::lower, std::sqrt(part2_sq), "Th. 2.4 (ii)");
    p1.detail = {{"num_radius", w}, {"op_norm", nrm}, {"crawford", c}, {"crawford_tt", ctt}};
    p2.detail = p1.detail;
    return {p1, p2};
}

/// dw^2 <= sup_theta w^2(e^{i theta} T + T*T) - 2 c(T) m^2(T).
inline BoundResult upper_thm26(const ComplexMatrix& t, const SolverOptions& opts = {}) {
    detail::require_square(t);
    const SupTheta sup = sup_theta_w(t, +1, opts);
    const double c = detail::crawford_value(t, opts);
    const double m = min_modulus(t);
    const double sq = sup.value * sup.value - 2.0 * c * m * m;
    auto b = detail::make_bound("thm2.6", BoundKind::upper, std::sqrt(std::max(0.0, sq)),
                                "Th. 2.6");
    b.detail = {{"sup_w", sup.value}, {"theta", sup.theta}, {"crawford", c}, {"min_modulus", m}};
    return b;
}

/// (1/2) sup_theta [w^2(e^{i theta}T + T*T) + c^2(e^{i theta}T - T*T)] <= dw^2
/// <= (1/2)[w^2(T + T*T) + w^2(T - T*T)].
inline std::array<BoundResult, 2> bounds_thm28(const ComplexMatrix& t,
                                               const SolverOptions& opts = {}) {
    detail::require_square(t);
    const ComplexMatrix p = hermitian_part(adjoint(t) * t);
    const SupTheta sup = sup_theta_wc(t, opts);
    const double wp = detail::num_radius_value(t + p, opts);
    const double wm = detail::num_radius_value(t - p, opts);
    auto lower = detail::make_bound("thm2.8.lower", BoundKind::lower, std::sqrt(0.5 * sup.value),
                                    "Th. 2.8 lower");
    auto upper = detail::make_bound("thm2.8.upper", BoundKind::upper,
                                    std::sqrt(0.5 * (wp * wp + wm * wm)), "Th. 2.8 upper");
    lower.detail = {{"sup_wc", sup.value}, {"theta", sup.theta}};
    upper.detail = {{"w_plus", wp}, {"w_minus", wm}};
    return {lower, upper};
}

/// Power-family functional calculus bound, f(t) = t^s, g(t) = t^{1-s}:
/// dw^2 <= ||(1/a1)|T|^{2 s a1} + (1/b1)|T*|^{2(1-s)b1} + (1/a2)|T*T|^{2 s a2}
///          + (1/b2)|T*T|^{2(1-s)b2}||.
inline BoundResult upper_thm212_power(const ComplexMatrix& t, double s, double alpha1,
                                      double alpha2, const SolverOptions& opts = {}) {
    (void)opts;
    detail::require_square(t);
    if (!(s > 0.0 && s < 1.0) || !(alpha1 > 1.0) || !(alpha2 > 1.0))
        throw BadExponentError("need s in (0,1) and alpha_i > 1");
    const double beta1 = alpha1 / (alpha1 - 1.0);
    const double beta2 = alpha2 / (alpha2 - 1.0);
    const detail::PsdPowers p(hermitian_part(adjoint(t) * t));   // |T|^c = P^{c/2}
    const detail::PsdPowers q(hermitian_part(t * adjoint(t)));   // |T*|^c = Q^{c/2}
    ComplexMatrix m = (Complex(1.0 / alpha1) * p.pow(s * alpha1));
    m += Complex(1.0 / beta1) * q.pow((1.0 - s) * beta1);
    m += Complex(1.0 / alpha2) * p.pow(2.0 * s * alpha2);
    m += Complex(1.0 / beta2) * p.pow(2.0 * (1.0 - s) * beta2);
    auto b = detail::make_bound("thm2.12", BoundKind::upper,
                                std::sqrt(detail::herm_lambda_max(m)), "Th. 2.12");
    b.detail = {{"s", s}, {"alpha1", alpha1}, {"alpha2", alpha2}};
    return b;
}

/// (i) dw^2 <= ||(1/a)|T|^a(1+|T|^a) + (1/b)(|T*|^b + |T|^{2b})||,
/// (ii) the a = 2 case dw^2 <= (1/2)|| |T|^2 + |T*|^2 + 2|T|^4 ||.
inline std::array<BoundResult, 2> upper_cor213(const ComplexMatrix& t, double alpha,
                                               const SolverOptions& opts = {}) {
    (void)opts;
    detail::require_square(t);
    if (!(alpha > 1.0)) throw BadExponentError("need alpha > 1");
    const double beta = alpha / (alpha - 1.0);
    const detail::PsdPowers p(hermitian_part(adjoint(t) * t));
    const detail::PsdPowers q(hermitian_part(t * adjoint(t)));
    ComplexMatrix mi = Complex(1.0 / alpha) * (p.pow(alpha / 2.0) + p.pow(alpha));
    mi += Complex(1.0 / beta) * (q.pow(beta / 2.0) + p.pow(beta));
    ComplexMatrix mii = Complex(0.5) * (p.pow(1.0) + q.pow(1.0) + Complex(2.0) * p.pow(2.0));
    auto part_i = detail::make_bound("cor2.13i", BoundKind::upper,
                                     std::sqrt(detail::herm_lambda_max(mi)), "Cor. 2.13 (i)");
    part_i.detail = {{"alpha", alpha}};
    auto part_ii = detail::make_bound("cor2.13ii", BoundKind::upper,
                                      std::sqrt(detail::herm_lambda_max(mii)), "Cor. 2.13 (ii)");
    return {part_i, part_ii};
}

/// (i) dw^2 <= || |T|^2 + |T|^4 ||, (ii) dw^2 <= (1/2)(w(T^2) + ||T||^2) + ||T||^4.
inline std::array<BoundResult, 2> upper_thm216(const ComplexMatrix& t,
                                               const SolverOptions& opts = {}) {
    detail::require_square(t);
    const detail::PsdPowers p(hermitian_part(adjoint(t) * t));
    const double part_i_sq = detail::herm_lambda_max(p.pow(1.0) + p.pow(2.0));
    const double w_t2 = detail::num_radius_value(t * t, opts);
    const double nrm = op_norm(t);
    const double part_ii_sq = 0.5 * (w_t2 + nrm * nrm) + std::pow(nrm, 4.0);
    auto part_i =
        detail::make_bound("thm2.16i", BoundKind::upper, std::sqrt(part_i_sq), "Th. 2.16 (i)");
    auto part_ii =
        detail::make_bound("thm2.16ii", BoundKind::upper, std::sqrt(part_ii_sq), "Th. 2.16 (ii)");
    part_ii.detail = {{"w_t_squared", w_t2}, {"op_norm", nrm}};
    return {part_i, part_ii};
}

namespace detail {

// Simple deterministic Nelder-Mead on the plane.
template <class F>
inline std::pair<std::array<double, 2>, double> nelder_mead_2d(F&& fn, std::array<double, 2> x0,
                                                               double scale, int max_iter,
                                                               double tol) {
    using P = std::array<double, 2>;
    std::array<P, 3> xs = {P{x0[0], x0[1]}, P{x0[0] + scale, x0[1]}, P{x0[0], x0[1] + scale}};
    std::array<double, 3> fs = {fn(xs[0]), fn(xs[1]), fn(xs[2])};
    auto order = [&] {
        if (fs[0] > fs[1]) { std::swap(fs[0], fs[1]); std::swap(xs[0], xs[1]); }
        if (fs[1] > fs[2]) { std::swap(fs[1], fs[2]); std::swap(xs[1], xs[2]); }
        if (fs[0] > fs[1]) { std::swap(fs[0], fs[1]); std::swap(xs[0], xs[1]); }
    };
    for (int it = 0; it < max_iter; ++it) {
        order();
        const double spread = std::max(
            std::hypot(xs[1][0] - xs[0][0], xs[1][1] - xs[0][1]),
            std::hypot(xs[2][0] - xs[0][0], xs[2][1] - xs[0][1]));
        if (spread < tol) break;
        const P centroid = {(xs[0][0] + xs[1][0]) / 2.0, (xs[0][1] + xs[1][1]) / 2.0};
        auto along = [&](double coeff) {
            return P{centroid[0] + coeff * (centroid[0] - xs[2][0]),
                     centroid[1] + coeff * (centroid[1] - xs[2][1])};
        };
        const P xr = along(1.0);
        const double fr = fn(xr);
        if (fr < fs[0]) {
            const P xe = along(2.0);
            const double fe = fn(xe);
            if (fe < fr) { xs[2] = xe; fs[2] = fe; } else { xs[2] = xr; fs[2] = fr; }
        } else if (fr < fs[1]) {
            xs[2] = xr;
            fs[2] = fr;
        } else {
            const P xc = along(-0.5);
            const double fc = fn(xc);
            if (fc < fs[2]) {
                xs[2] = xc;
                fs[2] = fc;
            } else {
                for (int k = 1; k < 3; ++k) {
                    xs[k] = {xs[0][0] + 0.5 * (xs[k][0] - xs[0][0]),
                             xs[0][1] + 0.5 * (xs[k][1] - xs[0][1])};
                    fs[k] = fn(xs[k]);
                }
            }
        }
    }
    order();
    return {xs[0], fs[0]};
}

} // namespace detail

/// dw^2 <= inf over complex lambda of
/// (2||Re(conj(lambda) T)|| + ||T*T - 2 Re(conj(lambda) T)||)^2
///   + 2||Re(conj(lambda) T)|| - |lambda|^2 + w^2(T - lambda I).
/// lambda = 0 recovers the classic upper bound, so the result never exceeds it.
inline BoundResult upper_thm219(const ComplexMatrix& t, const SolverOptions& opts = {}) {
    detail::require_square(t);
    const std::size_t n = t.rows();
    const ComplexMatrix hr = hermitian_part(t);
    const ComplexMatrix hi = imaginary_part(t);
    const ComplexMatrix p = hermitian_part(adjoint(t) * t);

    auto objective = [&](std::array<double, 2> lam) {
        const double re = lam[0], im = lam[1];
        // Re(conj(lambda) T) = Re(lambda) Re(T) + Im(lambda) Im(T)
        ComplexMatrix h(n, n);
        for (std::size_t k = 0; k < n * n; ++k)
            h.data()[k] = re * hr.data()[k] + im * hi.data()[k];
        ComplexMatrix m2 = p;
        for (std::size_t k = 0; k < n * n; ++k) m2.data()[k] -= 2.0 * h.data()[k];
        const double nh = detail::herm_norm(h);
        const double nm2 = detail::herm_norm(m2);
        ComplexMatrix shifted = t;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= Complex(re, im);
        const double w = detail::num_radius_value(shifted, opts);
        return (2.0 * nh + nm2) * (2.0 * nh + nm2) + 2.0 * nh - (re * re + im * im) + w * w;
    };

    const double radius = 2.0 * op_norm(t);
    std::array<double, 2> best_lam = {0.0, 0.0};
    double best = objective(best_lam);
    if (radius > 0.0) {
        const int g = opts.lambda_grid;
        for (int i = 0; i < g; ++i) {
            const double re = -radius + 2.0 * radius * i / (g - 1);
            for (int j = 0; j < g; ++j) {
                const double im = -radius + 2.0 * radius * j / (g - 1);
                if (re * re + im * im > radius * radius + 1e-12) continue;
                const double v = objective({re, im});
                if (v < best) {
                    best = v;
                    best_lam = {re, im};
                }
            }
        }
        auto [lam, val] = detail::nelder_mead_2d(objective, best_lam,
                                                 std::max(radius / (g - 1), 1e-6),
                                                 opts.nelder_mead_iterations, opts.simplex_tol);
        if (val < best) {
            best = val;
            best_lam = lam;
        }
    }
    auto b = detail::make_bound("thm2.19", BoundKind::upper, std::sqrt(std::max(0.0, best)),
                                "Th. 2.19");
    b.detail = {{"lambda_re", best_lam[0]}, {"lambda_im", best_lam[1]}, {"objective", best}};
    return b;
}

/// dw(S+T) <= dw(S) + dw(T) + w(S*T + T*S). Returns (lhs, rhs).
inline std::pair<double, double> subadditivity_check(const ComplexMatrix& s,
                                                     const ComplexMatrix& t,
                                                     const SolverOptions& opts = {}) {
    detail::require_square(s);
    detail::require_square(t);
    if (s.rows() != t.rows()) throw DimensionMismatchError("summands differ in size");
    const double lhs = dw_radius(s + t, opts).first;
    const ComplexMatrix cross = hermitian_part(adjoint(s) * t + adjoint(t) * s);
    const double w_cross = detail::herm_norm(cross);
    const double rhs = dw_radius(s, opts).first + dw_radius(t, opts).first + w_cross;
    return {lhs, rhs};
}

namespace detail {

// inf over unit x of (||Tx|| - ||T*x||)^2 by multi-start projected descent.
inline double zs22_infimum(const ComplexMatrix& t, const SolverOptions& opts) {
    const std::size_t n = t.rows();
    const ComplexMatrix p = hermitian_part(adjoint(t) * t);
    const ComplexMatrix q = hermitian_part(t * adjoint(t));
    auto value = [&](const std::vector<Complex>& x) {
        const double u = std::sqrt(std::max(0.0, inner(matvec(p, x), x).real()));
        const double v = std::sqrt(std::max(0.0, inner(matvec(q, x), x).real()));
        return (u - v) * (u - v);
    };
    auto descend = [&](std::vector<Complex> x) {
        double f = value(x);
        std::vector<Complex> g(n), r(n), trial(n);
        double step = 1.0;
        for (int it = 0; it < opts.max_ascent_iterations; ++it) {
            const auto px = matvec(p, x);
            const auto qx = matvec(q, x);
            const double u = std::sqrt(std::max(0.0, inner(px, x).real()));
            const double v = std::sqrt(std::max(0.0, inner(qx, x).real()));
            if (u < 1e-14 || v < 1e-14) break;
            const double d = u - v;
            for (std::size_t i = 0; i < n; ++i) g[i] = d * (px[i] / u - qx[i] / v);
            double gx = 0.0;
            for (std::size_t i = 0; i < n; ++i) gx += (g[i] * std::conj(x[i])).real();
            for (std::size_t i = 0; i < n; ++i) r[i] = g[i] - gx * x[i];
            if (norm2(r) <= opts.gradient_tol) break;
            bool improved = false;
            double eta = step;
            for (int half = 0; half < 60; ++half) {
                for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] - eta * r[i];
                normalize(trial);
                const double fv = value(trial);
                if (fv < f) {
                    x = trial;
                    f = fv;
                    step = std::min(eta * 2.0, 1.0e3);
                    improved = true;
                    break;
                }
                eta *= 0.5;
            }
            if (!improved) break;
        }
        return f;
    };

    double best = std::numeric_limits<double>::infinity();
    best = std::min(best, descend(extremal_singular_pair(t, +1).second));
    best = std::min(best, descend(extremal_singular_pair(t, -1).second));
    Rng rng(mix_seed(opts.seed, 0x25B2));
    for (int k = 0; k < opts.restarts; ++k) best = std::min(best, descend(rng.unit_vector(n)));
    return best;
}

} // namespace detail

/// The seven reference bounds quoted alongside the main results.
inline std::vector<BoundResult> zs_reference_bounds(const ComplexMatrix& t,
                                                    const SolverOptions& opts = {}) {
    detail::require_square(t);
    const ComplexMatrix p = hermitian_part(adjoint(t) * t);
    const ComplexMatrix q = hermitian_part(t * adjoint(t));
    const detail::PsdPowers pp(p);
    const ComplexMatrix p2 = pp.pow(2.0);
    const double w = detail::num_radius_value(t, opts);
    const double nrm = op_norm(t);
    const double c = detail::crawford_value(t, opts);

    std::vector<BoundResult> out;

    {  // w^2(|T|^2 - T) + 2 ||T||^2 w(T)
        const double wb = detail::num_radius_value(p - t, opts);
        out.push_back(detail::make_bound("zs2.1", BoundKind::upper,
                                         std::sqrt(wb * wb + 2.0 * nrm * nrm * w),
                                         "[ZS] Th. 2.1"));
    }
    {  // (1/2) w(|T|^2 + 2|T|^4 + |T*|^2) - (1/2) inf (||Tx|| - ||T*x||)^2
        const double wh = detail::herm_norm(p + Complex(2.0) * p2 + q);
        const double inf = detail::zs22_infimum(t, opts);
        auto b = detail::make_bound("zs2.2", BoundKind::upper,
                                    std::sqrt(std::max(0.0, 0.5 * wh - 0.5 * inf)),
                                    "[ZS] Th. 2.2");
        b.detail = {{"infimum", inf}};
        out.push_back(b);
    }
    {  // (1/2) w(T^2) + (1/4) w(|T|^2 + |T*|^2) + 4w^2 (2w^2 - c^2 + 2w sqrt(w^2 - c^2))
        const double wt2 = detail::num_radius_value(t * t, opts);
        const double wpq = detail::herm_norm(p + q);
        const double root = std::sqrt(std::max(0.0, w * w - c * c));
        const double tail = 4.0 * w * w * (2.0 * w * w - c * c + 2.0 * w * root);
        out.push_back(detail::make_bound("zs2.7", BoundKind::upper,
                                         std::sqrt(std::max(0.0, 0.5 * wt2 + 0.25 * wpq + tail)),
                                         "[ZS] Th. 2.7"));
    }
    const double w_p_t = detail::num_radius_value((adjoint(t) * t) * t, opts);  // w(|T|^2 T)
    {  // max{||T||^2, ||T||^4} + sqrt(2) w(|T|^2 T)
        const double head = std::max(nrm * nrm, std::pow(nrm, 4.0));
        out.push_back(detail::make_bound("zs2.13", BoundKind::upper,
                                         std::sqrt(head + std::sqrt(2.0) * w_p_t),
                                         "[ZS] Th. 2.13"));
    }
    {  // (1/2)(w(|T|^4 + |T|^2) + w(|T|^4 - |T|^2)) + sqrt(2) w(|T|^2 T)
        const double w_sum = detail::herm_norm(p2 + p);
        const double w_diff = detail::herm_norm(p2 - p);
        out.push_back(detail::make_bound(
            "zs2.14", BoundKind::upper,
            std::sqrt(0.5 * (w_sum + w_diff) + std::sqrt(2.0) * w_p_t), "[ZS] Th. 2.14"));
    }
    {  // max{w(T), w(|T|^2)} (w(|T|^4 + |T|^2) + 2 w(|T|^2 T))^(1/2)
        const double head = std::max(w, detail::herm_norm(p));
        const double w_sum = detail::herm_norm(p2 + p);
        out.push_back(detail::make_bound(
            "zs2.16", BoundKind::upper, std::sqrt(head * std::sqrt(w_sum + 2.0 * w_p_t)),
            "[ZS] Th. 2.16"));
    }
    {  // ||T|| max{w(T), w(|T|^2)} (1 + ||T||^2 + 2 w(T))^(1/2)
        const double head = std::max(w, detail::herm_norm(p));
        out.push_back(detail::make_bound(
            "zs2.17", BoundKind::upper,
            std::sqrt(nrm * head * std::sqrt(1.0 + nrm * nrm + 2.0 * w)), "[ZS] Th. 2.17"));
    }
    return out;
}

/// Diagnostics for the equality cases of the classic lower bound.
inline EqualityDiagnostics equality_diagnostics(const ComplexMatrix& t,
                                                const SolverOptions& opts = {}) {
    detail::require_square(t);
    EqualityDiagnostics d;
    const double nrm = op_norm(t);
    d.dw_eq_w = nrm <= 1e-12;
    const auto [sigma, x0] = extremal_singular_pair(t, +1);
    (void)sigma;
    d.norm_witness_crawford_value = std::abs(quadratic_form(t, x0));
    const double dw = dw_radius(t, opts).first;
    if (std::abs(dw - nrm * nrm) <= 1e-6) {
        const double c = detail::crawford_value(t, opts);
        d.dw_eq_norm_sq_consistent = std::abs(d.norm_witness_crawford_value - c) <= 1e-6;
    }
    return d;
}

/// Every bound at default parameters (s = 1/2, alpha = 2) plus the dw estimate
/// as pseudo-entry "dw.est". Lowers sort descending, uppers ascending, ties by id.
inline std::vector<BoundResult> full_catalog(const ComplexMatrix& t,
                                             const SolverOptions& opts = {},
                                             std::optional<double> dw_estimate = std::nullopt) {
    detail::require_square(t);
    std::vector<BoundResult> all;
    {
        auto cb = classic_bounds(t, opts);
        all.push_back(cb[0]);
        all.push_back(cb[1]);
    }
    {
        auto lb = lower_thm24(t, opts);
        all.push_back(lb[0]);
        all.push_back(lb[1]);
    }
    all.push_back(upper_thm26(t, opts));
    {
        auto b28 = bounds_thm28(t, opts);
        all.push_back(b28[0]);
        all.push_back(b28[1]);
    }
    all.push_back(upper_thm212_power(t, 0.5, 2.0, 2.0, opts));
    {
        auto c13 = upper_cor213(t, 2.0, opts);
        all.push_back(c13[0]);
        all.push_back(c13[1]);
    }
    {
        auto t16 = upper_thm216(t, opts);
        all.push_back(t16[0]);
        all.push_back(t16[1]);
    }
    all.push_back(upper_thm219(t, opts));
    for (auto& b : zs_reference_bounds(t, opts)) all.push_back(std::move(b));

    const double dw = dw_estimate ? *dw_estimate : dw_radius(t, opts).first;
    all.push_back(detail::make_bound("dw.est", BoundKind::lower, dw, "search estimate"));

    std::stable_sort(all.begin(), all.end(), [](const BoundResult& a, const BoundResult& b) {
        if (a.kind != b.kind) return a.kind == BoundKind::lower;
        if (a.kind == BoundKind::lower) {
            if (a.value != b.value) return a.value > b.value;
        } else {
            if (a.value != b.value) return a.value < b.value;
        }
        return a.id < b.id;
    });
    return all;
}

} // namespace dwr
