#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <tuple>
#include <utility>
#include <vector>

#include "dwr/complex_matrix.hpp"
#include "dwr/detail/jacobi.hpp"
#include "dwr/detail/rng.hpp"
#include "dwr/eig.hpp"
#include "dwr/errors.hpp"

namespace dwr {

/// Knobs for every randomized or grid-based search. Defaults are the
/// documented production parameters; tests may shrink them.
struct SolverOptions {
    int theta_grid = 2048;          ///< support-function sweep resolution
    int sup_theta_grid = 512;       ///< outer grid of the sup-theta quantities
    int dw_theta_grid = 256;        ///< shell sweep, theta direction
    int dw_phi_grid = 129;          ///< shell sweep, phi direction
    int restarts = 64;              ///< gradient ascent/descent multistarts
    int max_ascent_iterations = 500;
    double gradient_tol = 1e-10;
    double refine_width = 1e-12;    ///< golden-section bracket target
    double sweep_eig_tol = 1e-9;    ///< shell-sweep candidate eigensolves; ascent polishes after
    std::uint64_t seed = 0x5EED;
    int degenerate_combos = 16;
    double degenerate_gap = 1e-9;
    int lambda_grid = 41;           ///< per axis, inf-over-lambda bound
    int nelder_mead_iterations = 200;
    double simplex_tol = 1e-10;
};

/// A unit vector together with the objective value it achieves.
struct Witness {
    std::vector<Complex> vector;
    double value = 0.0;
};

struct SolverMeta {
    int theta_grid = 0;
    int dw_theta_grid = 0;
    int dw_phi_grid = 0;
    int restarts = 0;
    std::uint64_t seed = 0;
    int refinement_evals = 0;
    int ascent_iterations = 0;
};

struct NRProfile {
    double op_norm = 0.0;
    double min_modulus = 0.0;
    double num_radius = 0.0;
    double crawford = 0.0;
    double dw_estimate = 0.0;
    Witness norm_witness, min_witness, num_radius_witness, crawford_witness, dw_witness;
    SolverMeta meta;
};

namespace detail {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

inline void require_square(const ComplexMatrix& t) {
    if (!t.square()) throw DimensionMismatchError("expected a nonempty square matrix");
}

// <Tx,x> and ||Tx||^2 in one pass.
inline std::pair<Complex, double> form_and_norm(const ComplexMatrix& t,
                                                const std::vector<Complex>& x) {
    const std::size_t n = x.size();
    Complex q(0.0, 0.0);
    double p = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Complex acc(0.0, 0.0);
        const Complex* row = t.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
        q += acc * std::conj(x[i]);
        p += std::norm(acc);
    }
    return {q, p};
}

// sqrt(|<Tx,x>|^2 + ||Tx||^4)
inline double dw_objective(const ComplexMatrix& t, const std::vector<Complex>& x) {
    const auto [q, p] = form_and_norm(t, x);
    return std::sqrt(std::norm(q) + p * p);
}

inline void normalize(std::vector<Complex>& x) {
    const double nm = norm2(x);
    if (nm > 0.0)
        for (auto& v : x) v /= nm;
}

inline void canonical_phase(std::vector<Complex>& x) {
    std::size_t best = 0;
    double best_abs = -1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double a = std::abs(x[i]);
        if (a > best_abs) {
            best_abs = a;
            best = i;
        }
    }
    if (best_abs <= 0.0) return;
    const Complex rot = std::conj(x[best] / best_abs);
    for (auto& v : x) v *= rot;
}

// Golden-section maximization on [lo, hi]; probes lo/hi plus interior points and
// returns the best sample seen. `fn` need not be unimodal; the running maximum
// keeps the result monotone in the number of evaluations.
template <class F>
inline std::tuple<double, double, int> golden_max(F&& fn, double lo, double hi, double width) {
    constexpr double invphi = 0.6180339887498949;
    constexpr double invphi2 = 1.0 - invphi;
    double a = lo, b = hi;
    double h = b - a;
    double x1 = a + invphi2 * h, x2 = a + invphi * h;
    double f1 = fn(x1), f2 = fn(x2);
    int evals = 2;
    double best_x = f1 >= f2 ? x1 : x2;
    double best_f = std::max(f1, f2);
    while (h > width && evals < 200) {
        if (f1 >= f2) {
            b = x2; x2 = x1; f2 = f1;
            h = b - a;
            x1 = a + invphi2 * h;
            f1 = fn(x1);
            if (f1 > best_f) { best_f = f1; best_x = x1; }
        } else {
            a = x1; x1 = x2; f1 = f2;
            h = b - a;
            x2 = a + invphi * h;
            f2 = fn(x2);
            if (f2 > best_f) { best_f = f2; best_x = x2; }
        }
        ++evals;
    }
    return {best_x, best_f, evals};
}

// lambda_max(cos(theta)*Re(T) + sin(theta)*Im(T)) with a warm-started solver.
class SupportEngine {
public:
    explicit SupportEngine(const ComplexMatrix& t)
        : n_(static_cast<int>(t.rows())),
          hr_(hermitian_part(t)),
          hi_(imaginary_part(t)),
          buf_(static_cast<std::size_t>(n_) * n_),
          eig_(n_) {}

    double lambda_max(double theta) {
        const double c = std::cos(theta), s = std::sin(theta);
        const std::size_t nn = buf_.size();
        const Complex* hr = hr_.data();
        const Complex* hi = hi_.data();
        for (std::size_t k = 0; k < nn; ++k) buf_[k] = c * hr[k] + s * hi[k];
        eig_.solve(buf_.data());
        return eig_.eigenvalue_max();
    }

    int size() const { return n_; }
    const WarmEig& eig() const { return eig_; }
    void top_vector(std::vector<Complex>& out) const { eig_.eigenvector(n_ - 1, out); }

    // Unit vectors spanning the top eigenspace under the gap threshold.
    std::vector<std::vector<Complex>> top_eigenspace(double gap) const {
        const auto& ev = eig_.eigenvalues();
        int m = 1;
        while (m < n_ && ev[n_ - 1] - ev[n_ - 1 - m] < gap) ++m;
        std::vector<std::vector<Complex>> basis(m);
        for (int k = 0; k < m; ++k) eig_.eigenvector(n_ - 1 - k, basis[k]);
        return basis;
    }

private:
    int n_;
    ComplexMatrix hr_, hi_;
    std::vector<Complex> buf_;
    WarmEig eig_;
};

// Best |<Tx,x>| (want = +1) or smallest (want = -1) over the span of `basis`,
// probing the basis vectors plus seeded random unit combinations.
inline Witness pick_in_eigenspace(const ComplexMatrix& t,
                                  const std::vector<std::vector<Complex>>& basis, int want,
                                  int combos, std::uint64_t seed) {
    Witness best;
    double best_score = want > 0 ? -1.0 : std::numeric_limits<double>::infinity();
    auto consider = [&](const std::vector<Complex>& x) {
        const double v = std::abs(quadratic_form(t, x));
        if ((want > 0 && v > best_score) || (want < 0 && v < best_score)) {
            best_score = v;
            best.vector = x;
            best.value = v;
        }
    };
    for (const auto& b : basis) consider(b);
    if (basis.size() > 1) {
        Rng rng(seed);
        const std::size_t n = basis[0].size();
        std::vector<Complex> x(n);
        for (int c = 0; c < combos; ++c) {
            std::vector<Complex> coeff(basis.size());
            for (auto& v : coeff) v = rng.gaussian_complex();
            std::fill(x.begin(), x.end(), Complex(0.0, 0.0));
            for (std::size_t k = 0; k < basis.size(); ++k)
                for (std::size_t i = 0; i < n; ++i) x[i] += coeff[k] * basis[k][i];
            normalize(x);
            consider(x);
        }
    }
    canonical_phase(best.vector);
    best.value = std::abs(quadratic_form(t, best.vector));
    return best;
}

struct ThetaOptimum {
    double theta = 0.0;
    double value = 0.0;  // objective at theta (h or -h)
    int evals = 0;
};

// Maximize sign*h(theta) over [0, 2pi) by grid plus golden refinement.
inline ThetaOptimum sweep_support(SupportEngine& engine, int grid, double refine_width,
                                  double sign) {
    ThetaOptimum best;
    best.value = -std::numeric_limits<double>::infinity();
    const double step = kTwoPi / grid;
    for (int k = 0; k < grid; ++k) {
        const double theta = step * k;
        const double v = sign * engine.lambda_max(theta);
        ++best.evals;
        if (v > best.value) {
            best.value = v;
            best.theta = theta;
        }
    }
    auto [x, f, evals] = golden_max(
        [&](double th) { return sign * engine.lambda_max(th); }, best.theta - step,
        best.theta + step, refine_width);
    best.evals += evals;
    if (f > best.value) {
        best.value = f;
        best.theta = x;
    }
    return best;
}

} // namespace detail

/// Largest singular value.
inline double op_norm(const ComplexMatrix& t) { return singular_values(t).front(); }

/// Smallest singular value.
inline double min_modulus(const ComplexMatrix& t) {
    detail::require_square(t);
    return singular_values(t).back();
}

/// Support function of the numerical range: h(theta) = lambda_max(Re(e^{-i theta} T)),
/// with the attaining unit eigenvector.
inline std::pair<double, Witness> support_function(const ComplexMatrix& t, double theta) {
    detail::require_square(t);
    detail::SupportEngine engine(t);
    const double h = engine.lambda_max(theta);
    Witness w;
    engine.top_vector(w.vector);
    detail::canonical_phase(w.vector);
    w.value = h;
    return {h, w};
}

namespace detail {

inline double num_radius_value(const ComplexMatrix& t, const SolverOptions& opts,
                               int* evals = nullptr) {
    SupportEngine engine(t);
    const ThetaOptimum best = sweep_support(engine, opts.theta_grid, opts.refine_width, +1.0);
    if (evals) *evals += best.evals;
    return best.value;
}

inline double crawford_value(const ComplexMatrix& t, const SolverOptions& opts,
                             int* evals = nullptr) {
    SupportEngine engine(t);
    const ThetaOptimum best = sweep_support(engine, opts.theta_grid, opts.refine_width, -1.0);
    if (evals) *evals += best.evals;
    return std::max(0.0, best.value);
}

} // namespace detail

/// Numerical radius w(T) by support-function sweep with golden refinement.
inline std::pair<double, Witness> num_radius(const ComplexMatrix& t,
                                             const SolverOptions& opts = {}) {
    detail::require_square(t);
    detail::SupportEngine engine(t);
    const detail::ThetaOptimum best =
        detail::sweep_support(engine, opts.theta_grid, opts.refine_width, +1.0);
    engine.lambda_max(best.theta);
    Witness w = detail::pick_in_eigenspace(t, engine.top_eigenspace(opts.degenerate_gap), +1,
                                           opts.degenerate_combos,
                                           detail::mix_seed(opts.seed, 0x717E55));
    return {best.value, w};
}

/// Crawford number c(T) = distance from the origin to W(T); zero when the
/// origin lies inside. Uses convexity of W(T), no direct sphere search.
inline double crawford(const ComplexMatrix& t, const SolverOptions& opts = {}) {
    detail::require_square(t);
    return detail::crawford_value(t, opts);
}

/// c(T) with a feasible witness: the support vector with the smallest |<Tx,x>|
/// seen across the sweep. The witness value can exceed c(T) when 0 is interior.
inline std::pair<double, Witness> crawford_with_witness(const ComplexMatrix& t,
                                                        const SolverOptions& opts = {}) {
    detail::require_square(t);
    detail::SupportEngine engine(t);
    const double step = detail::kTwoPi / opts.theta_grid;
    double best_obj = -std::numeric_limits<double>::infinity();
    double best_theta = 0.0;
    Witness witness;
    double witness_q = std::numeric_limits<double>::infinity();
    std::vector<Complex> x;
    for (int k = 0; k < opts.theta_grid; ++k) {
        const double theta = step * k;
        const double h = engine.lambda_max(theta);
        if (-h > best_obj) {
            best_obj = -h;
            best_theta = theta;
        }
        engine.top_vector(x);
        const double q = std::abs(quadratic_form(t, x));
        if (q < witness_q) {
            witness_q = q;
            witness.vector = x;
        }
    }
    auto [refined_theta, f, evals] = detail::golden_max(
        [&](double th) { return -engine.lambda_max(th); }, best_theta - step, best_theta + step,
        opts.refine_width);
    (void)evals;
    if (f > best_obj) {
        best_obj = f;
        best_theta = refined_theta;
    }
    engine.lambda_max(best_theta);
    Witness refined = detail::pick_in_eigenspace(t, engine.top_eigenspace(opts.degenerate_gap), -1,
                                                 opts.degenerate_combos,
                                                 detail::mix_seed(opts.seed, 0xC0FFEE));
    if (refined.value < witness_q) {
        witness = refined;
        witness_q = refined.value;
    }
    detail::canonical_phase(witness.vector);
    witness.value = std::abs(quadratic_form(t, witness.vector));
    return {std::max(0.0, best_obj), witness};
}

/// lambda_min of a Hermitian PSD matrix; equals c(H) there. Tiny negative
/// eigenvalues from rounding are clamped to zero.
inline double crawford_psd(const ComplexMatrix& h) {
    detail::require_square(h);
    detail::require_hermitian(h);
    const double lmin = hermitian_eig(h).eigenvalues.front();
    return (lmin < 0.0 && lmin > -1e-10) ? 0.0 : lmin;
}

namespace detail {

// Projected gradient ascent for F(x) = |<Tx,x>|^2 + <T*Tx,x>^2 on the sphere.
// Euclidean gradient as a complex vector: 2*conj(q)*Tx + 2*q*T*x + 4*p*(T*T)x.
struct AscentEngine {
    const ComplexMatrix& t;
    ComplexMatrix tadj, ttt;

    explicit AscentEngine(const ComplexMatrix& m)
        : t(m), tadj(adjoint(m)), ttt(hermitian_part(adjoint(m) * m)) {}

    double value(const std::vector<Complex>& x) const {
        const auto [q, p] = form_and_norm(t, x);
        return std::norm(q) + p * p;
    }

    void gradient(const std::vector<Complex>& x, std::vector<Complex>& g) const {
        const std::size_t n = x.size();
        const auto tx = matvec(t, x);
        const auto tax = matvec(tadj, x);
        const auto px = matvec(ttt, x);
        const Complex q = inner(tx, x);
        const double p = inner(px, x).real();
        g.resize(n);
        const Complex cq = std::conj(q);
        for (std::size_t i = 0; i < n; ++i)
            g[i] = 2.0 * (cq * tx[i] + q * tax[i]) + 4.0 * p * px[i];
    }

    // Returns iterations used; x and fval updated in place (fval = F, squared scale).
    int ascend(std::vector<Complex>& x, double& fval, const SolverOptions& opts) const {
        const std::size_t n = x.size();
        std::vector<Complex> g, r, trial(n);
        double step = 1.0;
        int it = 0;
        fval = value(x);
        for (; it < opts.max_ascent_iterations; ++it) {
            gradient(x, g);
            // tangential component
            double gx = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                gx += (g[i] * std::conj(x[i])).real();
            r = g;
            for (std::size_t i = 0; i < n; ++i) r[i] -= gx * x[i];
            const double rn = norm2(r);
            if (rn <= opts.gradient_tol) break;
            bool improved = false;
            double eta = step;
            for (int half = 0; half < 60; ++half) {
                for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] + eta * r[i];
                normalize(trial);
                const double fv = value(trial);
                if (fv > fval) {
                    x = trial;
                    fval = fv;
                    step = std::min(eta * 2.0, 1.0e3);
                    improved = true;
                    break;
                }
                eta *= 0.5;
            }
            if (!improved) break;
        }
        return it;
    }
};

} // namespace detail

/// Davis-Wielandt radius estimate: shell sweep over (theta, phi) directions plus
/// multi-start projected gradient ascent, seeded and deterministic. The returned
/// value is a certified lower estimate (every probe is a feasible unit vector).
inline std::pair<double, Witness> dw_radius(const ComplexMatrix& t,
                                            const SolverOptions& opts = {},
                                            SolverMeta* meta_out = nullptr) {
    detail::require_square(t);
    const int n = static_cast<int>(t.rows());

    SolverMeta meta;
    meta.theta_grid = opts.theta_grid;
    meta.dw_theta_grid = opts.dw_theta_grid;
    meta.dw_phi_grid = opts.dw_phi_grid;
    meta.restarts = opts.restarts;
    meta.seed = opts.seed;

    const ComplexMatrix hr = hermitian_part(t);
    const ComplexMatrix hi = imaginary_part(t);
    const ComplexMatrix p = hermitian_part(adjoint(t) * t);

    // ceiling from the classic sandwich: dw cannot exceed sqrt(w^2 + ||T||^4)
    auto [w, w_witness] = num_radius(t, opts);
    const auto [opn, opn_vec] = extremal_singular_pair(t, +1);
    const double ceiling = std::sqrt(w * w + opn * opn * opn * opn);
    const double scale = std::max(1.0, ceiling);

    Witness best;
    double best_f = -1.0;
    auto consider = [&](const std::vector<Complex>& x) {
        const double f = detail::dw_objective(t, x);
        if (f > best_f) {
            best_f = f;
            best.vector = x;
        }
    };
    consider(w_witness.vector);
    consider(opn_vec);

    const bool saturated_early = best_f >= ceiling - 1e-9 * scale;

    // shell sweep: extreme points of the Davis-Wielandt shell's hull
    if (!saturated_early) {
        detail::WarmEig eig(n);
        std::vector<Complex> a(static_cast<std::size_t>(n) * n);
        std::vector<Complex> x;
        const Complex* hrd = hr.data();
        const Complex* hid = hi.data();
        const Complex* pd = p.data();
        bool done = false;
        for (int i = 0; i < opts.dw_theta_grid && !done; ++i) {
            const double theta = detail::kTwoPi * i / opts.dw_theta_grid;
            const double ct = std::cos(theta), st = std::sin(theta);
            for (int j = 0; j < opts.dw_phi_grid; ++j) {
                const double phi = -detail::kPi / 2.0 + detail::kPi * j / (opts.dw_phi_grid - 1);
                const double cp = std::cos(phi), sp = std::sin(phi);
                const double wr = cp * ct, wi = cp * st;
                for (std::size_t k = 0; k < a.size(); ++k)
                    a[k] = wr * hrd[k] + wi * hid[k] + sp * pd[k];
                eig.solve(a.data(), opts.sweep_eig_tol);
                eig.eigenvector(n - 1, x);
                consider(x);
                if (eig.top_gap() < opts.degenerate_gap && n > 1) {
                    auto basis = [&] {
                        const auto& ev = eig.eigenvalues();
                        int m = 1;
                        while (m < n && ev[n - 1] - ev[n - 1 - m] < opts.degenerate_gap) ++m;
                        std::vector<std::vector<Complex>> b(m);
                        for (int k = 0; k < m; ++k) eig.eigenvector(n - 1 - k, b[k]);
                        return b;
                    }();
                    detail::Rng rng(detail::mix_seed(
                        opts.seed, static_cast<std::uint64_t>(i) * opts.dw_phi_grid + j));
                    std::vector<Complex> combo(n);
                    for (int c = 0; c < opts.degenerate_combos; ++c) {
                        std::vector<Complex> coeff(basis.size());
                        for (auto& v : coeff) v = rng.gaussian_complex();
                        std::fill(combo.begin(), combo.end(), Complex(0.0, 0.0));
                        for (std::size_t k = 0; k < basis.size(); ++k)
                            for (int ii = 0; ii < n; ++ii) combo[ii] += coeff[k] * basis[k][ii];
                        detail::normalize(combo);
                        consider(combo);
                    }
                }
                if (best_f >= ceiling - 1e-9 * scale) {
                    done = true;
                    break;
                }
            }
        }
    }

    // multi-start ascent: polish the sweep winner, then seeded random restarts
    if (best_f < ceiling - 1e-9 * scale) {
        const detail::AscentEngine engine(t);
        std::vector<Complex> x = best.vector;
        double fsq = 0.0;
        meta.ascent_iterations += engine.ascend(x, fsq, opts);
        consider(x);
        detail::Rng rng(detail::mix_seed(opts.seed, 0xD0A11));
        for (int r = 0; r < opts.restarts && best_f < ceiling - 1e-9 * scale; ++r) {
            x = rng.unit_vector(static_cast<std::size_t>(n));
            meta.ascent_iterations += engine.ascend(x, fsq, opts);
            consider(x);
        }
    }

    detail::canonical_phase(best.vector);
    best.value = detail::dw_objective(t, best.vector);
    if (meta_out) *meta_out = meta;
    return {best.value, best};
}

/// Result of a sup-over-theta search: the value and where it was attained.
struct SupTheta {
    double value = 0.0;
    double theta = 0.0;
};

/// sup over theta of w(e^{i theta} T + sign * T*T).
inline SupTheta sup_theta_w(const ComplexMatrix& t, int sign, const SolverOptions& opts = {}) {
    detail::require_square(t);
    const ComplexMatrix p = hermitian_part(adjoint(t) * t);
    const double sgn = sign >= 0 ? 1.0 : -1.0;
    auto objective = [&](double theta) {
        const Complex phase(std::cos(theta), std::sin(theta));
        ComplexMatrix m = phase * t;
        if (sgn > 0)
            m += p;
        else
            m -= p;
        return detail::num_radius_value(m, opts);
    };
    SupTheta best;
    best.value = -std::numeric_limits<double>::infinity();
    const double step = detail::kTwoPi / opts.sup_theta_grid;
    for (int k = 0; k < opts.sup_theta_grid; ++k) {
        const double theta = step * k;
        const double v = objective(theta);
        if (v > best.value) {
            best.value = v;
            best.theta = theta;
        }
    }
    auto [x, f, evals] = detail::golden_max(objective, best.theta - step, best.theta + step,
                                            std::max(opts.refine_width, 1e-10));
    (void)evals;
    if (f > best.value) {
        best.value = f;
        best.theta = x;
    }
    return best;
}

/// sup over theta of [w^2(e^{i theta} T + T*T) + c^2(e^{i theta} T - T*T)].
inline SupTheta sup_theta_wc(const ComplexMatrix& t, const SolverOptions& opts = {}) {
    detail::require_square(t);
    const ComplexMatrix p = hermitian_part(adjoint(t) * t);
    auto objective = [&](double theta) {
        const Complex phase(std::cos(theta), std::sin(theta));
        const ComplexMatrix rotated = phase * t;
        const double w = detail::num_radius_value(rotated + p, opts);
        const double c = detail::crawford_value(rotated - p, opts);
        return w * w + c * c;
    };
    SupTheta best;
    best.value = -std::numeric_limits<double>::infinity();
    const double step = detail::kTwoPi / opts.sup_theta_grid;
    for (int k = 0; k < opts.sup_theta_grid; ++k) {
        const double theta = step * k;
        const double v = objective(theta);
        if (v > best.value) {
            best.value = v;
            best.theta = theta;
        }
    }
    auto [x, f, evals] = detail::golden_max(objective, best.theta - step, best.theta + step,
                                            std::max(opts.refine_width, 1e-10));
    (void)evals;
    if (f > best.value) {
        best.value = f;
        best.theta = x;
    }
    return best;
}

/// The five core quantities with witnesses and solver metadata.
inline NRProfile profile(const ComplexMatrix& t, const SolverOptions& opts = {}) {
    detail::require_square(t);
    NRProfile out;
    out.meta.theta_grid = opts.theta_grid;
    out.meta.dw_theta_grid = opts.dw_theta_grid;
    out.meta.dw_phi_grid = opts.dw_phi_grid;
    out.meta.restarts = opts.restarts;
    out.meta.seed = opts.seed;

    auto [sigma_max, top_vec] = extremal_singular_pair(t, +1);
    auto [sigma_min, bottom_vec] = extremal_singular_pair(t, -1);
    out.op_norm = sigma_max;
    out.norm_witness = {top_vec, norm2(matvec(t, top_vec))};
    out.min_modulus = sigma_min;
    out.min_witness = {bottom_vec, norm2(matvec(t, bottom_vec))};

    auto [w, ww] = num_radius(t, opts);
    out.num_radius = w;
    out.num_radius_witness = ww;

    auto [c, cw] = crawford_with_witness(t, opts);
    out.crawford = c;
    out.crawford_witness = cw;

    SolverMeta dw_meta;
    auto [dw, dww] = dw_radius(t, opts, &dw_meta);
    out.dw_estimate = dw;
    out.dw_witness = dww;
    out.meta.ascent_iterations = dw_meta.ascent_iterations;
    return out;
}

} // namespace dwr
