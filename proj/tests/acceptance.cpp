// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "dwr/dwr.hpp"

using namespace dwr;

namespace {

double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct Checker {
    int checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }

    void expect_near(double actual, double expected, double tol, const std::string& what) {
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%s: got %.10g want %.10g (tol %g)", what.c_str(), actual,
                      expected, tol);
        expect(std::abs(actual - expected) <= tol, buf);
    }
};

int report(int index, const char* name, const Checker& c, double seconds, bool extra_ok = true,
           const char* extra_msg = "") {
    const bool pass = c.failures.empty() && extra_ok;
    std::printf("[%d] %-24s %s (%d checks, %.1fs)\n", index, name, pass ? "PASS" : "FAIL",
                c.checks, seconds);
    for (const auto& f : c.failures) std::printf("      failed: %s\n", f.c_str());
    if (!extra_ok) std::printf("      failed: %s\n", extra_msg);
    return pass ? 0 : 1;
}

double sq(double v) { return v * v; }

// --------------------------------------------------------------------------

int criterion1_table() {
    const double t0 = now_s();
    Checker c;
    const PaperTableReport rep = paper_table();
    for (std::size_t i = 0; i < rep.row_names.size(); ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const auto& cell = rep.cells[i][j];
            char what[128];
            std::snprintf(what, sizeof(what), "%s @ t%zu (computed %.6g)",
                          rep.row_names[i].c_str(), j + 1, cell.computed_sq);
            c.expect_near(cell.rounded_sq, cell.expected_sq, 5e-3, what);
        }
    const double dt = now_s() - t0;
    return report(1, "comparability-table", c, dt, dt < 10.0, "runtime exceeded 10 s");
}

int criterion2_remarks() {
    const double t0 = now_s();
    Checker c;
    {
        const ComplexMatrix t = builtin_matrix("diagm1m2");
        c.expect_near(sq(upper_thm26(t).value), 34.0, 5e-3, "thm2.6^2 @ diag(-1,-2)");
        c.expect_near(sq(zs_reference_bounds(t)[0].value), 52.0, 5e-3, "zs2.1^2 @ diag(-1,-2)");
    }
    {
        const auto b = bounds_thm28(builtin_matrix("diag1m1"));
        c.expect_near(sq(b[0].value), 2.0, 5e-3, "thm2.8 lower^2 @ diag(1,-1)");
        c.expect_near(sq(b[1].value), 4.0, 5e-3, "thm2.8 upper^2 @ diag(1,-1)");
    }
    {
        const ComplexMatrix t = builtin_matrix("t3");
        const auto zs = zs_reference_bounds(t);
        c.expect_near(sq(zs[0].value), 6.283, 5e-3, "zs2.1^2 @ t3");
        c.expect_near(sq(zs[2].value), 35.416, 5e-3, "zs2.7^2 @ t3");
        c.expect_near(sq(zs[3].value), 6.828, 5e-3, "zs2.13^2 @ t3");
        c.expect_near(sq(zs[4].value), 6.828, 5e-3, "zs2.14^2 @ t3");
        c.expect_near(sq(zs[5].value), 6.325, 5e-3, "zs2.16^2 @ t3");
        c.expect_near(sq(zs[6].value), 6.58, 5e-3, "zs2.17^2 @ t3");
        const auto b16 = upper_thm216(t);
        c.expect_near(sq(b16[0].value), 6.0, 5e-3, "thm2.16(i)^2 @ t3");
        c.expect_near(sq(b16[1].value), 5.6, 5e-3, "thm2.16(ii)^2 @ t3");
    }
    {
        const ComplexMatrix t = builtin_matrix("t2");
        c.expect_near(upper_thm219(t).value, 4.123, 5e-3, "thm2.19 @ t2");
        const auto zs = zs_reference_bounds(t);
        c.expect_near(zs[0].value, 5.0935, 5e-3, "zs2.1 @ t2");
        c.expect_near(zs[1].value, 4.2426, 5e-3, "zs2.2 @ t2");
        c.expect_near(zs[6].value, 4.6006, 5e-3, "zs2.17 @ t2");
    }
    return report(2, "remark-values", c, now_s() - t0);
}

int criterion3_exact_blocks() {
    const double t0 = now_s();
    Checker c;
    {
        const ComplexMatrix b{{0.0, 2.0}, {0.0, 0.0}};
        const CubicTheta ct = cubic_theta(op_norm(b));
        c.expect_near(ct.p, -0.75, 1e-3, "cubic p");
        c.expect_near(ct.q, -1.5, 1e-3, "cubic q");
        c.expect_near(ct.r, -0.75, 1e-3, "cubic r");
        c.expect_near(ct.s, 0.15625, 1e-3, "cubic s");
        c.expect_near(ct.alpha, -1.15625, 1e-3, "cubic alpha");
        c.expect_near(ct.theta0, 1.0657, 2e-3, "theta0");
        const double exact = dw_I_B_exact(b);
        c.expect_near(exact, 5.107, 2e-3, "dw([[I,B],[0,0]])");
        c.expect_near(dw_radius(builtin_matrix("ib2")).first, exact, 1e-4,
                      "sphere search vs exact (ib2)");
    }
    {
        const ComplexMatrix b{{0.0, 1.0}, {0.0, 1.0}};
        const double exact = dw_nilpotent_exact(b);
        c.expect_near(exact, 2.0, 2e-3, "dw([[0,B],[0,0]]), ||B||=sqrt2");
        c.expect_near(dw_radius(builtin_matrix("nil1")).first, exact, 1e-4,
                      "sphere search vs exact (nil1)");
    }
    {
        const ComplexMatrix b{{0.3, 0.4}, {0.0, 0.5}};
        const double exact = dw_nilpotent_exact(b);
        c.expect_near(exact, 0.452, 2e-3, "dw([[0,B],[0,0]]), ||B||=0.671");
        c.expect_near(dw_radius(builtin_matrix("nil2")).first, exact, 1e-4,
                      "sphere search vs exact (nil2)");
    }
    return report(3, "exact-block-formulas", c, now_s() - t0);
}

int criterion4_block_remarks() {
    const double t0 = now_s();
    Checker c;
    const Complex i1(0.0, 1.0);
    {
        const ComplexMatrix a{{1.0, 0.0}, {0.0, 0.0}};
        const ComplexMatrix b{{i1, 0.0}, {0.0, 0.0}};
        c.expect_near(dw_antidiag_lower(a, b), std::sqrt(6.0) / 2.0, 5e-3, "antidiag lower");
    }
    c.expect_near(dw_antidiag_upper_piecewise(ComplexMatrix::identity(2),
                                              ComplexMatrix::identity(2)),
                  2.0, 5e-3, "piecewise upper @ A=B=I");
    {
        const ComplexMatrix a{{1.0, 0.0}, {0.0, 0.0}};
        const ComplexMatrix b{{Complex(0.0, 0.0), Complex(0.0, 0.0)}, {Complex(0.0, 0.0), i1}};
        c.expect_near(sq(dw_antidiag_upper_abs(a, b)), 1.5, 5e-3, "abs upper^2 @ remark matrix");
    }
    {
        const ComplexMatrix a = Complex(2.0) * ComplexMatrix::identity(2);
        const ComplexMatrix b = ComplexMatrix::identity(2);
        c.expect_near(sq(dw_antidiag_upper_norm(a, b).first), 16.0, 5e-3,
                      "norm-conditioned upper^2 @ A=2I,B=I");
        c.expect_near(sq(dw_antidiag_upper_abs(a, b)), 18.5, 5e-3, "abs upper^2 @ A=2I,B=I");
    }
    {
        const ComplexMatrix one{{1.0}};
        const ComplexMatrix zero1{{0.0}};
        c.expect_near(sq(dw_triangular_upper_35(one, one, one)), 9.104, 5e-3,
                      "triangular 9/4-bound^2 @ A=B=C=[1]");
        c.expect_near(dw_triangular_upper_35(one, one, zero1), 3.017, 5e-3,
                      "triangular 9/4-bound @ C=0");
        c.expect_near(dw_triangular_upper_34(one, one, zero1), 3.414, 5e-3,
                      "triangular head-bound @ C=0");
    }
    return report(4, "block-remark-values", c, now_s() - t0);
}

int criterion5_properties() {
    const double t0 = now_s();
    Checker c;
    const SolverOptions opts;
    int violations = 0;
    auto note = [&](bool ok, const char* kind, int n, int i, double got, double lim) {
        if (!ok) {
            ++violations;
            if (violations <= 8) {
                char buf[160];
                std::snprintf(buf, sizeof(buf), "%s violated at n=%d i=%d (%.3g vs limit %.3g)",
                              kind, n, i, got, lim);
                c.failures.push_back(buf);
            }
        }
    };

    for (int n = 2; n <= 6; ++n) {
        std::vector<ComplexMatrix> bucket;
        std::vector<double> bucket_dw;
        detail::Rng rng(detail::mix_seed(0x5EED, static_cast<std::uint64_t>(n)));
        for (int i = 0; i < 200; ++i) {
            const ComplexMatrix t = random_matrix(static_cast<std::size_t>(n), rng);
            const double w = detail::num_radius_value(t, opts);
            const double nrm = op_norm(t);
            const double dw = dw_radius(t, opts).first;
            bucket.push_back(t);
            bucket_dw.push_back(dw);

            // sandwich (1.1)
            note(std::max(w, nrm * nrm) <= dw + 1e-6, "sandwich-lower", n, i,
                 std::max(w, nrm * nrm) - dw, 1e-6);
            const double up = std::sqrt(w * w + std::pow(nrm, 4.0));
            note(dw <= up + 2e-6, "sandwich-upper", n, i, dw - up, 2e-6);

            // scaling
            const Complex alpha = rng.gaussian_complex();
            const double scaling_err =
                std::abs(detail::num_radius_value(alpha * t, opts) - std::abs(alpha) * w);
            note(scaling_err <= 1e-9, "scaling", n, i, scaling_err, 1e-9);

            // power inequality
            const ComplexMatrix t2m = t * t;
            const double excess2 = detail::num_radius_value(t2m, opts) - w * w;
            const double excess3 = detail::num_radius_value(t2m * t, opts) - w * w * w;
            note(excess2 <= 1e-8, "power-2", n, i, excess2, 1e-8);
            note(excess3 <= 1e-8, "power-3", n, i, excess3, 1e-8);

            // unitary invariance of all four quantities
            const ComplexMatrix u = random_unitary(static_cast<std::size_t>(n), rng);
            const ComplexMatrix tc = adjoint(u) * t * u;
            const double norm_err = std::abs(op_norm(tc) - nrm);
            const double w_err = std::abs(detail::num_radius_value(tc, opts) - w);
            const double c_err = std::abs(detail::crawford_value(tc, opts) -
                                          detail::crawford_value(t, opts));
            const double dw_err = std::abs(dw_radius(tc, opts).first - dw);
            note(norm_err <= 1e-7, "unitary-norm", n, i, norm_err, 1e-7);
            note(w_err <= 1e-7, "unitary-w", n, i, w_err, 1e-7);
            note(c_err <= 1e-7, "unitary-crawford", n, i, c_err, 1e-7);
            note(dw_err <= 1e-7, "unitary-dw", n, i, dw_err, 1e-7);
        }
        // subadditivity over 100 disjoint pairs per dimension
        for (int k = 0; k + 1 < static_cast<int>(bucket.size()); k += 2) {
            const ComplexMatrix& s = bucket[k];
            const ComplexMatrix& t = bucket[k + 1];
            const double lhs = dw_radius(s + t, opts).first;
            const double cross = detail::herm_norm(
                hermitian_part(adjoint(s) * t + adjoint(t) * s));
            const double rhs = bucket_dw[k] + bucket_dw[k + 1] + cross;
            note(lhs <= rhs + 2e-6, "subadditivity", n, k, lhs - rhs, 2e-6);
        }
    }
    c.checks += 1000 * 9 + 500;

    {  // 2x2 brute-force oracle agreement
        detail::Rng rng(detail::mix_seed(0x5EED, 0x0AC1E));
        for (int i = 0; i < 50; ++i) {
            const ComplexMatrix t = random_matrix(2, rng);
            const double err = std::abs(dw_radius(t, opts).first - dw_brute_force_2x2(t));
            note(err <= 1e-5, "oracle-2x2", 2, i, err, 1e-5);
        }
        c.checks += 50;
    }
    {  // normaloid equality on normal matrices
        detail::Rng rng(detail::mix_seed(0x5EED, 0x208AL));
        for (int i = 0; i < 50; ++i) {
            const int n = 2 + i % 5;
            const ComplexMatrix t = random_normal_matrix(static_cast<std::size_t>(n), rng);
            const double w = detail::num_radius_value(t, opts);
            const double nrm = op_norm(t);
            const double err =
                std::abs(dw_radius(t, opts).first - std::sqrt(w * w + std::pow(nrm, 4.0)));
            note(err <= 1e-5, "normaloid", n, i, err, 1e-5);
        }
        c.checks += 50;
    }
    {  // shift bounds bracket the estimate
        for (int n = 2; n <= 12; ++n) {
            const ShiftBounds sb = shift_bounds(n, opts);
            note(sb.lower - 1e-6 <= sb.dw_estimate && sb.dw_estimate <= sb.upper + 1e-6, "shift",
                 n, 0, sb.dw_estimate, sb.upper);
        }
        c.checks += 11;
    }

    char extra[96];
    const double dt = now_s() - t0;
    std::snprintf(extra, sizeof(extra), "runtime %.0fs exceeded 300 s or violations=%d", dt,
                  violations);
    return report(5, "property-suites", c, dt, dt < 300.0 && violations == 0, extra);
}

int criterion6_gradient() {
    const double t0 = now_s();
    Checker c;
    detail::Rng rng(detail::mix_seed(0x5EED, 0x69AD));
    int points = 0;
    int bad = 0;
    for (int m = 0; m < 10; ++m) {
        const std::size_t n = 2 + m % 4;  // n <= 5
        const ComplexMatrix t = random_matrix(n, rng);
        const detail::AscentEngine engine(t);
        std::vector<Complex> g;
        for (int rep = 0; rep < 100; ++rep) {
            const auto x = rng.unit_vector(n);
            engine.gradient(x, g);
            const double h = 1e-5;
            double err2 = 0.0, ref2 = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                for (int part = 0; part < 2; ++part) {
                    auto xp = x, xm = x;
                    const Complex delta = part == 0 ? Complex(h, 0.0) : Complex(0.0, h);
                    xp[i] += delta;
                    xm[i] -= delta;
                    const double fd = (engine.value(xp) - engine.value(xm)) / (2.0 * h);
                    const double an = part == 0 ? g[i].real() : g[i].imag();
                    err2 += (fd - an) * (fd - an);
                    ref2 += an * an;
                }
            ++points;
            if (std::sqrt(err2) > 1e-4 * std::max(1e-8, std::sqrt(ref2))) ++bad;
        }
    }
    c.checks = points;
    char msg[64];
    std::snprintf(msg, sizeof(msg), "%d of %d points exceeded 1e-4", bad, points);
    c.expect(bad == 0, msg);
    return report(6, "gradient-check", c, now_s() - t0);
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    int failures = 0;
    failures += criterion1_table();
    failures += criterion2_remarks();
    failures += criterion3_exact_blocks();
    failures += criterion4_block_remarks();
    failures += criterion5_properties();
    failures += criterion6_gradient();
    std::printf("%d of 6 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
