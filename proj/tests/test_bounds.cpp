#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dwr/blocks.hpp"
#include "dwr/bounds.hpp"
#include "dwr/builtins.hpp"
#include "dwr/oracles.hpp"
#include "dwr/random_inputs.hpp"

using namespace dwr;
using Catch::Approx;

namespace {

const Complex kI(0.0, 1.0);
const double kSqrt2 = std::sqrt(2.0);

ComplexMatrix t1() { return builtin_matrix("t1"); }
ComplexMatrix t2() { return builtin_matrix("t2"); }
ComplexMatrix t3() { return builtin_matrix("t3"); }
ComplexMatrix t4() { return builtin_matrix("t4"); }

double sq(const BoundResult& b) { return b.value * b.value; }

// reduced search work for corpus-scale property checks
SolverOptions corpus_opts() {
    SolverOptions o;
    o.theta_grid = 512;
    o.sup_theta_grid = 64;
    o.lambda_grid = 9;
    o.nelder_mead_iterations = 40;
    o.restarts = 16;
    return o;
}

} // namespace

TEST_CASE("classic_bounds: examples") {
    {
        auto cb = classic_bounds(ComplexMatrix::identity(2));
        CHECK(cb[0].value == Approx(1.0).margin(1e-9));
        CHECK(cb[1].value == Approx(kSqrt2).margin(1e-9));
        CHECK(dw_radius(ComplexMatrix::identity(2)).first == Approx(cb[1].value).margin(1e-9));
    }
    {
        const ComplexMatrix s{{0.0, 1.0}, {0.0, 0.0}};
        auto cb = classic_bounds(s);
        CHECK(cb[0].value == Approx(1.0).margin(1e-9));
        CHECK(dw_radius(s).first == Approx(cb[0].value).margin(1e-9));
    }
    {
        auto cb = classic_bounds(ComplexMatrix::zero(2, 2));
        CHECK(cb[0].value == Approx(0.0).margin(1e-12));
        CHECK(cb[1].value == Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("lower_thm24: examples") {
    {
        // [[0,A],[B,0]] with A=diag(1,0), B=diag(i,0)
        BlockSpec spec;
        spec.layout = BlockLayout::antidiag;
        spec.a = ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}};
        spec.b = ComplexMatrix{{kI, 0.0}, {0.0, 0.0}};
        auto lb = lower_thm24(assemble(spec));
        CHECK(lb[0].value == Approx(1.0).margin(1e-8));
    }
    {
        auto lb = lower_thm24(ComplexMatrix::identity(2));
        CHECK(lb[0].value == Approx(kSqrt2).margin(1e-9));
        CHECK(lb[1].value == Approx(kSqrt2).margin(1e-9));
    }
    {
        auto lb = lower_thm24(ComplexMatrix::zero(2, 2));
        CHECK(lb[0].value == Approx(0.0).margin(1e-12));
        CHECK(lb[1].value == Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("upper_thm26: examples") {
    CHECK(sq(upper_thm26(ComplexMatrix{{-1.0, 0.0}, {0.0, -2.0}})) == Approx(34.0).margin(1e-6));
    CHECK(upper_thm26(ComplexMatrix::zero(2, 2)).value == Approx(0.0).margin(1e-12));
    {
        const ComplexMatrix t{{1.0, 0.0}, {0.0, -1.0}};
        CHECK(upper_thm26(t).value >= dw_radius(t).first - 1e-6);
    }
}

TEST_CASE("bounds_thm28: examples") {
    {
        auto b = bounds_thm28(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}});
        CHECK(sq(b[0]) == Approx(2.0).margin(1e-8));
        CHECK(sq(b[1]) == Approx(4.0).margin(1e-8));
    }
    // frozen from the closed forms w = 2.5 + sqrt(4.5) (t1) and the analogous
    // maxima for t4; cross-checked against the sphere oracle below
    CHECK(sq(bounds_thm28(t1())[1]) == Approx(21.356601717798212).margin(1e-6));
    CHECK(sq(bounds_thm28(t4())[1]) == Approx(9.0564004620510114).margin(1e-6));
    {
        const ComplexMatrix p = hermitian_part(adjoint(t4()) * t4());
        const double wp = w_brute_force_2x2(t4() + p);
        const double wm = w_brute_force_2x2(t4() - p);
        CHECK(sq(bounds_thm28(t4())[1]) == Approx(0.5 * (wp * wp + wm * wm)).margin(1e-5));
    }
}

TEST_CASE("upper_thm212_power: examples and parameter errors") {
    CHECK(upper_thm212_power(ComplexMatrix::identity(2), 0.5, 2.0, 2.0).value ==
          Approx(kSqrt2).margin(1e-9));
    CHECK(upper_thm212_power(ComplexMatrix::zero(2, 2), 0.5, 2.0, 2.0).value ==
          Approx(0.0).margin(1e-12));
    // the s = 1/2, alpha = 2 specialization coincides with Cor. 2.13 (ii)
    detail::Rng rng(83);
    for (int rep = 0; rep < 8; ++rep) {
        const ComplexMatrix t = random_matrix(2 + rep % 3, rng);
        CHECK(upper_thm212_power(t, 0.5, 2.0, 2.0).value ==
              Approx(upper_cor213(t, 2.0)[1].value).margin(1e-9));
    }
    CHECK_THROWS_AS(upper_thm212_power(t1(), 0.0, 2.0, 2.0), BadExponentError);
    CHECK_THROWS_AS(upper_thm212_power(t1(), 1.0, 2.0, 2.0), BadExponentError);
    CHECK_THROWS_AS(upper_thm212_power(t1(), 0.5, 1.0, 2.0), BadExponentError);
    CHECK_THROWS_AS(upper_thm212_power(t1(), 0.5, 2.0, 0.5), BadExponentError);
}

TEST_CASE("upper_cor213: examples") {
    // lambda_max([[7,5],[5,5]])/2 = (6 + sqrt(26))/2
    CHECK(sq(upper_cor213(t3(), 2.0)[1]) == Approx(5.5495097567963922).margin(1e-9));
    CHECK(sq(upper_cor213(t1(), 2.0)[1]) == Approx(18.5).margin(1e-9));
    CHECK(sq(upper_cor213(t2(), 2.0)[1]) == Approx(18.0).margin(1e-9));
    // alpha = 2 makes part (i) equal part (ii)
    CHECK(upper_cor213(t4(), 2.0)[0].value == Approx(upper_cor213(t4(), 2.0)[1].value).margin(1e-9));
    CHECK_THROWS_AS(upper_cor213(t1(), 1.0), BadExponentError);
}

TEST_CASE("upper_thm216: examples") {
    {
        auto b = upper_thm216(t3());
        CHECK(sq(b[0]) == Approx(6.0).margin(1e-9));
        CHECK(sq(b[1]) == Approx(5.6035533905932737).margin(1e-8));
    }
    {
        auto b = upper_thm216(t1());
        CHECK(sq(b[0]) == Approx(20.0).margin(1e-9));
        CHECK(sq(b[1]) == Approx(19.0).margin(1e-8));
    }
    {
        auto b = upper_thm216(t4());
        CHECK(sq(b[0]) == Approx(9.4721359549995796).margin(1e-9));
        CHECK(sq(b[1]) == Approx(9.1631189606246319).margin(1e-8));
    }
}

TEST_CASE("upper_thm219: examples and classic-bound dominance") {
    CHECK(upper_thm219(t2()).value == Approx(4.1231056256176606).margin(5e-3));
    CHECK(sq(upper_thm219(t1())) == Approx(18.25).margin(5e-3));
    CHECK(sq(upper_thm219(t4())) == Approx(9.1041019662496847).margin(5e-3));

    detail::Rng rng(89);
    const SolverOptions opts = corpus_opts();
    for (int rep = 0; rep < 6; ++rep) {
        const ComplexMatrix t = random_matrix(2 + rep % 3, rng);
        const double classic = classic_bounds(t, opts)[1].value;
        CHECK(upper_thm219(t, opts).value <= classic + 1e-8);
    }
}

TEST_CASE("subadditivity_check: examples") {
    {
        // S = [[0,A],[0,0]], T = [[0,0],[B,0]]: cross term vanishes
        detail::Rng rng(97);
        const ComplexMatrix a = random_matrix(2, rng);
        const ComplexMatrix b = random_matrix(2, rng);
        const ComplexMatrix z = ComplexMatrix::zero(2, 2);
        const ComplexMatrix s_blk = detail::block2x2(z, a, z, z);
        const ComplexMatrix t_blk = detail::block2x2(z, z, b, z);
        const ComplexMatrix cross =
            hermitian_part(adjoint(s_blk) * t_blk + adjoint(t_blk) * s_blk);
        CHECK(detail::herm_norm(cross) <= 1e-10);
        auto [lhs, rhs] = subadditivity_check(s_blk, t_blk);
        CHECK(lhs <= rhs + 2e-6);
    }
    {
        auto [lhs, rhs] = subadditivity_check(ComplexMatrix::identity(2),
                                              ComplexMatrix::identity(2));
        CHECK(lhs == Approx(std::sqrt(20.0)).margin(1e-8));
        CHECK(rhs == Approx(2.0 * kSqrt2 + 2.0).margin(1e-8));
    }
    {
        auto [lhs, rhs] = subadditivity_check(ComplexMatrix::zero(2, 2), t3());
        CHECK(lhs == Approx(rhs).margin(1e-9));
    }
    CHECK_THROWS_AS(subadditivity_check(ComplexMatrix::identity(2), ComplexMatrix::identity(3)),
                    DimensionMismatchError);
}

TEST_CASE("zs_reference_bounds: values against independent scalar oracles") {
    {
        auto zs = zs_reference_bounds(ComplexMatrix{{-1.0, 0.0}, {0.0, -2.0}});
        REQUIRE(zs.size() == 7);
        CHECK(zs[0].id == "zs2.1");
        CHECK(sq(zs[0]) == Approx(52.0).margin(1e-6));
    }
    {
        auto zs = zs_reference_bounds(t3());
        // independent scalars: w via the brute-force sphere oracle
        const double w = w_brute_force_2x2(t3());
        const double wb = w_brute_force_2x2(ComplexMatrix{{0.0, 0.0}, {1.0, 1.0}});
        CHECK(sq(zs[0]) == Approx(wb * wb + 4.0 * w).margin(1e-6));     // zs2.1
        CHECK(sq(zs[2]) ==
              Approx(0.5 * w + 0.25 * (2.0 + kSqrt2) + 16.0 * std::pow(w, 4.0)).margin(1e-6));
        CHECK(sq(zs[2]) == Approx(35.427669529663687).margin(1e-6));    // zs2.7, exact value
        CHECK(sq(zs[3]) == Approx(4.0 + 2.0 * kSqrt2).margin(1e-6));    // zs2.13
        CHECK(sq(zs[4]) == Approx(4.0 + 2.0 * kSqrt2).margin(1e-6));    // zs2.14
        CHECK(sq(zs[5]) == Approx(2.0 * std::sqrt(10.0)).margin(1e-6)); // zs2.16
        CHECK(sq(zs[6]) ==
              Approx(kSqrt2 * 2.0 * std::sqrt(3.0 + 2.0 * w)).margin(1e-6));  // zs2.17
    }
    {
        auto zs = zs_reference_bounds(t2());
        CHECK(zs[0].value == Approx(std::sqrt(17.0 + 4.0 * std::sqrt(5.0))).margin(1e-6));
        CHECK(zs[0].value == Approx(5.0935).margin(5e-3));
        CHECK(zs[1].value == Approx(std::sqrt(18.0)).margin(1e-6));  // zs2.2, inf term is 0
        CHECK(zs[1].value == Approx(4.2426).margin(5e-3));
        CHECK(zs[6].value == Approx(std::sqrt(8.0 * std::sqrt(7.0))).margin(1e-6));
        CHECK(zs[6].value == Approx(4.6006).margin(5e-3));
    }
}

TEST_CASE("equality_diagnostics: examples") {
    CHECK(equality_diagnostics(ComplexMatrix::zero(2, 2)).dw_eq_w);
    CHECK_FALSE(equality_diagnostics(ComplexMatrix::identity(2)).dw_eq_w);
    {
        const auto d = equality_diagnostics(builtin_matrix("prop22"));
        CHECK(d.norm_witness_crawford_value <= 1e-9);
        const double dw = dw_radius(builtin_matrix("prop22")).first;
        CHECK(dw >= 0.375 - 1e-6);         // dw >= w(T) = 3/8
        CHECK(dw > 0.25 + 1e-3);           // so dw != ||T||^2 = 1/4
        CHECK(d.dw_eq_norm_sq_consistent); // vacuously: dw is far from ||T||^2
    }
}

TEST_CASE("full_catalog: table values, ordering, pseudo-entry") {
    const SolverOptions opts = corpus_opts();
    const auto catalog = full_catalog(t1(), opts);
    auto value_sq_of = [&](const std::string& id) {
        for (const auto& b : catalog)
            if (b.id == id) return b.value * b.value;
        FAIL("missing catalog id " + id);
        return 0.0;
    };
    CHECK(value_sq_of("thm2.8.upper") == Approx(21.357).margin(5e-3));
    CHECK(value_sq_of("cor2.13ii") == Approx(18.5).margin(5e-3));
    CHECK(value_sq_of("thm2.16i") == Approx(20.0).margin(5e-3));
    CHECK(value_sq_of("thm2.16ii") == Approx(19.0).margin(5e-3));
    CHECK(value_sq_of("thm2.19") == Approx(18.25).margin(5e-3));

    bool seen_upper = false;
    double last_lower = std::numeric_limits<double>::infinity();
    double last_upper = -1.0;
    bool seen_dw_est = false;
    for (const auto& b : catalog) {
        if (b.id == "dw.est") seen_dw_est = true;
        if (b.kind == BoundKind::lower) {
            CHECK_FALSE(seen_upper);  // lowers come first
            CHECK(b.value <= last_lower + 1e-15);
            last_lower = b.value;
        } else {
            seen_upper = true;
            CHECK(b.value >= last_upper - 1e-15);
            last_upper = b.value;
        }
    }
    CHECK(seen_dw_est);
}

TEST_CASE("catalog sandwich on a random corpus") {
    detail::Rng rng(0xC0);
    const SolverOptions opts = corpus_opts();
    int checked = 0;
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = 2 + rep % 5;
        const ComplexMatrix t = random_matrix(n, rng);
        const double dw = dw_radius(t).first;  // full-precision estimate
        for (const auto& b : full_catalog(t, opts, dw)) {
            if (b.kind == BoundKind::lower) {
                CHECK(b.value <= dw + 1e-6);
            } else {
                CHECK(b.value >= dw - 1e-6);
            }
            ++checked;
        }
    }
    CHECK(checked == 60 * 21);
}

TEST_CASE("normaloid equality of the tight uppers") {
    detail::Rng rng(0xD1);
    const SolverOptions opts = corpus_opts();
    for (int rep = 0; rep < 8; ++rep) {
        const ComplexMatrix t = random_normal_matrix(2 + rep % 3, rng);
        const double dw = dw_radius(t).first;
        CHECK(std::abs(upper_cor213(t, 2.0)[1].value - dw) <= 1e-5);
        const auto b16 = upper_thm216(t);
        CHECK(std::abs(b16[0].value - dw) <= 1e-5);
        CHECK(std::abs(b16[1].value - dw) <= 1e-5);
        CHECK(std::abs(upper_thm219(t, opts).value - dw) <= 1e-5);
    }
}

TEST_CASE("conditional dominance of the second lower bound") {
    // hypothesis c(T) > ||T||^2/2 and w(T) <= ||T||^2 needs matrices close to
    // a positive multiple of the identity
    detail::Rng rng(0xE2);
    int hypothesis_held = 0;
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 2 + rep % 3;
        ComplexMatrix t = random_matrix(n, rng);
        t *= Complex(0.08);
        t += ComplexMatrix::identity(n);
        const double c = crawford(t);
        const double nrm = op_norm(t);
        const double w = num_radius(t).first;
        if (c > nrm * nrm / 2.0 + 1e-6 && w <= nrm * nrm) {
            ++hypothesis_held;
            const auto lb24 = lower_thm24(t);
            const auto cb = classic_bounds(t);
            CHECK(lb24[1].value >= cb[0].value - 1e-9);
        }
    }
    CHECK(hypothesis_held > 0);
}

TEST_CASE("subadditivity on random pairs") {
    detail::Rng rng(0xF3);
    const SolverOptions opts;
    for (int rep = 0; rep < 15; ++rep) {
        const std::size_t n = 2 + rep % 3;
        const ComplexMatrix s = random_matrix(n, rng);
        const ComplexMatrix t = random_matrix(n, rng);
        auto [lhs, rhs] = subadditivity_check(s, t, opts);
        CHECK(lhs <= rhs + 2e-6);
    }
}
