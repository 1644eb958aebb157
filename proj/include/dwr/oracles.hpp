#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "dwr/complex_matrix.hpp"
#include "dwr/errors.hpp"

namespace dwr {

// Exhaustive 2x2 sphere searches. Every unit vector in C^2 is, up to a global
// phase, x(s,t) = (cos s, e^{it} sin s) with s in [0, pi/2], t in [0, 2pi).
// These walk a dense (s,t) grid and then polish with a shrinking pattern
// search. They share no code with the sweep/ascent machinery and serve as
// independent cross-checks of it.

namespace detail {

template <class F>
inline double grid_polish_2d(F&& fn, double s_hi, double t_hi, int grid) {
    double best = -1.0, bs = 0.0, bt = 0.0;
    for (int i = 0; i <= grid; ++i) {
        const double s = s_hi * i / grid;
        for (int j = 0; j < grid; ++j) {
            const double t = t_hi * j / grid;
            const double v = fn(s, t);
            if (v > best) {
                best = v;
                bs = s;
                bt = t;
            }
        }
    }
    double h = s_hi / grid;
    for (int it = 0; it < 400 && h > 1e-13; ++it) {
        bool moved = false;
        const double cand_s[4] = {bs + h, bs - h, bs, bs};
        const double cand_t[4] = {bt, bt, bt + h, bt - h};
        for (int k = 0; k < 4; ++k) {
            const double v = fn(cand_s[k], cand_t[k]);
            if (v > best) {
                best = v;
                bs = cand_s[k];
                bt = cand_t[k];
                moved = true;
            }
        }
        if (!moved) h *= 0.5;
    }
    return best;
}

} // namespace detail

/// Brute-force dw(T) for 2x2 T: max of sqrt(|<Tx,x>|^2 + ||Tx||^4) on the grid.
inline double dw_brute_force_2x2(const ComplexMatrix& t, int grid = 400) {
    if (t.rows() != 2 || t.cols() != 2) throw DimensionMismatchError("oracle needs a 2x2 matrix");
    auto objective = [&](double s, double tt) {
        const Complex x0(std::cos(s), 0.0);
        const Complex x1 = std::sin(s) * Complex(std::cos(tt), std::sin(tt));
        const Complex y0 = t(0, 0) * x0 + t(0, 1) * x1;
        const Complex y1 = t(1, 0) * x0 + t(1, 1) * x1;
        const Complex q = y0 * std::conj(x0) + y1 * std::conj(x1);
        const double p = std::norm(y0) + std::norm(y1);
        return std::sqrt(std::norm(q) + p * p);
    };
    return detail::grid_polish_2d(objective, 1.5707963267948966, 6.283185307179586, grid);
}

/// Brute-force numerical radius for 2x2 T.
inline double w_brute_force_2x2(const ComplexMatrix& t, int grid = 400) {
    if (t.rows() != 2 || t.cols() != 2) throw DimensionMismatchError("oracle needs a 2x2 matrix");
    auto objective = [&](double s, double tt) {
        const Complex x0(std::cos(s), 0.0);
        const Complex x1 = std::sin(s) * Complex(std::cos(tt), std::sin(tt));
        const Complex y0 = t(0, 0) * x0 + t(0, 1) * x1;
        const Complex y1 = t(1, 0) * x0 + t(1, 1) * x1;
        return std::abs(y0 * std::conj(x0) + y1 * std::conj(x1));
    };
    return detail::grid_polish_2d(objective, 1.5707963267948966, 6.283185307179586, grid);
}

} // namespace dwr
