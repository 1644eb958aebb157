#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <vector>

#include "dwr/errors.hpp"

namespace dwr::detail {

using cd = std::complex<double>;

// c = a * b, all n x n row-major.
inline void mat_mul_nn(const cd* a, const cd* b, cd* c, int n) {
    for (int i = 0; i < n; ++i) {
        cd* ci = c + i * n;
        for (int j = 0; j < n; ++j) ci[j] = cd(0.0, 0.0);
        const cd* ai = a + i * n;
        for (int k = 0; k < n; ++k) {
            const cd aik = ai[k];
            const cd* bk = b + k * n;
            for (int j = 0; j < n; ++j) ci[j] += aik * bk[j];
        }
    }
}

// c = a* * b (conjugate transpose of a times b).
inline void mat_mul_cn(const cd* a, const cd* b, cd* c, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c[i * n + j] = cd(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
        const cd* ak = a + k * n;
        const cd* bk = b + k * n;
        for (int i = 0; i < n; ++i) {
            const cd aki = std::conj(ak[i]);
            cd* ci = c + i * n;
            for (int j = 0; j < n; ++j) ci[j] += aki * bk[j];
        }
    }
}

inline double frobenius(const cd* a, int n) {
    double s = 0.0;
    for (int k = 0; k < n * n; ++k) s += std::norm(a[k]);
    return std::sqrt(s);
}

inline double off_diagonal_norm(const cd* h, int n) {
    double s = 0.0;
    for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) s += std::norm(h[p * n + q]);
    return std::sqrt(2.0 * s);
}

// One cyclic sweep of complex Jacobi rotations. h is Hermitian (row-major),
// v accumulates the similarity (v <- v * G per rotation). Pairs whose modulus
// is at or below elem_skip are left alone. Returns the rotation count.
template <int N>
inline int jacobi_sweep(cd* __restrict h, cd* __restrict v, int n_dyn, double elem_skip) {
    const int n = N > 0 ? N : n_dyn;
    int rotations = 0;
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const cd b = h[p * n + q];
            const double ab = std::abs(b);
            if (ab <= elem_skip) continue;
            ++rotations;
            const double a = h[p * n + p].real();
            const double d = h[q * n + q].real();
            const double tau = (a - d) / (2.0 * ab);
            const double sgn = tau >= 0.0 ? 1.0 : -1.0;
            const double t = -sgn / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const cd s = (t * c) * (b / ab);
            const cd sc = std::conj(s);
            // columns p,q of h and v
            for (int k = 0; k < n; ++k) {
                const cd hp = h[k * n + p];
                const cd hq = h[k * n + q];
                h[k * n + p] = c * hp - sc * hq;
                h[k * n + q] = s * hp + c * hq;
                const cd vp = v[k * n + p];
                const cd vq = v[k * n + q];
                v[k * n + p] = c * vp - sc * vq;
                v[k * n + q] = s * vp + c * vq;
            }
            // rows p,q of h
            for (int k = 0; k < n; ++k) {
                const cd hp = h[p * n + k];
                const cd hq = h[q * n + k];
                h[p * n + k] = c * hp - s * hq;
                h[q * n + k] = sc * hp + c * hq;
            }
            h[p * n + q] = cd(0.0, 0.0);
            h[q * n + p] = cd(0.0, 0.0);
            h[p * n + p] = cd(h[p * n + p].real(), 0.0);
            h[q * n + q] = cd(h[q * n + q].real(), 0.0);
        }
    }
    return rotations;
}

using SweepFn = int (*)(cd*, cd*, int, double);

inline SweepFn sweep_for(int n) {
    switch (n) {
        case 1: return &jacobi_sweep<1>;
        case 2: return &jacobi_sweep<2>;
        case 3: return &jacobi_sweep<3>;
        case 4: return &jacobi_sweep<4>;
        case 5: return &jacobi_sweep<5>;
        case 6: return &jacobi_sweep<6>;
        case 7: return &jacobi_sweep<7>;
        case 8: return &jacobi_sweep<8>;
        default: return &jacobi_sweep<0>;
    }
}

// Cyclic Jacobi on h (destroyed) with v pre-initialized to the starting basis.
// off_tol is absolute; convergence when the off-diagonal Frobenius norm drops
// to off_tol or below. Returns sweeps used, throws NoConvergenceError at the cap.
inline int jacobi_run(cd* h, cd* v, int n, double off_tol, int max_sweeps) {
    if (n <= 1) {
        if (n == 1) h[0] = cd(h[0].real(), 0.0);
        return 0;
    }
    const SweepFn sweep = sweep_for(n);
    const double elem_skip = off_tol / static_cast<double>(n);
    for (int s = 0; s < max_sweeps; ++s) {
        if (off_diagonal_norm(h, n) <= off_tol) return s;
        if (sweep(h, v, n, elem_skip) == 0) return s;
    }
    if (off_diagonal_norm(h, n) <= off_tol) return max_sweeps;
    throw NoConvergenceError("Jacobi sweep cap exceeded");
}

// Reusable Hermitian eigensolver. solve() may be warm-started with the basis
// left by the previous call, which makes grid sweeps over slowly varying
// matrices cheap: the input is pre-rotated into the old eigenbasis and the
// same cyclic Jacobi kernel finishes the job. Eigenvalues come out ascending,
// eigenvector j is column j of vectors().
class WarmEig {
public:
    explicit WarmEig(int n = 0) { resize(n); }

    void resize(int n) {
        n_ = n;
        basis_.assign(static_cast<std::size_t>(n) * n, cd(0.0, 0.0));
        work_.assign(static_cast<std::size_t>(n) * n, cd(0.0, 0.0));
        tmp_.assign(static_cast<std::size_t>(n) * n, cd(0.0, 0.0));
        sorted_.assign(static_cast<std::size_t>(n) * n, cd(0.0, 0.0));
        evals_.assign(static_cast<std::size_t>(n), 0.0);
        order_.assign(static_cast<std::size_t>(n), 0);
        warm_ = false;
    }

    void reset() { warm_ = false; }
    int size() const { return n_; }

    int solve(const cd* a, double rel_tol = 1e-13, int max_sweeps = 100) {
        const int n = n_;
        const double off_tol = rel_tol * frobenius(a, n);
        if (warm_) {
            mat_mul_cn(basis_.data(), a, tmp_.data(), n);
            mat_mul_nn(tmp_.data(), basis_.data(), work_.data(), n);
        } else {
            std::copy(a, a + static_cast<std::size_t>(n) * n, work_.begin());
            set_identity(basis_.data(), n);
        }
        int sweeps;
        try {
            sweeps = jacobi_run(work_.data(), basis_.data(), n, off_tol, max_sweeps);
        } catch (const NoConvergenceError&) {
            if (!warm_) throw;
            // stale basis may stall the iteration; restart cold once
            std::copy(a, a + static_cast<std::size_t>(n) * n, work_.begin());
            set_identity(basis_.data(), n);
            sweeps = jacobi_run(work_.data(), basis_.data(), n, off_tol, max_sweeps);
        }
        sort_eigen();
        warm_ = true;
        return sweeps;
    }

    const std::vector<double>& eigenvalues() const { return evals_; }
    double eigenvalue_max() const { return evals_.empty() ? 0.0 : evals_.back(); }
    /// Gap between the top two eigenvalues; +inf for 1x1.
    double top_gap() const {
        if (n_ < 2) return std::numeric_limits<double>::infinity();
        return evals_[n_ - 1] - evals_[n_ - 2];
    }
    const cd* vectors() const { return sorted_.data(); }

    void eigenvector(int j, std::vector<cd>& out) const {
        out.resize(n_);
        for (int i = 0; i < n_; ++i) out[i] = sorted_[static_cast<std::size_t>(i) * n_ + j];
    }

private:
    static void set_identity(cd* m, int n) {
        std::fill(m, m + static_cast<std::size_t>(n) * n, cd(0.0, 0.0));
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = cd(1.0, 0.0);
    }

    void sort_eigen() {
        const int n = n_;
        for (int i = 0; i < n; ++i) order_[i] = i;
        std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
            return work_[static_cast<std::size_t>(x) * n + x].real() <
                   work_[static_cast<std::size_t>(y) * n + y].real();
        });
        for (int j = 0; j < n; ++j) {
            const int src = order_[j];
            evals_[j] = work_[static_cast<std::size_t>(src) * n + src].real();
            for (int i = 0; i < n; ++i)
                sorted_[static_cast<std::size_t>(i) * n + j] =
                    basis_[static_cast<std::size_t>(i) * n + src];
        }
        // next warm start uses the sorted frame
        std::copy(sorted_.begin(), sorted_.end(), basis_.begin());
    }

    int n_ = 0;
    bool warm_ = false;
    std::vector<cd> basis_, work_, tmp_, sorted_;
    std::vector<double> evals_;
    std::vector<int> order_;
};

} // namespace dwr::detail
