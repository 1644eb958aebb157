#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace dwr::detail {

// Seeded generator with hand-rolled distributions so that sequences do not
// depend on the standard library's unspecified distribution algorithms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::complex<double> gaussian_complex() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

    // Uniform point on the complex unit sphere in dimension n.
    std::vector<std::complex<double>> unit_vector(std::size_t n) {
        std::vector<std::complex<double>> x(n);
        double s = 0.0;
        do {
            s = 0.0;
            for (auto& v : x) {
                v = gaussian_complex();
                s += std::norm(v);
            }
        } while (s == 0.0);
        const double inv = 1.0 / std::sqrt(s);
        for (auto& v : x) v *= inv;
        return x;
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Stable derived seed for independent substreams (grid points, restarts).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace dwr::detail
