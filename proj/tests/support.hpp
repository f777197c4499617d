// Shared test helpers and independent oracles. Everything here is
// deliberately the dumb direct method (dense elimination, O(n^2) DFT,
// brute-force accumulation) so it cannot share a failure mode with the
// library code it checks.

#ifndef FTK_TESTS_SUPPORT_HPP
#define FTK_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace testsup {

inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

inline std::vector<double> random_vector(std::mt19937& gen, std::size_t n, double lo = -1.0,
                                         double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(gen);
    return v;
}

// Dense Ax = b by Gaussian elimination with partial pivoting. A is
// row-major n x n and is copied.
inline std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    if (a.size() != n * n)
        throw std::invalid_argument("solve_dense: dimension mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col]))
                piv = r;
        if (a[piv * n + col] == 0.0)
            throw std::runtime_error("solve_dense: singular matrix");
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a[piv * n + c], a[col * n + c]);
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            for (std::size_t c = col; c < n; ++c)
                a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t ri = n; ri-- > 0;) {
        double acc = b[ri];
        for (std::size_t c = ri + 1; c < n; ++c)
            acc -= a[ri * n + c] * x[c];
        x[ri] = acc / a[ri * n + ri];
    }
    return x;
}

// O(n^2) DFT, the oracle for the FFT kernel.
inline std::vector<std::complex<double>> dft_naive(const std::vector<std::complex<double>>& in) {
    const std::size_t n = in.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t t = 0; t < n; ++t) {
            const double ang = -2.0 * std::numbers::pi * static_cast<double>(k) *
                               static_cast<double>(t) / static_cast<double>(n);
            acc += in[t] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    return out;
}

inline double rel_diff(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline double max_rel_diff(const std::vector<double>& got, const std::vector<double>& want) {
    double m = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i)
        m = std::max(m, rel_diff(got[i], want[i]));
    return m;
}

} // namespace testsup

#endif
