#include "ftk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ftk/csv.hpp"

namespace ftk {

SymMatrix SymMatrix::identity(std::size_t n) {
    SymMatrix m = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1.0;
    return m;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < order; ++i)
        t += at(i, i);
    return t;
}

SymMatrix toeplitz_from_autocorr(std::span<const double> r) {
    if (r.empty())
        throw std::invalid_argument("toeplitz_from_autocorr: empty autocorrelation");
    const std::size_t n = r.size();
    SymMatrix m = SymMatrix::zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            m.set_sym(i, j, r[j - i]);
    return m;
}

std::vector<double> sym_eigenvalues(const SymMatrix& matrix, double tolerance) {
    const std::size_t n = matrix.order;
    if (n == 0)
        throw std::invalid_argument("sym_eigenvalues: empty matrix");
    if (n == 1)
        return {matrix.entries[0]};

    SymMatrix a = matrix;

    double fro = 0.0;
    for (double v : a.entries) fro += v * v;
    fro = std::sqrt(fro);
    const double target = tolerance * fro;

    const auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                s += 2.0 * a.at(i, j) * a.at(i, j);
        return std::sqrt(s);
    };

    constexpr int kMaxSweeps = 60;
    int sweep = 0;
    while (off_norm() > target) {
        if (++sweep > kMaxSweeps)
            throw std::runtime_error("sym_eigenvalues: Jacobi sweeps did not converge");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0)
                    continue;
                // Rotation that annihilates a(p,q), Golub & Van Loan 8.4.
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = ((theta >= 0.0) ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a.at(k, p);
                    const double akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a.at(p, k);
                    const double aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i)
        ev[i] = a.at(i, i);
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

TwoTapCorrelation autocorr_matrix_2tap(double omega, double power) {
    if (power <= 0.0)
        throw std::invalid_argument("autocorr_matrix_2tap: power must be positive");
    TwoTapCorrelation out;
    out.R = SymMatrix::zeros(2);
    out.R.at(0, 0) = power;
    out.R.at(1, 1) = power;
    out.R.set_sym(0, 1, power * std::cos(omega));
    out.p = {power * std::cos(omega), power * std::cos(2.0 * omega)};
    return out;
}

std::vector<double> wiener_solution(const SymMatrix& R, std::span<const double> p) {
    const std::size_t n = R.order;
    if (p.size() != n)
        throw std::invalid_argument("wiener_solution: dimension mismatch");

    // Cholesky R = L L'; fails exactly when R is not positive definite.
    std::vector<double> l(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double acc = R.at(i, j);
            for (std::size_t k = 0; k < j; ++k)
                acc -= l[i * n + k] * l[j * n + k];
            if (i == j) {
                if (!(acc > 0.0))
                    throw std::runtime_error("wiener_solution: matrix is singular or indefinite");
                l[i * n + i] = std::sqrt(acc);
            } else {
                l[i * n + j] = acc / l[j * n + j];
            }
        }
    }

    std::vector<double> y(n), w(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = p[i];
        for (std::size_t k = 0; k < i; ++k)
            acc -= l[i * n + k] * y[k];
        y[i] = acc / l[i * n + i];
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double acc = y[ii];
        for (std::size_t k = ii + 1; k < n; ++k)
            acc -= l[k * n + ii] * w[k];
        w[ii] = acc / l[ii * n + ii];
    }
    return w;
}

std::vector<SurfacePoint> error_surface(double r0, std::span<const double> p, const SymMatrix& R,
                                        const SurfaceGrid& grid) {
    if (R.order != 2 || p.size() != 2)
        throw std::invalid_argument("error_surface: expects the 2-tap model");
    if (grid.step <= 0.0 || grid.w0_max < grid.w0_min || grid.w1_max < grid.w1_min)
        throw std::invalid_argument("error_surface: empty grid");

    const auto npts = [&](double lo, double hi) {
        return static_cast<std::size_t>(std::floor((hi - lo) / grid.step + 1e-9)) + 1;
    };
    const std::size_t n0 = npts(grid.w0_min, grid.w0_max);
    const std::size_t n1 = npts(grid.w1_min, grid.w1_max);

    std::vector<SurfacePoint> out;
    out.reserve(n0 * n1);
    for (std::size_t i = 0; i < n0; ++i) {
        const double w0 = grid.w0_min + static_cast<double>(i) * grid.step;
        for (std::size_t j = 0; j < n1; ++j) {
            const double w1 = grid.w1_min + static_cast<double>(j) * grid.step;
            const double quad = w0 * (R.at(0, 0) * w0 + R.at(0, 1) * w1) +
                                w1 * (R.at(1, 0) * w0 + R.at(1, 1) * w1);
            const double j_val = r0 - 2.0 * (w0 * p[0] + w1 * p[1]) + quad;
            out.push_back({w0, w1, j_val});
        }
    }
    return out;
}

void write_surface_csv(std::span<const SurfacePoint> points, std::ostream& out) {
    csv::write_row(out, {"w0", "w1", "J"});
    for (const auto& pt : points)
        csv::write_row(out, {csv::num(pt.w0), csv::num(pt.w1), csv::num(pt.j)});
}

} // namespace ftk
