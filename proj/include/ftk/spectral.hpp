// Diagnostic instruments: autocorrelation Toeplitz eigenstructure, the
// two-tap predictor correlation model, Wiener solution and the quadratic
// error surface.

#ifndef FTK_SPECTRAL_HPP
#define FTK_SPECTRAL_HPP

#include <array>
#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

namespace ftk {

/// Dense symmetric matrix, row-major. Construction keeps entries[i][j]
/// and entries[j][i] identical.
struct SymMatrix {
    std::size_t order = 0;
    std::vector<double> entries;

    static SymMatrix zeros(std::size_t n) { return {n, std::vector<double>(n * n, 0.0)}; }
    static SymMatrix identity(std::size_t n);

    double& at(std::size_t i, std::size_t j) { return entries[i * order + j]; }
    double at(std::size_t i, std::size_t j) const { return entries[i * order + j]; }

    void set_sym(std::size_t i, std::size_t j, double v) {
        entries[i * order + j] = v;
        entries[j * order + i] = v;
    }

    double trace() const;
};

/// (m+1)x(m+1) matrix with M[i][j] = r(|i-j|).
SymMatrix toeplitz_from_autocorr(std::span<const double> r);

/// All eigenvalues by cyclic Jacobi, sorted descending. Sweeps run until
/// the off-diagonal Frobenius norm falls below tolerance times the
/// matrix Frobenius norm; throws after the sweep cap.
std::vector<double> sym_eigenvalues(const SymMatrix& matrix, double tolerance = 1e-12);

/// Correlation model of a 2-tap one-step predictor driven by a sinusoid
/// of the given average power: R = power*[[1, cos w],[cos w, 1]],
/// p = power*[cos w, cos 2w].
struct TwoTapCorrelation {
    SymMatrix R;
    std::array<double, 2> p;
};
TwoTapCorrelation autocorr_matrix_2tap(double omega, double power);

/// Solves R w = p by Cholesky; throws on a non-positive-definite R.
std::vector<double> wiener_solution(const SymMatrix& R, std::span<const double> p);

struct SurfaceGrid {
    double w0_min = -4.0;
    double w0_max = 4.0;
    double w1_min = -4.0;
    double w1_max = 4.0;
    double step = 0.1;
};

struct SurfacePoint {
    double w0;
    double w1;
    double j;
};

/// J(w) = r0 - 2 w'p + w'Rw on the grid, row-major over (w0, w1).
std::vector<SurfacePoint> error_surface(double r0, std::span<const double> p, const SymMatrix& R,
                                        const SurfaceGrid& grid);

/// CSV: w0,w1,J.
void write_surface_csv(std::span<const SurfacePoint> points, std::ostream& out);

} // namespace ftk

#endif
