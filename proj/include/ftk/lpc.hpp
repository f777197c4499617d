// Frame-based LPC: windowing, biased autocorrelation and the
// Levinson-Durbin recursion.
//
// Coefficient convention matches the adaptive predictors: the model
// predicts x(n) = sum_j a_j x(n-j), so H(z) = sigma / (1 - A(z)) with
// A(z) = sum_j a_j z^-j.

#ifndef FTK_LPC_HPP
#define FTK_LPC_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "ftk/opcount.hpp"
#include "ftk/signal.hpp"

namespace ftk {

enum class WindowKind { hamming, rectangular };

struct FrameConfig {
    std::size_t window_len = 160;   // 20 ms at 8 kHz
    std::size_t hop = 80;           // 10 ms, 50% overlap
    WindowKind window = WindowKind::hamming;
};

struct LpcModel {
    std::vector<double> coeffs;       // a_1 .. a_P
    std::vector<double> reflection;   // k_1 .. k_P
    double error_power = 0.0;         // sigma^2 = E_P

    std::size_t order() const { return coeffs.size(); }
};

/// Symmetric window, built by mirroring so window[n] == window[len-1-n]
/// holds exactly. Hamming: 0.54 - 0.46 cos(2 pi n / (len-1)).
std::vector<double> make_window(WindowKind kind, std::size_t len);

/// Frame j covers [j*hop, j*hop + window_len), multiplied by the window.
/// Frames that would overrun the end are dropped.
std::vector<std::vector<double>> frame_signal(const Signal& signal, const FrameConfig& config);

/// Biased estimator r(i) = sum_n frame(n) frame(n+i), no 1/L factor.
/// The missing normalization cancels in Levinson-Durbin and keeps r
/// positive semidefinite.
std::vector<double> autocorrelation(std::span<const double> frame, std::size_t max_lag,
                                    OpCount* ops = nullptr);

/// Standard recursion on r(0..order). Throws std::invalid_argument when
/// r(0) <= 0 or a stage error power E_i becomes non-positive (degenerate
/// autocorrelation).
LpcModel levinson_durbin(std::span<const double> r, std::size_t order, OpCount* ops = nullptr);

struct LpcFrame {
    double time_s = 0.0;          // window center
    std::size_t start_sample = 0;
    std::optional<LpcModel> model;   // empty for degenerate frames
};

/// Per-frame pipeline window -> autocorrelation -> Levinson-Durbin.
/// Degenerate frames produce an entry with no model rather than made-up
/// coefficients.
std::vector<LpcFrame> lpc_analyze(const Signal& signal, const FrameConfig& config,
                                  std::size_t order, OpCount* ops = nullptr);

/// CSV export: frame_time_s,sigma2,a_1..a_P; degenerate frames leave
/// sigma2 and the coefficients empty.
void write_lpc_csv(std::span<const LpcFrame> frames, std::size_t order, std::ostream& out);

} // namespace ftk

#endif
