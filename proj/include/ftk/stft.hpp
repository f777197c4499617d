// Short-time Fourier magnitude analysis: Blackman windows, a radix-2
// FFT and the two spectrogram presets (broadband 64-sample window,
// narrowband 256, both zero-padded to 1024 points with 3/4 overlap).

#ifndef FTK_STFT_HPP
#define FTK_STFT_HPP

#include <complex>
#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "ftk/signal.hpp"

namespace ftk {

/// Symmetric Blackman window,
/// 0.42 - 0.5 cos(2 pi n/(L-1)) + 0.08 cos(4 pi n/(L-1)), mirrored so the
/// symmetry is exact.
std::vector<double> blackman_window(std::size_t len);

/// In-place radix-2 decimation-in-time FFT; size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& data);

struct SpectrogramConfig {
    std::size_t nfft = 1024;
    std::vector<double> window;   // length <= nfft; zero-padded to nfft
    std::size_t hop = 16;

    /// Blackman(64), hop 64 - round(3/4*64) = 16, nfft 1024.
    static SpectrogramConfig broadband();
    /// Blackman(256), hop 256 - round(3/4*256) = 64, nfft 1024.
    static SpectrogramConfig narrowband();
};

struct Spectrogram {
    std::vector<double> bin_freqs_hz;    // bins 0..nfft/2
    std::vector<double> frame_times_s;   // window centers
    // magnitudes[frame][bin]
    std::vector<std::vector<double>> magnitudes;
};

Spectrogram stft_spectrogram(const Signal& signal, const SpectrogramConfig& config);

/// CSV with a header row of frame times, a first column of bin
/// frequencies and the magnitude body. When floor_db is set, values are
/// written as dB with that floor.
void write_spectrogram_csv(const Spectrogram& spec, std::ostream& out,
                           bool as_db = false, double floor_db = -120.0);

} // namespace ftk

#endif
