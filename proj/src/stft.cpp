#include "ftk/stft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ftk/csv.hpp"

namespace ftk {

std::vector<double> blackman_window(std::size_t len) {
    if (len < 2)
        throw std::invalid_argument("blackman_window: length must be >= 2");
    std::vector<double> w(len);
    const double denom = static_cast<double>(len - 1);
    for (std::size_t n = 0; n <= (len - 1) / 2; ++n) {
        const double x = 2.0 * std::numbers::pi * static_cast<double>(n) / denom;
        const double v = 0.42 - 0.5 * std::cos(x) + 0.08 * std::cos(2.0 * x);
        w[n] = v;
        w[len - 1 - n] = v;
    }
    return w;
}

void fft_radix2(std::vector<std::complex<double>>& data) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_radix2: size must be a power of two");

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j |= bit;
        if (i < j)
            std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = data[i + k];
                const std::complex<double> v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

SpectrogramConfig SpectrogramConfig::broadband() {
    SpectrogramConfig c;
    c.nfft = 1024;
    c.window = blackman_window(64);
    c.hop = 64 - static_cast<std::size_t>(std::lround(0.75 * 64.0));
    return c;
}

SpectrogramConfig SpectrogramConfig::narrowband() {
    SpectrogramConfig c;
    c.nfft = 1024;
    c.window = blackman_window(256);
    c.hop = 256 - static_cast<std::size_t>(std::lround(0.75 * 256.0));
    return c;
}

Spectrogram stft_spectrogram(const Signal& signal, const SpectrogramConfig& config) {
    const std::size_t nfft = config.nfft;
    const std::size_t wlen = config.window.size();
    if (nfft == 0 || (nfft & (nfft - 1)) != 0)
        throw std::invalid_argument("stft_spectrogram: nfft must be a power of two");
    if (wlen == 0 || wlen > nfft)
        throw std::invalid_argument("stft_spectrogram: window must fit in nfft");
    if (config.hop < 1)
        throw std::invalid_argument("stft_spectrogram: hop must be >= 1");
    if (signal.samples.size() < wlen)
        throw std::invalid_argument("stft_spectrogram: signal shorter than the window");

    Spectrogram spec;
    const double fs = signal.sample_rate_hz;
    spec.bin_freqs_hz.resize(nfft / 2 + 1);
    for (std::size_t b = 0; b <= nfft / 2; ++b)
        spec.bin_freqs_hz[b] = fs * static_cast<double>(b) / static_cast<double>(nfft);

    std::vector<std::complex<double>> buf(nfft);
    for (std::size_t start = 0; start + wlen <= signal.samples.size(); start += config.hop) {
        for (std::size_t i = 0; i < wlen; ++i)
            buf[i] = signal.samples[start + i] * config.window[i];
        for (std::size_t i = wlen; i < nfft; ++i)
            buf[i] = 0.0;
        fft_radix2(buf);

        std::vector<double> mags(nfft / 2 + 1);
        for (std::size_t b = 0; b <= nfft / 2; ++b)
            mags[b] = std::abs(buf[b]);
        spec.frame_times_s.push_back(
            (static_cast<double>(start) + static_cast<double>(wlen) / 2.0) / fs);
        spec.magnitudes.push_back(std::move(mags));
    }
    return spec;
}

void write_spectrogram_csv(const Spectrogram& spec, std::ostream& out, bool as_db,
                           double floor_db) {
    std::vector<std::string> row;
    row.push_back("freq_hz");
    for (double t : spec.frame_times_s)
        row.push_back(csv::num(t));
    csv::write_row(out, row);

    for (std::size_t b = 0; b < spec.bin_freqs_hz.size(); ++b) {
        row.clear();
        row.push_back(csv::num(spec.bin_freqs_hz[b]));
        for (std::size_t f = 0; f < spec.magnitudes.size(); ++f) {
            double v = spec.magnitudes[f][b];
            if (as_db)
                v = std::max(20.0 * std::log10(std::max(v, 1e-300)), floor_db);
            row.push_back(csv::num(v));
        }
        csv::write_row(out, row);
    }
}

} // namespace ftk
