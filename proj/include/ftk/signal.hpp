// Sampled-waveform type and basic signal utilities.

#ifndef FTK_SIGNAL_HPP
#define FTK_SIGNAL_HPP

#include <cstddef>
#include <vector>

namespace ftk {

/// A real-valued sampled waveform. Samples are dimensionless amplitude;
/// PCM decode keeps the raw int16 scale (no normalization to [-1,1]).
struct Signal {
    std::vector<double> samples;
    double sample_rate_hz = 8000.0;

    std::size_t size() const { return samples.size(); }
    double duration_s() const { return static_cast<double>(samples.size()) / sample_rate_hz; }
};

/// Subtract the mean. Result mean is ~0 to machine precision; idempotent.
Signal remove_dc(const Signal& in);

/// sample(n) = amplitude * cos(omega*n + phase), n = 0..n_samples-1.
/// omega is in radians/sample. sample_rate_hz defaults to 1 so that
/// normalized-frequency experiments have time axis == sample index.
Signal gen_sinusoid(double amplitude, double omega, std::size_t n_samples,
                    double phase = 0.0, double sample_rate_hz = 1.0);

} // namespace ftk

#endif
