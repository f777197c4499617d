#include "ftk/synth.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ftk {

ResonatorPole resonator_pole(const FormantSpec& f, double sample_rate_hz) {
    return {std::exp(-std::numbers::pi * f.bandwidth_hz / sample_rate_hz),
            2.0 * std::numbers::pi * f.freq_hz / sample_rate_hz};
}

Signal gen_vowel(const SynthVowelSpec& spec, double sample_rate_hz) {
    if (sample_rate_hz <= 0.0)
        throw std::invalid_argument("gen_vowel: sample rate must be positive");
    if (spec.pitch_hz <= 0.0)
        throw std::invalid_argument("gen_vowel: pitch must be positive");
    if (spec.duration_s <= 0.0)
        throw std::invalid_argument("gen_vowel: duration must be positive");
    if (spec.amplitude <= 0.0)
        throw std::invalid_argument("gen_vowel: amplitude must be positive");
    for (const auto& f : spec.formants) {
        if (!(f.freq_hz > 0.0 && f.freq_hz < sample_rate_hz / 2.0))
            throw std::invalid_argument("gen_vowel: formant frequency must lie in (0, fs/2)");
        if (f.bandwidth_hz <= 0.0)
            throw std::invalid_argument("gen_vowel: bandwidth must be positive");
    }
    if (spec.glide && spec.glide->formant_index >= spec.formants.size())
        throw std::invalid_argument("gen_vowel: glide formant index out of range");
    if (spec.glide && !(spec.glide->target_hz > 0.0 && spec.glide->target_hz < sample_rate_hz / 2.0))
        throw std::invalid_argument("gen_vowel: glide target must lie in (0, fs/2)");
    if (!(spec.glottal_tilt >= 0.0 && spec.glottal_tilt < 1.0))
        throw std::invalid_argument("gen_vowel: glottal tilt must lie in [0, 1)");

    const std::size_t n = static_cast<std::size_t>(std::llround(spec.duration_s * sample_rate_hz));
    if (n == 0)
        throw std::invalid_argument("gen_vowel: duration too short for one sample");
    const std::size_t period =
        static_cast<std::size_t>(std::llround(sample_rate_hz / spec.pitch_hz));
    if (period == 0)
        throw std::invalid_argument("gen_vowel: pitch at or above sample rate");

    Signal out;
    out.sample_rate_hz = sample_rate_hz;
    out.samples.resize(n);

    // Per-resonator direct form II transposed state (y[n-1], y[n-2]).
    std::vector<std::array<double, 2>> state(spec.formants.size(), {0.0, 0.0});
    double glottal = 0.0;
    double peak = 0.0;

    for (std::size_t i = 0; i < n; ++i) {
        double src = (i % period == 0) ? 1.0 : 0.0;
        glottal = src + spec.glottal_tilt * glottal;
        double s = glottal;
        const double t = static_cast<double>(i) / sample_rate_hz;
        for (std::size_t k = 0; k < spec.formants.size(); ++k) {
            FormantSpec f = spec.formants[k];
            if (spec.glide && spec.glide->formant_index == k) {
                const auto& g = *spec.glide;
                if (t >= g.end_s)
                    f.freq_hz = g.target_hz;
                else if (t > g.start_s)
                    f.freq_hz += (g.target_hz - f.freq_hz) * (t - g.start_s) / (g.end_s - g.start_s);
            }
            const ResonatorPole p = resonator_pole(f, sample_rate_hz);
            const double b1 = 2.0 * p.radius * std::cos(p.angle_rad);
            const double b2 = -p.radius * p.radius;
            const double y = s + b1 * state[k][0] + b2 * state[k][1];
            state[k][1] = state[k][0];
            state[k][0] = y;
            s = y;
        }
        out.samples[i] = s;
        peak = std::max(peak, std::abs(s));
    }

    if (peak > 0.0) {
        const double scale = spec.amplitude / peak;
        for (double& v : out.samples) v *= scale;
    }
    return out;
}

} // namespace ftk
