// Synthetic vowel generation: source-filter model with an impulse-train
// glottal source and one second-order all-pole resonator per formant.
// Ground-truth generator for tracker evaluation.

#ifndef FTK_SYNTH_HPP
#define FTK_SYNTH_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ftk/signal.hpp"

namespace ftk {

struct FormantSpec {
    double freq_hz = 0.0;
    double bandwidth_hz = 0.0;
};

/// Optional linear glide of one formant between two instants; frequency
/// is held at the endpoints outside [start_s, end_s].
struct FormantGlide {
    std::size_t formant_index = 0;
    double target_hz = 0.0;
    double start_s = 0.0;
    double end_s = 0.0;
};

struct SynthVowelSpec {
    double pitch_hz = 100.0;
    std::vector<FormantSpec> formants;
    double duration_s = 1.0;
    double amplitude = 1.0;      // peak of the generated waveform
    double glottal_tilt = 0.9;   // one-pole source rolloff; 0 = bare impulses
    std::optional<FormantGlide> glide;
};

/// Impulse train of period round(fs/pitch), shaped by a one-pole glottal
/// lowpass (u[n] = x[n] + tilt * u[n-1]), then filtered through the
/// cascade of resonators with pole radius exp(-pi*bw/fs) and angle
/// 2*pi*f/fs. Output is peak-normalized to spec.amplitude. Deterministic.
///
/// Without the glottal rolloff an order-2N+2 all-pole fit parks its spare
/// pole pair on a broad spectral plateau between formants; with it the
/// spare poles land on the real axis (0 or fs/2), which is the behavior
/// real voiced speech produces.
Signal gen_vowel(const SynthVowelSpec& spec, double sample_rate_hz);

/// Pole radius and angle for one resonator at the given rate.
struct ResonatorPole {
    double radius;
    double angle_rad;
};
ResonatorPole resonator_pole(const FormantSpec& f, double sample_rate_hz);

} // namespace ftk

#endif
