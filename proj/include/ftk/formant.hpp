// Second stage shared by all three estimators: prediction polynomial ->
// complex roots -> formant frequencies.

#ifndef FTK_FORMANT_HPP
#define FTK_FORMANT_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "ftk/adaptive.hpp"
#include "ftk/lpc.hpp"
#include "ftk/signal.hpp"

namespace ftk {

/// All complex roots of c[0] z^d + c[1] z^(d-1) + ... + c[d], found by
/// Aberth-Ehrlich simultaneous iteration. Each returned root z satisfies
/// |p(z)| <= tolerance * sum_i |c[i]| |z|^(d-i). Throws on the zero
/// polynomial, a zero leading coefficient, or non-convergence.
std::vector<std::complex<double>> poly_roots(std::span<const double> coeffs,
                                             double tolerance = 1e-8);

/// Frequency of a root is (fs / 2 pi) atan2(im, re). Roots with frequency
/// in (min_freq, fs/2) are kept (one positive-angle representative per
/// conjugate pair), sorted ascending; the first n_formants fill the
/// slots, the rest stay missing. Real roots never qualify.
std::vector<std::optional<double>> roots_to_formants(std::span<const std::complex<double>> roots,
                                                     double fs_hz, std::size_t n_formants,
                                                     double min_freq_hz = 5.0);

/// Plausible per-formant frequency bands used by the optional
/// post-processing filter.
struct FormantRanges {
    struct Band {
        double min_hz;
        double max_hz;
    };
    std::vector<Band> bands;

    /// F1 270-730, F2 840-2290, F3 1690-3010.
    static FormantRanges standard();
};

/// A slot outside its band becomes missing; slots without a band (e.g. a
/// fourth formant with the standard three bands) also become missing.
std::vector<std::optional<double>> apply_range_filter(
    std::span<const std::optional<double>> freqs, const FormantRanges& ranges);

struct FormantTrackEntry {
    double time_s = 0.0;
    std::size_t sample_index = 0;
    std::vector<std::optional<double>> freqs_hz;
};

struct FormantTrack {
    std::size_t n_formants = 0;
    std::vector<FormantTrackEntry> entries;
};

enum class TrackMethod { lms, rls, lpc };

struct TrackOptions {
    TrackMethod method = TrackMethod::lpc;
    std::size_t order = 8;
    std::size_t n_formants = 3;
    std::size_t decimate = 64;        // adaptive methods: snapshot stride
    double min_freq_hz = 5.0;
    bool range_filter = false;
    LmsParams lms;
    RlsParams rls;
    FrameConfig frame;                // lpc method
};

/// Full pipeline: remove_dc -> (adaptive snapshots | per-frame LPC) ->
/// weights_to_poly -> poly_roots -> roots_to_formants, with the optional
/// range filter last. Divergence from the adaptive stages propagates.
FormantTrack track_formants(const Signal& signal, const TrackOptions& options,
                            OpCount* ops = nullptr);

/// CSV: sample_index,time_s,f1_hz..fN_hz; missing values are empty cells.
void write_track_csv(const FormantTrack& track, std::ostream& out);

/// JSON with the same fields; missing values are nulls.
std::string track_to_json(const FormantTrack& track);

} // namespace ftk

#endif
