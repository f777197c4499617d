#include "ftk/formant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ftk/csv.hpp"

namespace ftk {

namespace {

using cplx = std::complex<double>;

// p(z) and p'(z) by Horner on descending-power coefficients.
void eval_poly(std::span<const double> c, cplx z, cplx& p, cplx& dp) {
    p = c[0];
    dp = 0.0;
    for (std::size_t i = 1; i < c.size(); ++i) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
}

// sum_i |c_i| |z|^(d-i): the scale against which the residual is judged.
double residual_scale(std::span<const double> c, double az) {
    double s = std::abs(c[0]);
    for (std::size_t i = 1; i < c.size(); ++i)
        s = s * az + std::abs(c[i]);
    return s;
}

std::vector<cplx> aberth(std::span<const double> c, double tolerance) {
    const std::size_t deg = c.size() - 1;

    // Start on a circle centered at the root centroid with radius from
    // the Cauchy bound; the angular offset breaks conjugate symmetry so
    // iterates do not collide.
    const cplx center(-c[1] / (static_cast<double>(deg) * c[0]), 0.0);
    double radius = 0.0;
    for (std::size_t i = 1; i < c.size(); ++i)
        radius = std::max(radius, std::abs(c[i] / c[0]));
    radius = 1.0 + radius;

    std::vector<cplx> z(deg);
    for (std::size_t k = 0; k < deg; ++k) {
        const double th = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.25) /
                              static_cast<double>(deg) +
                          0.7;
        z[k] = center + radius * cplx(std::cos(th), std::sin(th));
    }

    // Simultaneous iteration until the largest step stalls at machine
    // precision; cubic convergence makes this a handful of sweeps.
    constexpr int kMaxIter = 200;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        double worst = 0.0;
        for (std::size_t k = 0; k < deg; ++k) {
            cplx p, dp;
            eval_poly(c, z[k], p, dp);
            if (p == 0.0)
                continue;
            const cplx newton = (dp != 0.0) ? p / dp : cplx(1e-3, 1e-3);
            cplx rep = 0.0;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != k) rep += 1.0 / (z[k] - z[j]);
            const cplx denom = 1.0 - newton * rep;
            const cplx step = (denom != 0.0) ? newton / denom : newton;
            z[k] -= step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[k])));
        }
        if (worst < 1e-14)
            break;
    }

    // Newton polish sharpens simple roots to machine precision; for
    // (near-)multiple roots it keeps the best iterate seen.
    for (std::size_t k = 0; k < deg; ++k) {
        cplx best = z[k];
        cplx p, dp;
        eval_poly(c, best, p, dp);
        double best_res = std::abs(p);
        cplx cur = best;
        for (int it = 0; it < 6 && dp != 0.0 && p != 0.0; ++it) {
            cur -= p / dp;
            eval_poly(c, cur, p, dp);
            if (std::abs(p) < best_res) {
                best_res = std::abs(p);
                best = cur;
            }
        }
        z[k] = best;
    }

    for (std::size_t k = 0; k < deg; ++k) {
        cplx p, dp;
        eval_poly(c, z[k], p, dp);
        if (std::abs(p) > tolerance * residual_scale(c, std::abs(z[k])))
            throw std::runtime_error("poly_roots: root iteration did not converge "
                                     "(ill-conditioned polynomial)");
    }
    return z;
}

} // namespace

std::vector<cplx> poly_roots(std::span<const double> coeffs, double tolerance) {
    if (coeffs.size() < 2)
        throw std::invalid_argument("poly_roots: degree must be >= 1");
    bool all_zero = true;
    for (double v : coeffs)
        if (v != 0.0) { all_zero = false; break; }
    if (all_zero)
        throw std::invalid_argument("poly_roots: zero polynomial");
    if (coeffs[0] == 0.0)
        throw std::invalid_argument("poly_roots: leading coefficient must be nonzero");

    // Trailing zero coefficients are exact roots at the origin; deflate
    // them before iterating.
    std::size_t tail = coeffs.size();
    while (tail > 1 && coeffs[tail - 1] == 0.0)
        --tail;
    std::vector<cplx> roots(coeffs.size() - tail, cplx(0.0, 0.0));

    const std::span<const double> core = coeffs.subspan(0, tail);
    const std::size_t deg = core.size() - 1;
    if (deg == 0)
        return roots;
    if (deg == 1) {
        roots.push_back(cplx(-core[1] / core[0], 0.0));
        return roots;
    }
    if (deg == 2) {
        const double a = core[0], b = core[1], cc = core[2];
        const double disc = b * b - 4.0 * a * cc;
        if (disc >= 0.0) {
            const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
            const double r1 = q / a;
            const double r2 = (q != 0.0) ? cc / q : 0.0;
            roots.push_back(cplx(r1, 0.0));
            roots.push_back(cplx(r2, 0.0));
        } else {
            const double re = -b / (2.0 * a);
            const double im = std::sqrt(-disc) / (2.0 * a);
            roots.push_back(cplx(re, im));
            roots.push_back(cplx(re, -im));
        }
        return roots;
    }

    const auto found = aberth(core, tolerance);
    roots.insert(roots.end(), found.begin(), found.end());
    return roots;
}

std::vector<std::optional<double>> roots_to_formants(std::span<const cplx> roots, double fs_hz,
                                                     std::size_t n_formants, double min_freq_hz) {
    if (fs_hz <= 0.0)
        throw std::invalid_argument("roots_to_formants: sample rate must be positive");
    if (n_formants < 1)
        throw std::invalid_argument("roots_to_formants: need at least one formant slot");

    std::vector<double> freqs;
    for (const cplx& z : roots) {
        const double f = fs_hz / (2.0 * std::numbers::pi) * std::atan2(z.imag(), z.real());
        if (f > min_freq_hz && f < fs_hz / 2.0)
            freqs.push_back(f);
    }
    std::sort(freqs.begin(), freqs.end());

    std::vector<std::optional<double>> out(n_formants);
    for (std::size_t i = 0; i < n_formants && i < freqs.size(); ++i)
        out[i] = freqs[i];
    return out;
}

FormantRanges FormantRanges::standard() {
    return {{{270.0, 730.0}, {840.0, 2290.0}, {1690.0, 3010.0}}};
}

std::vector<std::optional<double>> apply_range_filter(
    std::span<const std::optional<double>> freqs, const FormantRanges& ranges) {
    std::vector<std::optional<double>> out(freqs.begin(), freqs.end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!out[i])
            continue;
        if (i >= ranges.bands.size() || *out[i] < ranges.bands[i].min_hz ||
            *out[i] > ranges.bands[i].max_hz)
            out[i] = std::nullopt;
    }
    return out;
}

FormantTrack track_formants(const Signal& signal, const TrackOptions& options, OpCount* ops) {
    const Signal clean = remove_dc(signal);
    const double fs = clean.sample_rate_hz;
    FormantTrack track;
    track.n_formants = options.n_formants;

    const auto extract = [&](std::span<const double> weights) {
        const auto poly = weights_to_poly(weights);
        const auto roots = poly_roots(poly);
        return roots_to_formants(roots, fs, options.n_formants, options.min_freq_hz);
    };

    if (options.method == TrackMethod::lpc) {
        const auto frames = lpc_analyze(clean, options.frame, options.order, ops);
        for (const auto& f : frames) {
            FormantTrackEntry entry;
            entry.time_s = f.time_s;
            entry.sample_index = f.start_sample + options.frame.window_len / 2;
            if (f.model)
                entry.freqs_hz = extract(f.model->coeffs);
            else
                entry.freqs_hz.assign(options.n_formants, std::nullopt);
            track.entries.push_back(std::move(entry));
        }
    } else {
        PredictorParams params;
        if (options.method == TrackMethod::lms)
            params = options.lms;
        else
            params = options.rls;
        const auto records = run_predictor(clean, params, options.order, options.decimate, ops);
        for (const auto& rec : records) {
            if (!rec.weights_snapshot)
                continue;
            FormantTrackEntry entry;
            entry.sample_index = rec.sample_index;
            entry.time_s = static_cast<double>(rec.sample_index) / fs;
            entry.freqs_hz = extract(*rec.weights_snapshot);
            track.entries.push_back(std::move(entry));
        }
    }

    if (options.range_filter) {
        const FormantRanges ranges = FormantRanges::standard();
        for (auto& entry : track.entries)
            entry.freqs_hz = apply_range_filter(entry.freqs_hz, ranges);
    }
    return track;
}

void write_track_csv(const FormantTrack& track, std::ostream& out) {
    std::vector<std::string> row;
    row.push_back("sample_index");
    row.push_back("time_s");
    for (std::size_t i = 1; i <= track.n_formants; ++i)
        row.push_back("f" + std::to_string(i) + "_hz");
    csv::write_row(out, row);
    for (const auto& e : track.entries) {
        row.clear();
        row.push_back(std::to_string(e.sample_index));
        row.push_back(csv::num(e.time_s));
        for (const auto& f : e.freqs_hz)
            row.push_back(f ? csv::num(*f) : "");
        csv::write_row(out, row);
    }
}

std::string track_to_json(const FormantTrack& track) {
    std::ostringstream out;
    out << "{\"n_formants\":" << track.n_formants << ",\"entries\":[";
    for (std::size_t i = 0; i < track.entries.size(); ++i) {
        const auto& e = track.entries[i];
        if (i) out << ',';
        out << "{\"sample_index\":" << e.sample_index << ",\"time_s\":" << csv::num(e.time_s)
            << ",\"freqs_hz\":[";
        for (std::size_t j = 0; j < e.freqs_hz.size(); ++j) {
            if (j) out << ',';
            out << (e.freqs_hz[j] ? csv::num(*e.freqs_hz[j]) : "null");
        }
        out << "]}";
    }
    out << "]}";
    return out.str();
}

} // namespace ftk
