#include "ftk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "ftk/adaptive.hpp"
#include "ftk/complexity.hpp"
#include "ftk/csv.hpp"
#include "ftk/formant.hpp"
#include "ftk/lpc.hpp"
#include "ftk/signal.hpp"
#include "ftk/spectral.hpp"
#include "ftk/stft.hpp"
#include "ftk/synth.hpp"
#include "ftk/version.hpp"
#include "ftk/wav.hpp"

namespace ftk {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// ---------------------------------------------------------------- util

std::uint64_t fnv1a64_file(const fs::path& path) {
    std::ifstream f(path, std::ios::binary);
    std::uint64_t h = 1469598103934665603ull;
    char c;
    while (f.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream out;
    out << std::hex << v;
    return out.str();
}

// Write-then-rename so partial output never lands under the final name.
void atomic_write(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        f << content;
        if (!f)
            throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    fs::rename(tmp, path);
}

struct Manifest {
    std::string command;
    json parameters = json::object();
    json inputs = json::array();
    std::vector<std::string> outputs;

    void add_input(const fs::path& path) {
        inputs.push_back({{"path", path.string()}, {"hash_fnv1a64", hex64(fnv1a64_file(path))}});
    }

    void write_for(const fs::path& primary_output) const {
        json m{{"command", command},
               {"tool_version", kVersion},
               {"parameters", parameters},
               {"inputs", inputs},
               {"outputs", outputs}};
        fs::path p = primary_output;
        p += ".manifest.json";
        atomic_write(p, m.dump(2) + "\n");
    }
};

// JSON config file support for CLI11: top-level keys are global options,
// nested objects hold per-subcommand options. Flags beat config values.
class JsonConfig : public CLI::Config {
public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override {
        return "{}\n";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        json j = json::parse(input);
        std::vector<CLI::ConfigItem> items;
        collect(j, {}, items);
        return items;
    }

private:
    static std::string to_text(const json& v) {
        if (v.is_string())
            return v.get<std::string>();
        if (v.is_boolean())
            return v.get<bool>() ? "true" : "false";
        return v.dump();
    }

    static void collect(const json& j, std::vector<std::string> parents,
                        std::vector<CLI::ConfigItem>& items) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object()) {
                auto nested = parents;
                nested.push_back(key);
                collect(value, nested, items);
            } else {
                CLI::ConfigItem item;
                item.parents = parents;
                item.name = key;
                if (value.is_array())
                    for (const auto& v : value) item.inputs.push_back(to_text(v));
                else
                    item.inputs.push_back(to_text(value));
                items.push_back(std::move(item));
            }
        }
    }
};

std::vector<FormantSpec> parse_formants(const std::vector<std::string>& specs) {
    std::vector<FormantSpec> out;
    for (const auto& s : specs) {
        const auto colon = s.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--formant", "expected freq:bandwidth, got '" + s + "'");
        out.push_back({std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))});
    }
    return out;
}

// ------------------------------------------------------------- options

struct TrackArgs {
    std::string input;
    std::string method = "lpc";
    double scale = 1.0;
    std::size_t order = 8;
    std::size_t nformants = 3;
    double alpha = 0.2;
    double lambda = 0.99;
    double delta = 0.0;
    std::size_t decimate = 64;
    double min_freq = 5.0;
    bool range_filter = false;
    std::size_t window = 160;
    std::size_t hop = 80;
    std::string output = "track.csv";
    std::string json_output;
    std::string records_output;
    std::string models_output;
};

struct SynthArgs {
    std::string output = "vowel.wav";
    double pitch = 100.0;
    std::vector<std::string> formants{"500:60", "1500:90", "2500:120"};
    double duration = 1.0;
    double amplitude = 16000.0;
    double fs = 8000.0;
    double tilt = 0.9;
    std::string glide;   // index:target_hz:start_s:end_s
};

struct AnalyzeArgs {
    std::string input;
    std::string r_list;
    std::size_t lags = 10;
    std::string output = "analyze.csv";
};

struct SurfaceArgs {
    std::string omega = "pi/9";
    double power = 1.0;
    SurfaceGrid grid;
    std::string output = "surface.csv";
};

struct SpectrogramArgs {
    std::string input;
    std::string preset = "broadband";
    std::size_t nfft = 0;     // 0: from preset
    std::size_t winlen = 0;
    std::size_t hop = 0;
    bool db = false;
    std::string output = "spectrogram.csv";
};

struct ComplexityArgs {
    std::string input;
    double scale = 1.0;
    std::size_t order = 8;
    double alpha = 0.2;
    double lambda = 0.99;
    std::string output = "complexity.csv";
};

struct ConvergeArgs {
    std::string omega = "pi/9";
    double amplitude = std::numbers::sqrt2;
    double alpha = 0.5;
    double lambda = 0.8;
    std::size_t order = 2;
    std::size_t samples = 2000;
    std::string output = "converge.csv";
};

// ------------------------------------------------------------ commands

int cmd_track(const TrackArgs& a, const CLI::App* sub) {
    TrackOptions opts;
    if (a.method == "lms")
        opts.method = TrackMethod::lms;
    else if (a.method == "rls")
        opts.method = TrackMethod::rls;
    else if (a.method == "lpc")
        opts.method = TrackMethod::lpc;
    else
        throw CLI::ValidationError("--method", "must be lms, rls or lpc");

    const auto given = [&](const char* name) { return sub->count(name) > 0; };
    if (given("--alpha") && opts.method != TrackMethod::lms)
        throw CLI::ValidationError("--alpha", "only applies to --method lms");
    if ((given("--lambda") || given("--delta")) && opts.method != TrackMethod::rls)
        throw CLI::ValidationError("--lambda/--delta", "only apply to --method rls");
    if ((given("--window") || given("--hop")) && opts.method != TrackMethod::lpc)
        throw CLI::ValidationError("--window/--hop", "only apply to --method lpc");
    if (given("--decimate") && opts.method == TrackMethod::lpc)
        throw CLI::ValidationError("--decimate", "only applies to the adaptive methods");
    if (given("--records") && opts.method == TrackMethod::lpc)
        throw CLI::ValidationError("--records", "only applies to the adaptive methods");
    if (given("--models") && opts.method != TrackMethod::lpc)
        throw CLI::ValidationError("--models", "only applies to --method lpc");

    opts.order = a.order;
    opts.n_formants = a.nformants;
    opts.decimate = a.decimate;
    opts.min_freq_hz = a.min_freq;
    opts.range_filter = a.range_filter;
    opts.lms.alpha = a.alpha;
    opts.rls.lambda = a.lambda;
    opts.rls.delta = a.delta;
    opts.frame.window_len = a.window;
    opts.frame.hop = a.hop;

    Signal sig = read_wav(a.input);
    if (a.scale != 1.0)
        for (auto& v : sig.samples) v *= a.scale;
    const FormantTrack track = track_formants(sig, opts);

    std::ostringstream csv;
    write_track_csv(track, csv);
    atomic_write(a.output, csv.str());

    Manifest m;
    m.command = "track";
    m.add_input(a.input);
    m.parameters = {{"method", a.method},       {"order", a.order},
                    {"nformants", a.nformants}, {"decimate", a.decimate},
                    {"min_freq_hz", a.min_freq}, {"range_filter", a.range_filter},
                    {"scale", a.scale}};
    if (opts.method == TrackMethod::lms)
        m.parameters["alpha"] = a.alpha;
    if (opts.method == TrackMethod::rls) {
        m.parameters["lambda"] = a.lambda;
        m.parameters["delta"] = a.delta;
    }
    if (opts.method == TrackMethod::lpc) {
        m.parameters["window"] = a.window;
        m.parameters["hop"] = a.hop;
    }
    m.outputs.push_back(a.output);

    if (!a.json_output.empty()) {
        atomic_write(a.json_output, track_to_json(track) + "\n");
        m.outputs.push_back(a.json_output);
    }
    if (!a.models_output.empty()) {
        const auto frames = lpc_analyze(remove_dc(sig), opts.frame, opts.order);
        std::ostringstream mdl_csv;
        write_lpc_csv(frames, opts.order, mdl_csv);
        atomic_write(a.models_output, mdl_csv.str());
        m.outputs.push_back(a.models_output);
    }
    if (!a.records_output.empty()) {
        PredictorParams params;
        if (opts.method == TrackMethod::lms)
            params = opts.lms;
        else
            params = opts.rls;
        const auto records = run_predictor(remove_dc(sig), params, opts.order, opts.decimate);
        std::ostringstream rec_csv;
        write_records_csv(records, opts.order, rec_csv);
        atomic_write(a.records_output, rec_csv.str());
        m.outputs.push_back(a.records_output);
    }
    m.write_for(a.output);
    return 0;
}

int cmd_synth(const SynthArgs& a) {
    SynthVowelSpec spec;
    spec.pitch_hz = a.pitch;
    spec.formants = parse_formants(a.formants);
    spec.duration_s = a.duration;
    spec.amplitude = a.amplitude;
    spec.glottal_tilt = a.tilt;
    if (!a.glide.empty()) {
        FormantGlide g;
        std::istringstream in(a.glide);
        char sep;
        if (!(in >> g.formant_index >> sep >> g.target_hz >> sep >> g.start_s >> sep >> g.end_s))
            throw CLI::ValidationError("--glide", "expected index:target_hz:start_s:end_s");
        spec.glide = g;
    }

    const Signal sig = gen_vowel(spec, a.fs);
    fs::path tmp = fs::path(a.output);
    tmp += ".tmp";
    write_wav(sig, tmp);
    fs::rename(tmp, a.output);

    Manifest m;
    m.command = "synth";
    m.parameters = {{"pitch_hz", a.pitch},     {"formants", a.formants},
                    {"duration_s", a.duration}, {"amplitude", a.amplitude},
                    {"fs_hz", a.fs},            {"glottal_tilt", a.tilt}};
    if (!a.glide.empty())
        m.parameters["glide"] = a.glide;
    m.outputs.push_back(a.output);
    m.write_for(a.output);
    return 0;
}

int cmd_analyze(const AnalyzeArgs& a) {
    std::vector<double> r;
    Manifest m;
    m.command = "analyze";
    if (!a.r_list.empty()) {
        std::istringstream in(a.r_list);
        std::string tok;
        while (std::getline(in, tok, ','))
            r.push_back(std::stod(tok));
        m.parameters["r"] = a.r_list;
    } else {
        if (a.input.empty())
            throw CLI::ValidationError("analyze", "need --input or --r");
        const Signal sig = remove_dc(read_wav(a.input));
        if (a.lags >= sig.samples.size())
            throw CLI::ValidationError("--lags", "must be smaller than the signal length");
        r = autocorrelation(sig.samples, a.lags);
        m.add_input(a.input);
        m.parameters["lags"] = a.lags;
    }

    const auto toeplitz = toeplitz_from_autocorr(r);
    const auto eigen = sym_eigenvalues(toeplitz);
    const double spread = eigen.back() != 0.0
                              ? eigen.front() / eigen.back()
                              : std::numeric_limits<double>::infinity();

    std::ostringstream out;
    csv::write_row(out, {"lag", "r", "eigenvalue"});
    for (std::size_t i = 0; i < r.size(); ++i)
        csv::write_row(out, {std::to_string(i), csv::num(r[i]), csv::num(eigen[i])});
    atomic_write(a.output, out.str());

    std::cout << "eigenvalue spread (max/min) = " << spread << "\n";
    m.parameters["eigenvalue_spread"] = spread;
    m.outputs.push_back(a.output);
    m.write_for(a.output);
    return 0;
}

int cmd_surface(const SurfaceArgs& a) {
    const double omega = parse_angle(a.omega);
    const auto model = autocorr_matrix_2tap(omega, a.power);
    const auto pts = error_surface(a.power, model.p, model.R, a.grid);

    std::ostringstream out;
    write_surface_csv(pts, out);
    atomic_write(a.output, out.str());

    const auto wstar = wiener_solution(model.R, model.p);
    std::cout << "wiener solution w* = [" << wstar[0] << ", " << wstar[1] << "]\n";

    Manifest m;
    m.command = "surface";
    m.parameters = {{"omega", a.omega},     {"power", a.power},   {"w0_min", a.grid.w0_min},
                    {"w0_max", a.grid.w0_max}, {"w1_min", a.grid.w1_min},
                    {"w1_max", a.grid.w1_max}, {"step", a.grid.step},
                    {"wiener", {wstar[0], wstar[1]}}};
    m.outputs.push_back(a.output);
    m.write_for(a.output);
    return 0;
}

int cmd_spectrogram(const SpectrogramArgs& a) {
    SpectrogramConfig cfg;
    if (a.preset == "broadband")
        cfg = SpectrogramConfig::broadband();
    else if (a.preset == "narrowband")
        cfg = SpectrogramConfig::narrowband();
    else
        throw CLI::ValidationError("--preset", "must be broadband or narrowband");
    if (a.nfft) cfg.nfft = a.nfft;
    if (a.winlen) cfg.window = blackman_window(a.winlen);
    if (a.hop) cfg.hop = a.hop;

    const Signal sig = remove_dc(read_wav(a.input));
    const auto spec = stft_spectrogram(sig, cfg);

    std::ostringstream out;
    write_spectrogram_csv(spec, out, a.db);
    atomic_write(a.output, out.str());

    Manifest m;
    m.command = "spectrogram";
    m.add_input(a.input);
    m.parameters = {{"preset", a.preset},
                    {"nfft", cfg.nfft},
                    {"window_len", cfg.window.size()},
                    {"hop", cfg.hop},
                    {"db", a.db}};
    m.outputs.push_back(a.output);
    m.write_for(a.output);
    return 0;
}

int cmd_complexity(const ComplexityArgs& a) {
    Signal sig;
    Manifest m;
    m.command = "complexity";
    if (!a.input.empty()) {
        sig = remove_dc(read_wav(a.input));
        if (a.scale != 1.0)
            for (auto& v : sig.samples) v *= a.scale;
        m.add_input(a.input);
    } else {
        SynthVowelSpec spec;
        spec.formants = {{500.0, 60.0}, {1500.0, 90.0}, {2500.0, 120.0}};
        sig = gen_vowel(spec, 8000.0);
        m.parameters["input"] = "builtin vowel 500/1500/2500, 1 s";
    }

    const auto report =
        complexity_report(sig, a.order, LmsParams{a.alpha}, RlsParams{a.lambda}, FrameConfig{});

    std::ostringstream out;
    write_complexity_csv(report, out);
    atomic_write(a.output, out.str());
    std::cout << format_complexity_table(report);

    m.parameters["order"] = a.order;
    m.parameters["alpha"] = a.alpha;
    m.parameters["lambda"] = a.lambda;
    m.outputs.push_back(a.output);
    m.write_for(a.output);
    return 0;
}

int cmd_converge(const ConvergeArgs& a) {
    const double omega = parse_angle(a.omega);
    const Signal sig = gen_sinusoid(a.amplitude, omega, a.samples);
    const auto lms = run_predictor(sig, LmsParams{a.alpha}, a.order, a.samples + 1);
    const auto rls = run_predictor(sig, RlsParams{a.lambda}, a.order, a.samples + 1);

    std::ostringstream out;
    csv::write_row(out, {"n", "abs_err_lms", "abs_err_rls"});
    for (std::size_t i = 0; i < lms.size(); ++i)
        csv::write_row(out, {std::to_string(lms[i].sample_index),
                             csv::num(std::abs(lms[i].apriori_error)),
                             csv::num(std::abs(rls[i].apriori_error))});
    atomic_write(a.output, out.str());

    Manifest m;
    m.command = "converge";
    m.parameters = {{"omega", a.omega},   {"amplitude", a.amplitude}, {"alpha", a.alpha},
                    {"lambda", a.lambda}, {"order", a.order},         {"samples", a.samples}};
    m.outputs.push_back(a.output);
    m.write_for(a.output);
    return 0;
}

} // namespace

double parse_angle(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    const auto pi_pos = s.find("pi");
    if (pi_pos == std::string::npos)
        return std::stod(s);

    double sign = 1.0;
    std::string head = s.substr(0, pi_pos);
    if (!head.empty() && (head.back() == '*'))
        head.pop_back();
    if (!head.empty() && head[0] == '-') {
        sign = -1.0;
        head = head.substr(1);
    } else if (!head.empty() && head[0] == '+') {
        head = head.substr(1);
    }
    const double numer = head.empty() ? 1.0 : std::stod(head);

    std::string tail = s.substr(pi_pos + 2);
    double denom = 1.0;
    if (!tail.empty()) {
        if (tail[0] != '/')
            throw std::invalid_argument("parse_angle: cannot parse '" + text + "'");
        denom = std::stod(tail.substr(1));
    }
    return sign * numer * std::numbers::pi / denom;
}

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"speech formant estimation toolkit: sample-recursive LMS/RLS "
                 "predictors and block Levinson-Durbin LPC with a shared "
                 "root-based formant extractor"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);
    app.set_config("--config", "", "JSON config file (flags take precedence)");
    app.config_formatter(std::make_shared<JsonConfig>());

    TrackArgs track;
    auto* t = app.add_subcommand("track", "estimate a formant track from a WAV file");
    t->add_option("--input", track.input, "input WAV (PCM16 mono)")->required();
    t->add_option("--method", track.method, "lms | rls | lpc")->capture_default_str();
    t->add_option("--scale", track.scale,
                  "multiply input samples before analysis; LMS step sizes are "
                  "scale-sensitive, RLS and LPC are not")
        ->capture_default_str();
    t->add_option("--order", track.order, "predictor order P")->capture_default_str();
    t->add_option("--nformants", track.nformants, "formant slots N")->capture_default_str();
    t->add_option("--alpha", track.alpha, "LMS step size")->capture_default_str();
    t->add_option("--lambda", track.lambda, "RLS forgetting factor")->capture_default_str();
    t->add_option("--delta", track.delta, "RLS init constant (0 = auto)")->capture_default_str();
    t->add_option("--decimate", track.decimate, "snapshot stride in samples")
        ->capture_default_str();
    t->add_option("--min-freq", track.min_freq, "lowest admissible formant, Hz")
        ->capture_default_str();
    t->add_flag("--range-filter", track.range_filter,
                "drop slots outside the standard F1/F2/F3 bands");
    t->add_option("--window", track.window, "LPC window length, samples")->capture_default_str();
    t->add_option("--hop", track.hop, "LPC hop, samples")->capture_default_str();
    t->add_option("--output", track.output, "track CSV path")->capture_default_str();
    t->add_option("--json", track.json_output, "also write the track as JSON");
    t->add_option("--records", track.records_output,
                  "also dump adaptive error/weight snapshots as CSV");
    t->add_option("--models", track.models_output,
                  "also dump per-frame LPC models as CSV (lpc method)");

    SynthArgs synth;
    auto* sy = app.add_subcommand("synth", "generate a synthetic vowel WAV");
    sy->add_option("--output", synth.output, "output WAV path")->capture_default_str();
    sy->add_option("--pitch", synth.pitch, "pitch f0, Hz")->capture_default_str();
    sy->add_option("--formant", synth.formants, "freq:bandwidth (repeatable)")
        ->capture_default_str();
    sy->add_option("--duration", synth.duration, "seconds")->capture_default_str();
    sy->add_option("--amplitude", synth.amplitude, "peak amplitude")->capture_default_str();
    sy->add_option("--fs", synth.fs, "sample rate, Hz")->capture_default_str();
    sy->add_option("--tilt", synth.tilt, "glottal lowpass pole in [0,1)")->capture_default_str();
    sy->add_option("--glide", synth.glide, "index:target_hz:start_s:end_s");

    AnalyzeArgs analyze;
    auto* an = app.add_subcommand("analyze", "autocorrelation and Toeplitz eigenvalues");
    an->add_option("--input", analyze.input, "input WAV");
    an->add_option("--r", analyze.r_list, "comma list r(0..m) instead of --input");
    an->add_option("--lags", analyze.lags, "autocorrelation lags m")->capture_default_str();
    an->add_option("--output", analyze.output, "CSV path")->capture_default_str();

    SurfaceArgs surface;
    auto* su = app.add_subcommand("surface", "two-tap prediction error surface");
    su->add_option("--omega", surface.omega, "sinusoid frequency, rad/sample (pi/9 style)")
        ->capture_default_str();
    su->add_option("--power", surface.power, "sinusoid average power")->capture_default_str();
    su->add_option("--w0-min", surface.grid.w0_min)->capture_default_str();
    su->add_option("--w0-max", surface.grid.w0_max)->capture_default_str();
    su->add_option("--w1-min", surface.grid.w1_min)->capture_default_str();
    su->add_option("--w1-max", surface.grid.w1_max)->capture_default_str();
    su->add_option("--step", surface.grid.step)->capture_default_str();
    su->add_option("--output", surface.output, "CSV path")->capture_default_str();

    SpectrogramArgs spectro;
    auto* sp = app.add_subcommand("spectrogram", "STFT magnitude matrix");
    sp->add_option("--input", spectro.input, "input WAV")->required();
    sp->add_option("--preset", spectro.preset, "broadband | narrowband")->capture_default_str();
    sp->add_option("--nfft", spectro.nfft, "override FFT size");
    sp->add_option("--winlen", spectro.winlen, "override Blackman window length");
    sp->add_option("--hop", spectro.hop, "override hop");
    sp->add_flag("--db", spectro.db, "write dB magnitudes, floor -120");
    sp->add_option("--output", spectro.output, "CSV path")->capture_default_str();

    ComplexityArgs complexity;
    auto* co = app.add_subcommand("complexity", "counted-operation comparison");
    co->add_option("--input", complexity.input, "input WAV (default: builtin vowel)");
    co->add_option("--scale", complexity.scale, "multiply input samples before analysis")
        ->capture_default_str();
    co->add_option("--order", complexity.order, "predictor order P")->capture_default_str();
    co->add_option("--alpha", complexity.alpha, "LMS step size")->capture_default_str();
    co->add_option("--lambda", complexity.lambda, "RLS forgetting factor")->capture_default_str();
    co->add_option("--output", complexity.output, "CSV path")->capture_default_str();

    ConvergeArgs converge;
    auto* cv = app.add_subcommand("converge", "LMS vs RLS error on a clean sinusoid");
    cv->add_option("--omega", converge.omega, "rad/sample (pi/9 style)")->capture_default_str();
    cv->add_option("--amplitude", converge.amplitude, "sinusoid amplitude")
        ->capture_default_str();
    cv->add_option("--alpha", converge.alpha, "LMS step size")->capture_default_str();
    cv->add_option("--lambda", converge.lambda, "RLS forgetting factor")->capture_default_str();
    cv->add_option("--order", converge.order, "predictor order P")->capture_default_str();
    cv->add_option("--samples", converge.samples, "run length")->capture_default_str();
    cv->add_option("--output", converge.output, "CSV path")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (t->parsed()) return cmd_track(track, t);
        if (sy->parsed()) return cmd_synth(synth);
        if (an->parsed()) return cmd_analyze(analyze);
        if (su->parsed()) return cmd_surface(surface);
        if (sp->parsed()) return cmd_spectrogram(spectro);
        if (co->parsed()) return cmd_complexity(complexity);
        if (cv->parsed()) return cmd_converge(converge);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DivergenceError& e) {
        std::cerr << "divergence: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace ftk
