#include "ftk/lpc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ftk/csv.hpp"

namespace ftk {

std::vector<double> make_window(WindowKind kind, std::size_t len) {
    if (len < 2)
        throw std::invalid_argument("make_window: length must be >= 2");
    std::vector<double> w(len, 1.0);
    if (kind == WindowKind::rectangular)
        return w;
    const double denom = static_cast<double>(len - 1);
    for (std::size_t n = 0; n <= (len - 1) / 2; ++n) {
        const double v = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi *
                                                static_cast<double>(n) / denom);
        w[n] = v;
        w[len - 1 - n] = v;
    }
    return w;
}

std::vector<std::vector<double>> frame_signal(const Signal& signal, const FrameConfig& config) {
    if (config.hop < 1 || config.hop > config.window_len)
        throw std::invalid_argument("frame_signal: need 1 <= hop <= window_len");
    if (signal.samples.size() < config.window_len)
        throw std::invalid_argument("frame_signal: signal shorter than one window");

    const std::vector<double> win = make_window(config.window, config.window_len);
    std::vector<std::vector<double>> frames;
    for (std::size_t start = 0; start + config.window_len <= signal.samples.size();
         start += config.hop) {
        std::vector<double> frame(config.window_len);
        for (std::size_t i = 0; i < config.window_len; ++i)
            frame[i] = signal.samples[start + i] * win[i];
        frames.push_back(std::move(frame));
    }
    return frames;
}

std::vector<double> autocorrelation(std::span<const double> frame, std::size_t max_lag,
                                    OpCount* ops) {
    const std::size_t len = frame.size();
    if (max_lag >= len)
        throw std::invalid_argument("autocorrelation: max_lag must be < frame length");
    std::vector<double> r(max_lag + 1, 0.0);
    for (std::size_t i = 0; i <= max_lag; ++i) {
        double acc = 0.0;
        for (std::size_t n = 0; n + i < len; ++n)
            acc += frame[n] * frame[n + i];
        r[i] = acc;
        if (ops) {
            ops->mults += len - i;
            ops->adds += len - i - 1;
        }
    }
    return r;
}

LpcModel levinson_durbin(std::span<const double> r, std::size_t order, OpCount* ops) {
    if (order < 1)
        throw std::invalid_argument("levinson_durbin: order must be >= 1");
    if (r.size() < order + 1)
        throw std::invalid_argument("levinson_durbin: need r(0..order)");
    if (!(r[0] > 0.0))
        throw std::invalid_argument("levinson_durbin: r(0) must be positive");

    LpcModel model;
    model.coeffs.assign(order, 0.0);
    model.reflection.reserve(order);

    std::vector<double> prev(order, 0.0);
    double err = r[0];

    for (std::size_t i = 1; i <= order; ++i) {
        double acc = r[i];
        for (std::size_t j = 1; j < i; ++j)
            acc -= prev[j - 1] * r[i - j];
        const double k = acc / err;
        if (ops) {
            ops->mults += i - 1;
            ops->adds += i - 1;
            ops->divs += 1;
        }

        model.coeffs[i - 1] = k;
        for (std::size_t j = 1; j < i; ++j)
            model.coeffs[j - 1] = prev[j - 1] - k * prev[i - j - 1];
        if (ops) {
            ops->mults += i - 1;
            ops->adds += i - 1;
        }

        err *= (1.0 - k * k);
        if (ops) {
            ops->mults += 2;
            ops->adds += 1;
        }
        model.reflection.push_back(k);
        if (i < order && !(err > 0.0))
            throw std::invalid_argument("levinson_durbin: non-positive error power at stage " +
                                        std::to_string(i) + " (degenerate autocorrelation)");
        prev = model.coeffs;
    }
    // A perfectly predictable signal has E_P = 0 exactly; rounding can
    // land epsilon below zero.
    if (err < 0.0 && err >= -1e-12 * r[0])
        err = 0.0;
    if (err < 0.0)
        throw std::invalid_argument("levinson_durbin: negative final error power "
                                    "(degenerate autocorrelation)");
    model.error_power = err;
    return model;
}

std::vector<LpcFrame> lpc_analyze(const Signal& signal, const FrameConfig& config,
                                  std::size_t order, OpCount* ops) {
    if (order >= config.window_len)
        throw std::invalid_argument("lpc_analyze: order must be < window length");
    const auto frames = frame_signal(signal, config);

    std::vector<LpcFrame> out;
    out.reserve(frames.size());
    for (std::size_t j = 0; j < frames.size(); ++j) {
        LpcFrame f;
        f.start_sample = j * config.hop;
        f.time_s = (static_cast<double>(f.start_sample) +
                    static_cast<double>(config.window_len) / 2.0) /
                   signal.sample_rate_hz;
        if (ops)
            ops->mults += config.window_len;   // windowing inside frame_signal
        try {
            const auto r = autocorrelation(frames[j], order, ops);
            f.model = levinson_durbin(r, order, ops);
        } catch (const std::invalid_argument&) {
            // degenerate frame: leave the gap
        }
        out.push_back(std::move(f));
    }
    return out;
}

void write_lpc_csv(std::span<const LpcFrame> frames, std::size_t order, std::ostream& out) {
    std::vector<std::string> row;
    row.push_back("frame_time_s");
    row.push_back("sigma2");
    for (std::size_t i = 1; i <= order; ++i)
        row.push_back("a_" + std::to_string(i));
    csv::write_row(out, row);
    for (const auto& f : frames) {
        row.clear();
        row.push_back(csv::num(f.time_s));
        if (f.model) {
            row.push_back(csv::num(f.model->error_power));
            for (double a : f.model->coeffs)
                row.push_back(csv::num(a));
        } else {
            for (std::size_t i = 0; i <= order; ++i)
                row.push_back("");
        }
        csv::write_row(out, row);
    }
}

} // namespace ftk
