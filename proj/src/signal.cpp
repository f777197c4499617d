#include "ftk/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace ftk {

Signal remove_dc(const Signal& in) {
    if (in.samples.empty())
        throw std::invalid_argument("remove_dc: empty signal");
    double mean = 0.0;
    for (double v : in.samples) mean += v;
    mean /= static_cast<double>(in.samples.size());
    Signal out;
    out.sample_rate_hz = in.sample_rate_hz;
    out.samples.reserve(in.samples.size());
    for (double v : in.samples) out.samples.push_back(v - mean);
    return out;
}

Signal gen_sinusoid(double amplitude, double omega, std::size_t n_samples,
                    double phase, double sample_rate_hz) {
    if (n_samples < 1)
        throw std::invalid_argument("gen_sinusoid: n_samples must be >= 1");
    Signal out;
    out.sample_rate_hz = sample_rate_hz;
    out.samples.resize(n_samples);
    for (std::size_t n = 0; n < n_samples; ++n)
        out.samples[n] = amplitude * std::cos(omega * static_cast<double>(n) + phase);
    return out;
}

} // namespace ftk
