#include "ftk/adaptive.hpp"

#include <cmath>
#include <cstdlib>

#include "ftk/csv.hpp"

namespace ftk {

namespace {

constexpr double kDivergenceBound = 1e12;

// Dot product counted as P mults and P-1 adds.
double counted_dot(std::span<const double> a, std::span<const double> b, OpCount* ops) {
    double acc = a[0] * b[0];
    for (std::size_t i = 1; i < a.size(); ++i)
        acc += a[i] * b[i];
    if (ops) {
        ops->mults += a.size();
        ops->adds += a.size() - 1;
    }
    return acc;
}

} // namespace

LmsState make_lms(std::size_t order, double alpha) {
    if (order < 1)
        throw std::invalid_argument("make_lms: order must be >= 1");
    if (alpha <= 0.0)
        throw std::invalid_argument("make_lms: alpha must be positive");
    return {std::vector<double>(order, 0.0), alpha};
}

RlsState make_rls(std::size_t order, double lambda, double delta) {
    if (order < 1)
        throw std::invalid_argument("make_rls: order must be >= 1");
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw std::invalid_argument("make_rls: lambda must lie in (0, 1]");
    if (delta <= 0.0)
        throw std::invalid_argument("make_rls: delta must be positive");
    RlsState s;
    s.weights.assign(order, 0.0);
    s.inv_corr.assign(order * order, 0.0);
    for (std::size_t i = 0; i < order; ++i)
        s.inv_corr[i * order + i] = 1.0 / delta;
    s.lambda = lambda;
    s.delta = delta;
    return s;
}

LmsStepResult lms_step(LmsState state, std::span<const double> input_vec, double desired,
                       OpCount* ops) {
    const std::size_t p = state.weights.size();
    if (input_vec.size() != p)
        throw std::invalid_argument("lms_step: input length does not match order");

    const double e = desired - counted_dot(state.weights, input_vec, ops);
    const double scaled = state.step_alpha * e;
    for (std::size_t i = 0; i < p; ++i)
        state.weights[i] += scaled * input_vec[i];
    if (ops) {
        ops->adds += 1;       // error subtraction
        ops->mults += 1 + p;  // alpha*e, then scaled*u_i
        ops->adds += p;       // weight accumulation
    }
    return {e, std::move(state)};
}

RlsStepResult rls_step(RlsState state, std::span<const double> input_vec, double desired,
                       OpCount* ops) {
    const std::size_t p = state.weights.size();
    if (input_vec.size() != p)
        throw std::invalid_argument("rls_step: input length does not match order");

    std::vector<double> pi(p);
    for (std::size_t i = 0; i < p; ++i)
        pi[i] = counted_dot(std::span<const double>(state.inv_corr).subspan(i * p, p),
                            input_vec, ops);

    const double denom = state.lambda + counted_dot(input_vec, pi, ops);
    if (ops) ops->adds += 1;

    std::vector<double> gain(p);
    for (std::size_t i = 0; i < p; ++i)
        gain[i] = pi[i] / denom;
    if (ops) ops->divs += p;

    const double e = desired - counted_dot(state.weights, input_vec, ops);
    if (ops) ops->adds += 1;

    for (std::size_t i = 0; i < p; ++i)
        state.weights[i] += e * gain[i];
    if (ops) {
        ops->mults += p;
        ops->adds += p;
    }

    // inv_corr <- (inv_corr - gain*pi') / lambda, then force symmetry.
    const double inv_lambda = 1.0 / state.lambda;
    if (ops) ops->divs += 1;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            state.inv_corr[i * p + j] = (state.inv_corr[i * p + j] - gain[i] * pi[j]) * inv_lambda;
    if (ops) {
        ops->mults += 2 * p * p;
        ops->adds += p * p;
    }
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) {
            const double m = (state.inv_corr[i * p + j] + state.inv_corr[j * p + i]) * 0.5;
            state.inv_corr[i * p + j] = m;
            state.inv_corr[j * p + i] = m;
        }
    if (ops) {
        ops->adds += p * (p - 1) / 2;
        ops->mults += p * (p - 1) / 2;
    }

    if (!std::isfinite(e) || !std::isfinite(denom))
        throw DivergenceError("rls_step: non-finite intermediate (numerical blow-up)");
    for (double w : state.weights)
        if (!std::isfinite(w))
            throw DivergenceError("rls_step: non-finite weight (numerical blow-up)");

    return {e, std::move(state)};
}

double weighted_sse(std::span<const double> errors, double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw std::invalid_argument("weighted_sse: lambda must lie in (0, 1]");
    // Horner over i = 1..n: acc <- acc*lambda + e(i)^2 gives
    // sum lambda^(n-i) e(i)^2 without forming large powers.
    double acc = 0.0;
    for (double e : errors)
        acc = acc * lambda + e * e;
    return acc;
}

double default_rls_delta(const Signal& signal, std::size_t order, const RlsParams& params) {
    if (params.delta > 0.0)
        return params.delta;
    const std::size_t n = std::min(signal.samples.size(), 4 * order);
    double power = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        power += signal.samples[i] * signal.samples[i];
    if (n > 0) power /= static_cast<double>(n);
    return std::max(1e-6, 0.01 * power);
}

std::vector<PredictionRecord> run_predictor(const Signal& signal, const PredictorParams& params,
                                            std::size_t order, std::size_t decimate,
                                            OpCount* ops) {
    if (order < 1)
        throw std::invalid_argument("run_predictor: order must be >= 1");
    if (decimate < 1)
        throw std::invalid_argument("run_predictor: decimate must be >= 1");
    if (signal.samples.size() <= order)
        throw std::invalid_argument("run_predictor: signal not longer than order");

    const bool is_lms = std::holds_alternative<LmsParams>(params);
    LmsState lms;
    RlsState rls;
    if (is_lms)
        lms = make_lms(order, std::get<LmsParams>(params).alpha);
    else
        rls = make_rls(order, std::get<RlsParams>(params).lambda,
                       default_rls_delta(signal, order, std::get<RlsParams>(params)));

    const std::vector<double>& x = signal.samples;
    std::vector<double> u(order);
    std::vector<PredictionRecord> records;
    records.reserve(x.size() - order);

    for (std::size_t n = order; n < x.size(); ++n) {
        for (std::size_t i = 0; i < order; ++i)
            u[i] = x[n - 1 - i];

        double e;
        const std::vector<double>* w;
        if (is_lms) {
            auto res = lms_step(std::move(lms), u, x[n], ops);
            e = res.error;
            lms = std::move(res.state);
            w = &lms.weights;
        } else {
            auto res = rls_step(std::move(rls), u, x[n], ops);
            e = res.apriori_error;
            rls = std::move(res.state);
            w = &rls.weights;
        }

        if (std::abs(e) > kDivergenceBound)
            throw DivergenceError("run_predictor: |error| exceeded 1e12 at sample " +
                                  std::to_string(n));
        for (double wi : *w)
            if (std::abs(wi) > kDivergenceBound)
                throw DivergenceError("run_predictor: |weight| exceeded 1e12 at sample " +
                                      std::to_string(n));

        PredictionRecord rec;
        rec.sample_index = n;
        rec.apriori_error = e;
        if (n % decimate == 0)
            rec.weights_snapshot = *w;
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<double> weights_to_poly(std::span<const double> weights) {
    std::vector<double> coeffs;
    coeffs.reserve(weights.size() + 1);
    coeffs.push_back(1.0);
    for (double w : weights)
        coeffs.push_back(-w);
    return coeffs;
}

void write_records_csv(std::span<const PredictionRecord> records, std::size_t order,
                       std::ostream& out) {
    std::vector<std::string> row;
    row.push_back("n");
    row.push_back("error");
    for (std::size_t i = 0; i < order; ++i)
        row.push_back("w_" + std::to_string(i));
    csv::write_row(out, row);
    for (const auto& rec : records) {
        if (!rec.weights_snapshot)
            continue;
        row.clear();
        row.push_back(std::to_string(rec.sample_index));
        row.push_back(csv::num(rec.apriori_error));
        for (double w : *rec.weights_snapshot)
            row.push_back(csv::num(w));
        csv::write_row(out, row);
    }
}

} // namespace ftk
