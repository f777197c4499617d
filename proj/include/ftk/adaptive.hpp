// Sample-recursive forward linear predictors: conventional LMS and
// conventional exponentially-weighted RLS.
//
// Update conventions, stated once and used everywhere:
//   LMS    e = d - w'u (pre-update weights), w <- w + alpha*e*u.
//          No factor 2: alpha here is half of Widrow's 2*mu form.
//   RLS    pi = P*u, k = pi/(lambda + u'pi), e = d - w'u,
//          w <- w + k*e, P <- (P - k*pi')/lambda, re-symmetrized.
//          P starts as (1/delta)*I, so P^-1(n) = sum lambda^(n-i) u u'
//          + lambda^n * delta * I and small delta means fast startup.
// Both predictors are one-step forward: d(n) = x(n),
// u(n) = [x(n-1), ..., x(n-P)].

#ifndef FTK_ADAPTIVE_HPP
#define FTK_ADAPTIVE_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ftk/opcount.hpp"
#include "ftk/signal.hpp"

namespace ftk {

/// Raised when |e| or any |w| exceeds the divergence bound (1e12): the
/// run aborts loudly instead of emitting garbage.
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

struct LmsState {
    std::vector<double> weights;
    double step_alpha = 0.1;
};

struct RlsState {
    std::vector<double> weights;
    std::vector<double> inv_corr;   // order x order, row-major, symmetric
    double lambda = 0.99;
    double delta = 1e-2;

    std::size_t order() const { return weights.size(); }
};

LmsState make_lms(std::size_t order, double alpha);

/// inv_corr is initialized to (1/delta)*I.
RlsState make_rls(std::size_t order, double lambda, double delta);

struct LmsStepResult {
    double error;
    LmsState state;
};

struct RlsStepResult {
    double apriori_error;
    RlsState state;
};

/// One LMS update. The input state is consumed; the returned state holds
/// the post-update weights.
LmsStepResult lms_step(LmsState state, std::span<const double> input_vec, double desired,
                       OpCount* ops = nullptr);

/// One conventional RLS update. Throws DivergenceError if any intermediate
/// goes non-finite.
RlsStepResult rls_step(RlsState state, std::span<const double> input_vec, double desired,
                       OpCount* ops = nullptr);

/// sum over i of lambda^(n-i) * e(i)^2, i = 1..n  (lambda = 1 is the
/// plain sum of squares).
double weighted_sse(std::span<const double> errors, double lambda);

struct PredictionRecord {
    std::size_t sample_index = 0;
    double apriori_error = 0.0;
    std::optional<std::vector<double>> weights_snapshot;
};

struct LmsParams {
    double alpha = 0.2;
};

struct RlsParams {
    double lambda = 0.99;
    double delta = 0.0;   // <= 0: auto, 0.01 * power of first 4P samples (floor 1e-6)
};

using PredictorParams = std::variant<LmsParams, RlsParams>;

/// Effective delta for a signal: the configured value if positive, else
/// 0.01 * mean square of the first 4*order samples, floored at 1e-6.
double default_rls_delta(const Signal& signal, std::size_t order, const RlsParams& params);

/// Run a predictor over the signal. Iterates n = order..len-1 with zero
/// initial weights, records every a-priori error, and snapshots the
/// weights whenever n is a multiple of `decimate`. Aborts with
/// DivergenceError when |e| or |w| passes 1e12.
std::vector<PredictionRecord> run_predictor(const Signal& signal, const PredictorParams& params,
                                            std::size_t order, std::size_t decimate,
                                            OpCount* ops = nullptr);

/// Coefficients [1, -a1, ..., -aP] of 1 - A(z), descending powers of z.
std::vector<double> weights_to_poly(std::span<const double> weights);

/// CSV export: header n,error,w_0..w_{P-1}; snapshot rows only.
void write_records_csv(std::span<const PredictionRecord> records, std::size_t order,
                       std::ostream& out);

} // namespace ftk

#endif
