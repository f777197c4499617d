// Counted-operation comparison of the three estimators on one signal.
//
// The classic MATLAB flops-based measurement of this three-way
// comparison reported ratios 1 : 21 : 52 (LMS : Levinson-Durbin : RLS);
// that counter no longer exists and used a different basis, so the
// report quotes those reference ratios next to the counts measured here
// rather than trying to reproduce them.

#ifndef FTK_COMPLEXITY_HPP
#define FTK_COMPLEXITY_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "ftk/adaptive.hpp"
#include "ftk/lpc.hpp"
#include "ftk/opcount.hpp"
#include "ftk/signal.hpp"

namespace ftk {

struct AlgorithmCost {
    std::string name;
    OpCount ops;
    std::size_t units = 0;        // samples processed (adaptive) or frames (lpc)
    double per_sample = 0.0;      // total ops / predictor steps, lpc: per input sample
    double ratio_vs_lms = 0.0;
    double flops_ratio_reference = 0.0;   // 1, 21, 52
};

struct ComplexityReport {
    std::size_t order = 0;
    std::size_t n_samples = 0;
    std::vector<AlgorithmCost> algorithms;   // lms, levinson_durbin, rls
};

/// Runs all three methods over the signal with shared order and the
/// given settings, tallying every multiply, add and divide.
ComplexityReport complexity_report(const Signal& signal, std::size_t order,
                                   const LmsParams& lms, const RlsParams& rls,
                                   const FrameConfig& frame);

/// Per-sample LMS cost of one predictor step: 2P+1 multiplies, 2P adds.
OpCount lms_cost_per_sample(std::size_t order);

void write_complexity_csv(const ComplexityReport& report, std::ostream& out);

/// Human-readable table for stdout.
std::string format_complexity_table(const ComplexityReport& report);

} // namespace ftk

#endif
