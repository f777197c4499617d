#include "ftk/complexity.hpp"

#include <iomanip>
#include <sstream>

#include "ftk/csv.hpp"

namespace ftk {

OpCount lms_cost_per_sample(std::size_t order) {
    OpCount c;
    c.mults = 2 * order + 1;
    c.adds = 2 * order;
    c.divs = 0;
    return c;
}

ComplexityReport complexity_report(const Signal& signal, std::size_t order,
                                   const LmsParams& lms, const RlsParams& rls,
                                   const FrameConfig& frame) {
    ComplexityReport report;
    report.order = order;
    report.n_samples = signal.samples.size();

    const std::size_t steps = signal.samples.size() - order;

    AlgorithmCost lms_cost;
    lms_cost.name = "lms";
    run_predictor(signal, lms, order, signal.samples.size(), &lms_cost.ops);
    lms_cost.units = steps;
    lms_cost.per_sample = static_cast<double>(lms_cost.ops.total()) / static_cast<double>(steps);
    lms_cost.ratio_vs_lms = 1.0;
    lms_cost.flops_ratio_reference = 1.0;

    AlgorithmCost lpc_cost;
    lpc_cost.name = "levinson_durbin";
    const auto frames = lpc_analyze(signal, frame, order, &lpc_cost.ops);
    lpc_cost.units = frames.size();
    lpc_cost.per_sample =
        static_cast<double>(lpc_cost.ops.total()) / static_cast<double>(signal.samples.size());
    lpc_cost.ratio_vs_lms =
        static_cast<double>(lpc_cost.ops.total()) / static_cast<double>(lms_cost.ops.total());
    lpc_cost.flops_ratio_reference = 21.0;

    AlgorithmCost rls_cost;
    rls_cost.name = "rls";
    run_predictor(signal, rls, order, signal.samples.size(), &rls_cost.ops);
    rls_cost.units = steps;
    rls_cost.per_sample = static_cast<double>(rls_cost.ops.total()) / static_cast<double>(steps);
    rls_cost.ratio_vs_lms =
        static_cast<double>(rls_cost.ops.total()) / static_cast<double>(lms_cost.ops.total());
    rls_cost.flops_ratio_reference = 52.0;

    report.algorithms = {lms_cost, lpc_cost, rls_cost};
    return report;
}

void write_complexity_csv(const ComplexityReport& report, std::ostream& out) {
    csv::write_row(out, {"algorithm", "mults", "adds", "divs", "total", "per_sample",
                         "ratio_vs_lms", "flops_ratio_reference"});
    for (const auto& a : report.algorithms)
        csv::write_row(out, {a.name, std::to_string(a.ops.mults), std::to_string(a.ops.adds),
                             std::to_string(a.ops.divs), std::to_string(a.ops.total()),
                             csv::num(a.per_sample), csv::num(a.ratio_vs_lms),
                             csv::num(a.flops_ratio_reference)});
}

std::string format_complexity_table(const ComplexityReport& report) {
    std::ostringstream out;
    out << "order P = " << report.order << ", samples = " << report.n_samples << "\n";
    out << std::left << std::setw(17) << "algorithm" << std::right << std::setw(12) << "mults"
        << std::setw(12) << "adds" << std::setw(10) << "divs" << std::setw(12) << "total"
        << std::setw(12) << "per-sample" << std::setw(10) << "ratio" << "\n";
    for (const auto& a : report.algorithms) {
        out << std::left << std::setw(17) << a.name << std::right << std::setw(12) << a.ops.mults
            << std::setw(12) << a.ops.adds << std::setw(10) << a.ops.divs << std::setw(12)
            << a.ops.total() << std::setw(12) << std::fixed << std::setprecision(1)
            << a.per_sample << std::setw(10) << std::setprecision(2) << a.ratio_vs_lms << "\n";
        out.unsetf(std::ios::fixed);
    }
    out << "reference MATLAB flops ratios (different counting basis, not reproduced): "
           "lms 1 : levinson_durbin 21 : rls 52\n";
    return out.str();
}

} // namespace ftk
