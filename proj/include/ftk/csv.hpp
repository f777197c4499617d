// Minimal RFC-4180 CSV output helpers shared by the module exporters.

#ifndef FTK_CSV_HPP
#define FTK_CSV_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ftk::csv {

/// Shortest decimal form that round-trips the double exactly.
std::string num(double v);

/// Quotes the field if it contains a comma, quote or newline.
std::string field(const std::string& s);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

} // namespace ftk::csv

#endif
