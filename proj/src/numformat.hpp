#pragma once

#include <string>

namespace freefall {

// Shortest decimal form that round-trips to the same double (std::to_chars).
// All file output goes through this so repeated runs are byte-identical.
std::string format_double(double v);

// Append ",field" style cells; the CSV dialect is RFC-4180 with LF endings and
// no quoting (fields here never contain commas or quotes).
void csv_cell(std::string& line, double v);
void csv_cell(std::string& line, long long v);
void csv_cell(std::string& line, const std::string& v);

} // namespace freefall
