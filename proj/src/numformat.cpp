#include "numformat.hpp"

#include <charconv>
#include <cstdio>

namespace freefall {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void csv_cell(std::string& line, double v) {
    if (!line.empty()) line += ',';
    line += format_double(v);
}

void csv_cell(std::string& line, long long v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    if (!line.empty()) line += ',';
    line.append(buf, res.ptr);
}

void csv_cell(std::string& line, const std::string& v) {
    if (!line.empty()) line += ',';
    line += v;
}

} // namespace freefall
