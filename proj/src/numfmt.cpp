#include "graphaudit/numfmt.hpp"

#include <charconv>
#include <cstdio>

namespace graphaudit {

std::string format_full(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string format_round2(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    return buf;
}

}  // namespace graphaudit
