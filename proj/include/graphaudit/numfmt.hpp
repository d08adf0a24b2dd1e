#pragma once

#include <string>

namespace graphaudit {

/// Shortest decimal string that round-trips the value (machine outputs).
std::string format_full(double value);

/// Fixed two decimals (human tables).
std::string format_round2(double value);

}  // namespace graphaudit
