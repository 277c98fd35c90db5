#pragma once

#include <string>

namespace polyherm {

// Shortest text that reads back exactly (at most 17 significant digits, '.'
// separator, no locale).
std::string format_double(double x);

}  // namespace polyherm
