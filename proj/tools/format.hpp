#pragma once

#include <string>

#include "normplane/vec2.hpp"

namespace normplane::cli {

// Fifteen significant digits, shortest form ("1", "0.5", "1.4142135623731").
std::string format_double(double value);
// "(x, y)"
std::string format_vec(const Vec2& v);

}  // namespace normplane::cli
