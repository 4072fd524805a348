#include "format.hpp"

#include <sstream>

namespace normplane::cli {

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  std::ostringstream out;
  out.precision(15);
  out << value;
  return out.str();
}

std::string format_vec(const Vec2& v) { return "(" + format_double(v.x) + ", " + format_double(v.y) + ")"; }

}  // namespace normplane::cli
