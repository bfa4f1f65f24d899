#include "mgnn/util/format.hpp"

#include <cmath>
#include <cstdio>

namespace mgnn {

std::string format_double(double x) {
  if (std::isnan(x)) return "null";
  if (std::isinf(x)) return x > 0 ? "1e999" : "-1e999";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace mgnn
