#pragma once

#include <string>

namespace mgnn {

/// "%.17g" rendering: round-trips exactly and is byte-stable, so
/// metric files can be compared with cmp.
std::string format_double(double x);

}  // namespace mgnn
