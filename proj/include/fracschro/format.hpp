#pragma once

#include <string>

namespace fracschro {

/// Shortest decimal that reads back to x, with ".0" appended to integral values
/// ("1.0", "0.25", "1e-12").
std::string format_real(double x);

}  // namespace fracschro
