#pragma once

#include <string>

namespace fundom::cli {

/// figure: partition, hexagon, nonstandard, triangle or complement.
/// Level-plane points are drawn at x1*a + x2*b + x3*c with a, b, c unit
/// vectors 120 degrees apart (mu1 up).
std::string render_svg(const std::string& figure, int n1, int n2);

}  // namespace fundom::cli
