#pragma once

#include <ostream>
#include <string>

namespace fht {

// Boundary samples of R_p as CSV rows "re,im,arc_id".
void write_region_csv(std::ostream& os, double p, int n);

// Static SVG plot of the boundary of R_p: both arcs as cubic Bezier paths,
// axes, and markers at +-1 and +-i*cot(pi/p).
void write_region_svg(std::ostream& os, double p, int points_per_arc = 64);

}  // namespace fht
