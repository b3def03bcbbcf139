#include "fht/plot.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <vector>

#include "fht/region.hpp"

namespace fht {

namespace {

constexpr double kPi = std::numbers::pi;

struct Pt {
  double x, y;
};

// Cubic Bezier segments tracing the circular arc of the boundary of R_p with
// apex sign*i*cot(pi/p), split into sweeps of at most 45 degrees.
std::string arc_path(double p, double sign) {
  const double c = region_apex(p);
  std::ostringstream path;
  path << std::setprecision(10);

  if (c == 0.0 || std::abs(p - 2.0) < 1e-6) {
    path << "M -1 0 L 1 0";
    return path.str();
  }

  // Circle through (-1,0), (1,0) and (0, c); the lower arc is its mirror
  // image, obtained by flipping the y coordinates of the upper arc.
  const double y0 = (c * c - 1.0) / (2.0 * c);
  const double radius = (c * c + 1.0) / (2.0 * c);
  auto at = [&](double ang) {
    return Pt{radius * std::cos(ang), sign * (y0 + radius * std::sin(ang))};
  };

  // Sweep from (-1,0) through the apex at angle pi/2 to (1,0).
  const double beta = std::atan2(-y0, 1.0);
  const double a0 = kPi - beta;
  const double a1 = beta;

  const int segments = std::max(2, static_cast<int>(std::ceil(std::abs(a1 - a0) / (kPi / 4))));
  const Pt first = at(a0);
  path << "M " << first.x << " " << first.y;
  for (int s = 0; s < segments; ++s) {
    const double f0 = a0 + (a1 - a0) * s / segments;
    const double f1 = a0 + (a1 - a0) * (s + 1) / segments;
    const double k = 4.0 / 3.0 * std::tan((f1 - f0) / 4.0);
    const Pt p0 = at(f0), p3 = at(f1);
    // Tangent direction (-sin, cos) flips with the mirrored y.
    const Pt p1{p0.x - k * radius * std::sin(f0), p0.y + sign * k * radius * std::cos(f0)};
    const Pt p2{p3.x + k * radius * std::sin(f1), p3.y - sign * k * radius * std::cos(f1)};
    path << " C " << p1.x << " " << p1.y << ", " << p2.x << " " << p2.y << ", " << p3.x
         << " " << p3.y;
  }
  return path.str();
}

}  // namespace

void write_region_csv(std::ostream& os, double p, int n) {
  const auto samples = region_boundary_sample(p, n);
  os << "re,im,arc_id\n";
  os << std::setprecision(17);
  for (const auto& s : samples)
    os << s.point.real() << "," << s.point.imag() << "," << s.arc_id << "\n";
}

void write_region_svg(std::ostream& os, double p, int points_per_arc) {
  (void)points_per_arc;
  const double c = region_apex(p);
  const double extent_x = 1.6;
  const double extent_y = std::max(1.2, c * 1.25);
  const int width = 640;
  const int height = static_cast<int>(std::lround(width * extent_y / extent_x));
  const double sx = width / (2.0 * extent_x);

  auto X = [&](double x) { return (x + extent_x) * sx; };
  auto Y = [&](double y) { return (extent_y - y) * sx; };

  os << std::setprecision(10);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Axes.
  os << "  <line x1=\"" << X(-extent_x) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(extent_x)
     << "\" y2=\"" << Y(0) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  os << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(-extent_y) << "\" x2=\"" << X(0)
     << "\" y2=\"" << Y(extent_y) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";

  // Boundary arcs in user units, scaled into the pixel frame via transform.
  os << "  <g transform=\"translate(" << X(0) << "," << Y(0) << ") scale(" << sx << ","
     << -sx << ")\" stroke=\"#1f5fbf\" stroke-width=\"" << 2.0 / sx
     << "\" fill=\"none\">\n";
  os << "    <path d=\"" << arc_path(p, +1.0) << "\"/>\n";
  os << "    <path d=\"" << arc_path(p, -1.0) << "\"/>\n";
  os << "  </g>\n";

  // Markers at +-1 and +-i*cot(pi/p).
  auto marker = [&](double x, double y, const std::string& label) {
    os << "  <circle cx=\"" << X(x) << "\" cy=\"" << Y(y)
       << "\" r=\"3\" fill=\"#c23\"/>\n";
    os << "  <text x=\"" << X(x) + 6 << "\" y=\"" << Y(y) - 6
       << "\" font-size=\"12\" font-family=\"sans-serif\">" << label << "</text>\n";
  };
  marker(1.0, 0.0, "1");
  marker(-1.0, 0.0, "-1");
  std::ostringstream ctext;
  ctext << std::setprecision(4) << c;
  if (c > 0.0) {
    marker(0.0, c, ctext.str() + "i");
    marker(0.0, -c, "-" + ctext.str() + "i");
  }
  os << "</svg>\n";
}

}  // namespace fht
