#include "orbifano/registry.hpp"

#include <sstream>

namespace orbifano {

namespace {

long to_long(const Int& x) { return static_cast<long>(x); }

}  // namespace

// Deterministic rendering: lattice grid, filled polygon, marked vertices and
// a distinct circle at the origin.
std::string render_polygon_svg(const FanoPolygon& p) {
  long min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& v : p.vertices) {
    min_x = std::min(min_x, to_long(v[0]));
    max_x = std::max(max_x, to_long(v[0]));
    min_y = std::min(min_y, to_long(v[1]));
    max_y = std::max(max_y, to_long(v[1]));
  }
  min_x -= 1;
  min_y -= 1;
  max_x += 1;
  max_y += 1;
  const long unit = 24;
  auto px = [&](long x) { return (x - min_x) * unit + unit / 2; };
  // the svg y-axis points down
  auto py = [&](long y) { return (max_y - y) * unit + unit / 2; };
  const long width = (max_x - min_x) * unit + unit;
  const long height = (max_y - min_y) * unit + unit;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
      << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  for (long x = min_x; x <= max_x; ++x)
    for (long y = min_y; y <= max_y; ++y)
      svg << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y)
          << "\" r=\"1.5\" fill=\"#bbbbbb\"/>\n";
  svg << "<polygon points=\"";
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) svg << " ";
    svg << px(to_long(p.vertices[i][0])) << "," << py(to_long(p.vertices[i][1]));
  }
  svg << "\" fill=\"#d0e0f8\" fill-opacity=\"0.7\" stroke=\"#224488\" "
         "stroke-width=\"2\"/>\n";
  for (const auto& v : p.vertices)
    svg << "<circle cx=\"" << px(to_long(v[0])) << "\" cy=\"" << py(to_long(v[1]))
        << "\" r=\"4\" fill=\"#224488\"/>\n";
  // the origin wears an open ring
  svg << "<circle cx=\"" << px(0) << "\" cy=\"" << py(0)
      << "\" r=\"5\" fill=\"white\" stroke=\"#aa2222\" stroke-width=\"2\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace orbifano
