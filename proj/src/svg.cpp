#include "otg/svg.hpp"

#include <algorithm>
#include <sstream>

namespace otg {

namespace {

const char* class_color(VertexClass c) {
  switch (c) {
    case VertexClass::kLeftConvex: return "#1f77b4";
    case VertexClass::kRightConvex: return "#d62728";
    case VertexClass::kLeftReflex: return "#2ca02c";
    case VertexClass::kRightReflex: return "#ff7f0e";
  }
  return "#000000";
}

}  // namespace

std::string render_svg(const Terrain& t, const GuardSolution* sol) {
  const VertexClassification cls = classify_vertices(t);
  Coord min_x = t.vertex(0).x, max_x = min_x;
  Coord min_y = t.vertex(0).y, max_y = min_y;
  for (const Point& p : t.points()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  // Integer pixel grid keeps the output byte-stable.
  const Coord span = std::max<Coord>({max_x - min_x, max_y - min_y, 1});
  const Coord scale = std::max<Coord>(1, 1024 / span);
  const Coord pad = std::max<Coord>(2, scale);
  auto px = [&](Coord x) { return (x - min_x) * scale + pad; };
  auto py = [&](Coord y) { return (max_y - y) * scale + pad; };  // y up on screen
  const Coord width = px(max_x) + pad;
  const Coord height = py(min_y) + pad;
  const Coord r = std::max<Coord>(1, scale / 4);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
      << "\">\n";
  out << "<polyline fill=\"none\" stroke=\"#333333\" stroke-width=\""
      << std::max<Coord>(1, scale / 8) << "\" points=\"";
  for (int i = 0; i < t.size(); ++i) {
    if (i) out << ' ';
    out << px(t.vertex(i).x) << ',' << py(t.vertex(i).y);
  }
  out << "\"/>\n";
  if (sol) {
    for (size_t w = 0; w < sol->assignment.size(); ++w) {
      const int g = sol->assignment[w];
      if (g < 0 || g == static_cast<int>(w)) continue;
      out << "<line class=\"assign\" stroke=\"#bbbbbb\" stroke-width=\""
          << std::max<Coord>(1, scale / 16) << "\" x1=\"" << px(t.vertex(static_cast<int>(w)).x)
          << "\" y1=\"" << py(t.vertex(static_cast<int>(w)).y) << "\" x2=\""
          << px(t.vertex(g).x) << "\" y2=\"" << py(t.vertex(g).y) << "\"/>\n";
    }
  }
  for (int i = 0; i < t.size(); ++i) {
    out << "<circle class=\"vtx\" cx=\"" << px(t.vertex(i).x) << "\" cy=\""
        << py(t.vertex(i).y) << "\" r=\"" << r << "\" fill=\""
        << class_color(cls.classes[static_cast<size_t>(i)]) << "\"/>\n";
  }
  if (sol) {
    for (int g : sol->guards) {
      out << "<circle class=\"guard\" cx=\"" << px(t.vertex(g).x) << "\" cy=\""
          << py(t.vertex(g).y) << "\" r=\"" << 2 * r
          << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\""
          << std::max<Coord>(1, scale / 8) << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace otg
