#include "otg/terrain.hpp"

#include <algorithm>
#include <cstdlib>

namespace otg {

namespace {

[[noreturn]] void fail(BuildError code, const std::string& msg) {
  throw TerrainError(code, msg);
}

// Merges collinear runs and drops zero-length edges.
std::vector<Point> normalized(std::vector<Point> pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& p : pts) {
    if (!out.empty() && out.back() == p) continue;  // zero-length edge
    while (out.size() >= 2) {
      const Point& a = out[out.size() - 2];
      const Point& b = out.back();
      const bool ab_vert = a.x == b.x;
      const bool bp_vert = b.x == p.x;
      if (ab_vert != bp_vert) break;
      // Same orientation; only merge when b lies between a and p, otherwise
      // the chain folds back on itself and validation must reject it.
      const bool between = ab_vert
          ? (a.y < b.y) == (b.y < p.y)
          : (a.x < b.x) == (b.x < p.x);
      if (!between) break;
      out.pop_back();
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

const char* to_string(BuildError e) {
  switch (e) {
    case BuildError::kTooFewVertices: return "TooFewVertices";
    case BuildError::kNotMonotone: return "NotMonotone";
    case BuildError::kDiagonalEdge: return "DiagonalEdge";
    case BuildError::kCollinearVertex: return "CollinearVertex";
    case BuildError::kCoordinateOutOfRange: return "CoordinateOutOfRange";
  }
  return "?";
}

Terrain Terrain::build(std::vector<Point> coords, BuildMode mode) {
  if (coords.empty()) fail(BuildError::kTooFewVertices, "empty vertex list");
  if (mode == BuildMode::kNormalize) coords = normalized(std::move(coords));
  const size_t n = coords.size();
  if (n < 2) fail(BuildError::kTooFewVertices, "terrain needs at least 2 vertices");
  for (const Point& p : coords) {
    if (std::llabs(p.x) > kCoordLimit || std::llabs(p.y) > kCoordLimit)
      fail(BuildError::kCoordinateOutOfRange, "coordinate outside +/-2^20");
  }
  for (size_t i = 0; i + 1 < n; ++i) {
    const Point& a = coords[i];
    const Point& b = coords[i + 1];
    if (a.x != b.x && a.y != b.y)
      fail(BuildError::kDiagonalEdge, "edge " + std::to_string(i) + " is diagonal");
    if (a == b)
      fail(BuildError::kCollinearVertex, "edge " + std::to_string(i) + " has zero length");
    if (b.x < a.x)
      fail(BuildError::kNotMonotone, "x decreases at edge " + std::to_string(i));
  }
  for (size_t i = 0; i + 2 < n; ++i) {
    const bool v1 = coords[i].x == coords[i + 1].x;
    const bool v2 = coords[i + 1].x == coords[i + 2].x;
    if (v1 == v2)
      fail(BuildError::kCollinearVertex,
           "vertex " + std::to_string(i + 1) + " does not alternate");
  }
  return Terrain(std::move(coords));
}

Terrain mirror_terrain(const Terrain& t) {
  const std::vector<Point>& pts = t.points();
  const Coord c = pts.front().x + pts.back().x;
  std::vector<Point> out(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    const Point& p = pts[pts.size() - 1 - i];
    out[i] = Point{c - p.x, p.y};
  }
  return Terrain::build(std::move(out), BuildMode::kStrict);
}

}  // namespace otg
