#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "otg/geometry.hpp"

namespace otg {

enum class BuildMode { kStrict, kNormalize };

enum class BuildError {
  kTooFewVertices,
  kNotMonotone,
  kDiagonalEdge,
  kCollinearVertex,
  kCoordinateOutOfRange,
};

const char* to_string(BuildError e);

class TerrainError : public std::runtime_error {
 public:
  TerrainError(BuildError code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  BuildError code() const { return code_; }

 private:
  BuildError code_;
};

/// An orthogonal x-monotone chain. Immutable once built; every edge is
/// horizontal or vertical, orientations strictly alternate, and x never
/// decreases. Safe to share across threads.
class Terrain {
 public:
  /// Validates (and in normalize mode first merges collinear runs and drops
  /// zero-length edges). Throws TerrainError on violation.
  static Terrain build(std::vector<Point> coords, BuildMode mode = BuildMode::kStrict);

  int size() const { return static_cast<int>(pts_.size()); }
  const Point& vertex(int i) const { return pts_[static_cast<size_t>(i)]; }
  const std::vector<Point>& points() const { return pts_; }

  /// True when edge e = (v_e, v_{e+1}) is vertical, e in [0, size()-1).
  bool edge_vertical(int e) const {
    return pts_[static_cast<size_t>(e)].x == pts_[static_cast<size_t>(e) + 1].x;
  }

  bool operator==(const Terrain&) const = default;

 private:
  explicit Terrain(std::vector<Point> pts) : pts_(std::move(pts)) {}
  std::vector<Point> pts_;
};

/// Reflection x -> C - x with vertex order reversed; C = x_min + x_max keeps
/// coordinates inside the original range. Vertex i maps to size()-1-i.
Terrain mirror_terrain(const Terrain& t);

inline int mirror_index(int n, int i) { return n - 1 - i; }

}  // namespace otg
