#pragma once

#include <vector>

#include "otg/terrain.hpp"

namespace otg {

enum class VertexClass { kLeftConvex, kRightConvex, kLeftReflex, kRightReflex };

const char* to_string(VertexClass c);

inline bool is_convex(VertexClass c) {
  return c == VertexClass::kLeftConvex || c == VertexClass::kRightConvex;
}
inline bool is_reflex(VertexClass c) { return !is_convex(c); }

/// Per-vertex classes plus the four ascending index lists; the lists
/// partition [0, n).
struct VertexClassification {
  std::vector<VertexClass> classes;
  std::vector<int> rc;  // right convex
  std::vector<int> lc;  // left convex
  std::vector<int> rr;  // right reflex
  std::vector<int> lr;  // left reflex

  bool reflex(int i) const { return is_reflex(classes[static_cast<size_t>(i)]); }
  bool convex(int i) const { return is_convex(classes[static_cast<size_t>(i)]); }
};

/// Interior vertices: convex at the bottom of their vertical edge, reflex at
/// the top; side is Right when the outgoing edge is vertical, Left when the
/// incoming one is. Chain ends on a horizontal edge are convex on the outer
/// side; ends on a vertical edge take the side of that edge, convex below
/// their neighbour and reflex above.
VertexClassification classify_vertices(const Terrain& t);

}  // namespace otg
