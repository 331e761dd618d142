#include "otg/classify.hpp"

namespace otg {

const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::kLeftConvex: return "LC";
    case VertexClass::kRightConvex: return "RC";
    case VertexClass::kLeftReflex: return "LR";
    case VertexClass::kRightReflex: return "RR";
  }
  return "?";
}

VertexClassification classify_vertices(const Terrain& t) {
  const int n = t.size();
  VertexClassification out;
  out.classes.resize(static_cast<size_t>(n));

  auto classify = [&](int i) -> VertexClass {
    if (i == 0) {
      if (!t.edge_vertical(0)) return VertexClass::kLeftConvex;
      return t.vertex(0).y < t.vertex(1).y ? VertexClass::kRightConvex
                                           : VertexClass::kRightReflex;
    }
    if (i == n - 1) {
      if (!t.edge_vertical(n - 2)) return VertexClass::kRightConvex;
      return t.vertex(i).y < t.vertex(i - 1).y ? VertexClass::kLeftConvex
                                               : VertexClass::kLeftReflex;
    }
    // Exactly one incident edge is vertical; the vertex is convex at its
    // bottom and reflex at its top.
    const bool out_vertical = t.edge_vertical(i);
    const int partner = out_vertical ? i + 1 : i - 1;
    const bool convex = t.vertex(i).y < t.vertex(partner).y;
    if (out_vertical)
      return convex ? VertexClass::kRightConvex : VertexClass::kRightReflex;
    return convex ? VertexClass::kLeftConvex : VertexClass::kLeftReflex;
  };

  for (int i = 0; i < n; ++i) {
    const VertexClass c = classify(i);
    out.classes[static_cast<size_t>(i)] = c;
    switch (c) {
      case VertexClass::kLeftConvex: out.lc.push_back(i); break;
      case VertexClass::kRightConvex: out.rc.push_back(i); break;
      case VertexClass::kLeftReflex: out.lr.push_back(i); break;
      case VertexClass::kRightReflex: out.rr.push_back(i); break;
    }
  }
  return out;
}

}  // namespace otg
