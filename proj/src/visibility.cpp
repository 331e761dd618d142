#include "otg/visibility.hpp"

#include <string>

namespace otg {

namespace {

void check_index(const Terrain& t, int i) {
  if (i < 0 || i >= t.size())
    throw std::out_of_range("vertex index " + std::to_string(i) + " out of range");
}

}  // namespace

bool sees(const Terrain& t, int i, int j) {
  check_index(t, i);
  check_index(t, j);
  if (i == j) return true;
  const int a = i < j ? i : j;
  const int b = i < j ? j : i;
  const Point& pa = t.vertex(a);
  const Point& pb = t.vertex(b);
  if (pa.x == pb.x) return true;  // both on one vertical edge
  for (int k = a + 1; k < b; ++k) {
    if (orient(pa, pb, t.vertex(k)) > 0) return false;  // strictly above the chord
  }
  return true;
}

VisibilityMatrix VisibilityMatrix::compute(const Terrain& t, int cap) {
  const int n = t.size();
  if (n > cap)
    throw OracleCapExceeded("terrain of " + std::to_string(n) +
                            " vertices exceeds the oracle cap of " + std::to_string(cap));
  VisibilityMatrix m;
  m.n_ = n;
  m.stride_ = static_cast<size_t>((n + 63) / 64);
  m.bits_.assign(static_cast<size_t>(n) * m.stride_, 0);
  auto set = [&](int i, int j) {
    m.bits_[static_cast<size_t>(i) * m.stride_ + static_cast<size_t>(j >> 6)] |=
        std::uint64_t{1} << (j & 63);
  };
  for (int i = 0; i < n; ++i) {
    set(i, i);
    for (int j = i + 1; j < n; ++j) {
      if (sees(t, i, j)) {
        set(i, j);
        set(j, i);
      }
    }
  }
  return m;
}

std::string VisibilityMatrix::dump() const {
  std::string out;
  out.reserve(static_cast<size_t>(n_) * (static_cast<size_t>(n_) + 1));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out.push_back(at(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

LeftmostMap leftmost_visible_all(const Terrain& t, const VertexClassification& c) {
  const int n = t.size();
  LeftmostMap m;
  m.assoc.assign(static_cast<size_t>(n), -1);
  std::vector<char> is_rc(static_cast<size_t>(n), 0);
  for (int i : c.rc) is_rc[static_cast<size_t>(i)] = 1;

  // Prefix upper hull; collinear middles are popped, so after the pops the
  // stack top is the far end of the straight hull run ending at v_i, which
  // is exactly the leftmost seer.
  std::vector<int> hull;
  hull.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    while (hull.size() >= 2 &&
           orient(t.vertex(hull[hull.size() - 2]), t.vertex(hull.back()), t.vertex(i)) >= 0)
      hull.pop_back();
    if (is_rc[static_cast<size_t>(i)])
      m.assoc[static_cast<size_t>(i)] = hull.empty() ? i : hull.back();
    hull.push_back(i);
  }
  return m;
}

RightmostMap rightmost_visible_all(const Terrain& t, const VertexClassification&) {
  const int n = t.size();
  const Terrain mt = mirror_terrain(t);
  const VertexClassification mc = classify_vertices(mt);
  const LeftmostMap lm = leftmost_visible_all(mt, mc);
  RightmostMap r;
  r.assoc.assign(static_cast<size_t>(n), -1);
  for (int i : mc.rc) {
    r.assoc[static_cast<size_t>(mirror_index(n, i))] =
        mirror_index(n, lm.assoc[static_cast<size_t>(i)]);
  }
  return r;
}

}  // namespace otg
