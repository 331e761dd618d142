#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "otg/classify.hpp"
#include "otg/terrain.hpp"

namespace otg {

/// Whether v_i and v_j see each other: the segment between them stays on or
/// above the chain. Grazing contact does not block. Vertices sharing an
/// abscissa bound one vertical edge and always see each other.
/// Cost O(|i-j|). Throws std::out_of_range on bad indices.
bool sees(const Terrain& t, int i, int j);

class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense n x n visibility table; symmetric, reflexive, true on consecutive
/// indices. Intended as an oracle substrate for small instances.
class VisibilityMatrix {
 public:
  static constexpr int kDefaultCap = 512;

  /// Throws OracleCapExceeded when t.size() > cap.
  static VisibilityMatrix compute(const Terrain& t, int cap = kDefaultCap);

  int size() const { return n_; }
  bool at(int i, int j) const {
    return (bits_[static_cast<size_t>(i) * stride_ + static_cast<size_t>(j >> 6)] >>
            (j & 63)) & 1u;
  }

  /// Rows of 0/1 characters, one line per vertex; debugging aid.
  std::string dump() const;

 private:
  int n_ = 0;
  size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// assoc[i] is defined for right convex i: the minimum-index vertex that
/// sees v_i (v_i itself when nothing to its left does). -1 elsewhere.
struct LeftmostMap {
  std::vector<int> assoc;
};

/// assoc[i] is defined for left convex i: the maximum-index vertex that sees
/// v_i. -1 elsewhere.
struct RightmostMap {
  std::vector<int> assoc;
};

/// One left-to-right sweep over the prefix upper hull; each vertex is pushed
/// and popped at most once, so the whole map costs O(n).
LeftmostMap leftmost_visible_all(const Terrain& t, const VertexClassification& c);

/// Mirror composition of leftmost_visible_all.
RightmostMap rightmost_visible_all(const Terrain& t, const VertexClassification& c);

}  // namespace otg
