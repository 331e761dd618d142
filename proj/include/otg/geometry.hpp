#pragma once

#include <cstdint>

namespace otg {

using Coord = std::int64_t;

struct Point {
  Coord x = 0;
  Coord y = 0;
  bool operator==(const Point&) const = default;
};

// Coordinates are capped so that cross products of coordinate differences
// stay far inside the exact int64 range (|diff| <= 2^21, products <= 2^42).
inline constexpr Coord kCoordLimit = Coord{1} << 20;

/// Sign of the cross product (b-a) x (c-a): +1 when c lies strictly left of
/// the directed line a->b, -1 when strictly right, 0 when collinear.
inline int orient(const Point& a, const Point& b, const Point& c) {
  const Coord det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

}  // namespace otg
