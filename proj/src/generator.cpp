#include "otg/generator.hpp"

#include <string>

namespace otg {

namespace {

void validate_common(const GenSpec& s) {
  if (s.steps < 1) throw SpecOutOfRange("steps must be >= 1");
  if (s.max_run < 1) throw SpecOutOfRange("max_run must be >= 1");
  if (s.max_rise < 1) throw SpecOutOfRange("max_rise must be >= 1");
}

void validate_extent(Coord worst_x, Coord worst_y) {
  if (worst_x > kCoordLimit)
    throw SpecOutOfRange("worst-case abscissa " + std::to_string(worst_x) +
                         " exceeds the coordinate range");
  if (worst_y > kCoordLimit)
    throw SpecOutOfRange("worst-case ordinate " + std::to_string(worst_y) +
                         " exceeds the coordinate range");
}

}  // namespace

const char* to_string(Pattern p) {
  switch (p) {
    case Pattern::kNone: return "none";
    case Pattern::kAscendingStairs: return "ascending_stairs";
    case Pattern::kDescendingStairs: return "descending_stairs";
    case Pattern::kComb: return "comb";
    case Pattern::kPlateauValleys: return "plateau_valleys";
  }
  return "?";
}

Pattern pattern_from_string(const std::string& s) {
  if (s == "ascending_stairs") return Pattern::kAscendingStairs;
  if (s == "descending_stairs") return Pattern::kDescendingStairs;
  if (s == "comb") return Pattern::kComb;
  if (s == "plateau_valleys") return Pattern::kPlateauValleys;
  throw SpecOutOfRange("unknown pattern '" + s + "'");
}

Terrain generate_random(const GenSpec& spec) {
  validate_common(spec);
  validate_extent(static_cast<Coord>(spec.steps) * spec.max_run,
                  static_cast<Coord>(spec.steps - 1) * spec.max_rise);
  SplitMix64 rng{spec.seed};
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(2 * spec.steps));
  Coord x = 0;
  Coord y = 0;
  pts.push_back({x, y});
  for (int step = 0; step < spec.steps; ++step) {
    if (step > 0) {
      const Coord mag = 1 + static_cast<Coord>(rng.next() % static_cast<std::uint64_t>(spec.max_rise));
      const bool up = (rng.next() & 1) != 0;
      y += up ? mag : -mag;
      pts.push_back({x, y});
    }
    const Coord run = 1 + static_cast<Coord>(rng.next() % static_cast<std::uint64_t>(spec.max_run));
    x += run;
    pts.push_back({x, y});
  }
  return Terrain::build(std::move(pts), BuildMode::kStrict);
}

Terrain generate_pattern(const GenSpec& spec) {
  validate_common(spec);
  const int k = spec.steps;
  const Coord h = spec.max_rise;
  std::vector<Point> pts;
  switch (spec.pattern) {
    case Pattern::kNone:
      throw SpecOutOfRange("generate_pattern requires a pattern");
    case Pattern::kAscendingStairs:
    case Pattern::kDescendingStairs: {
      validate_extent(k, k);
      const Coord dir = spec.pattern == Pattern::kAscendingStairs ? 1 : -1;
      Coord x = 0;
      Coord y = 0;
      pts.push_back({x, y});
      for (int s = 0; s < k; ++s) {
        if (s > 0) {
          y += dir;
          pts.push_back({x, y});
        }
        ++x;
        pts.push_back({x, y});
      }
      break;
    }
    case Pattern::kComb: {
      // Unit-wide notches of depth h cut into a plateau; n = 2 + 4k.
      validate_extent(2 * static_cast<Coord>(k) + 1, h);
      pts.push_back({0, h});
      for (int tooth = 0; tooth < k; ++tooth) {
        const Coord x0 = 2 * tooth + 1;
        pts.push_back({x0, h});
        pts.push_back({x0, 0});
        pts.push_back({x0 + 1, 0});
        pts.push_back({x0 + 1, h});
      }
      pts.push_back({2 * static_cast<Coord>(k) + 1, h});
      break;
    }
    case Pattern::kPlateauValleys: {
      // Width-2 valleys of depth h separated by plateaus; n = 2 + 4k. With
      // steps=1 and max_rise=2 this is the [(0,2),(1,2),(1,0),(3,0),(3,2),(4,2)]
      // fixture.
      validate_extent(4 * static_cast<Coord>(k), h);
      pts.push_back({0, h});
      for (int valley = 0; valley < k; ++valley) {
        const Coord x0 = 4 * valley + 1;
        pts.push_back({x0, h});
        pts.push_back({x0, 0});
        pts.push_back({x0 + 2, 0});
        pts.push_back({x0 + 2, h});
      }
      pts.push_back({4 * static_cast<Coord>(k), h});
      break;
    }
  }
  return Terrain::build(std::move(pts), BuildMode::kStrict);
}

}  // namespace otg
