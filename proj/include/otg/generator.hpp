#pragma once

#include <cstdint>
#include <stdexcept>

#include "otg/terrain.hpp"

namespace otg {

/// splitmix64. The exact update rule is part of the corpus contract so that
/// other implementations can reproduce generated terrains bit for bit:
///   state += 0x9E3779B97F4A7C15
///   z = state; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
///   z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31; return z
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

enum class Pattern { kNone, kAscendingStairs, kDescendingStairs, kComb, kPlateauValleys };

class SpecOutOfRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenSpec {
  std::uint64_t seed = 0;
  int steps = 1;     // count of horizontal runs; the terrain has 2*steps vertices
  int max_run = 1;   // horizontal run length drawn uniformly from [1, max_run]
  int max_rise = 1;  // vertical move magnitude drawn uniformly from [1, max_rise]
  Pattern pattern = Pattern::kNone;
};

/// Random orthogonal terrain: starts at (0,0) with a horizontal run, then
/// alternates vertical moves and horizontal runs, ending on a run. Draw
/// order per step k: for k = 0 one run length; for k >= 1 a magnitude, a
/// sign bit (odd word = up), then a run length; every value is one
/// SplitMix64 word reduced by modulo. Identical specs produce byte-identical
/// terrains. Throws SpecOutOfRange when the worst case leaves the coordinate
/// range.
Terrain generate_random(const GenSpec& spec);

/// Adversarial families; spec.steps is the step/tooth/valley count:
///   ascending_stairs   unit steps rising right
///   descending_stairs  unit steps falling right
///   comb               unit-width notches of depth max_rise in a plateau
///   plateau_valleys    width-2 valleys of depth max_rise between plateaus
Terrain generate_pattern(const GenSpec& spec);

Pattern pattern_from_string(const std::string& s);  // throws SpecOutOfRange
const char* to_string(Pattern p);

}  // namespace otg
