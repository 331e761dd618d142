// Shared fixtures and corpus helpers for the test suites.
#pragma once

#include <cstdint>
#include <vector>

#include "otg/generator.hpp"
#include "otg/terrain.hpp"

namespace otg::test {

inline Terrain valley() {
  return Terrain::build({{0, 2}, {1, 2}, {1, 0}, {3, 0}, {3, 2}, {4, 2}});
}

inline Terrain stairs() {
  return Terrain::build({{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}});
}

inline Terrain flat() { return Terrain::build({{0, 0}, {5, 0}}); }

// 21-vertex terrain whose fast-solver run replays the staircase/valley walk
// with assignments g(v7)=v1, g(v9)=v1, g(v11)=v12, g(v17)=v15, g(v19)=v15,
// g(v21)=v12 (1-based).
inline Terrain walkthrough21() {
  return Terrain::build({{0, 10}, {0, 6},  {2, 6},   {2, 4},   {4, 4},   {4, 1},
                         {6, 1},  {6, 3},  {8, 3},   {8, 11},  {10, 11}, {10, 13},
                         {12, 13}, {12, 10}, {14, 10}, {14, 5},  {16, 5},  {16, 6},
                         {18, 6}, {18, 13}, {20, 13}});
}

// Deterministic corpus family: seed fixes every knob, so a (seed, max_steps)
// pair names one terrain of at most 2*max_steps vertices.
inline GenSpec corpus_spec(std::uint64_t seed, int max_steps) {
  GenSpec s;
  s.seed = seed;
  s.steps = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(max_steps));
  s.max_run = 1 + static_cast<int>(seed % 5);
  s.max_rise = 1 + static_cast<int>(seed % 7);
  return s;
}

inline Terrain corpus_terrain(std::uint64_t seed, int max_steps) {
  return generate_random(corpus_spec(seed, max_steps));
}

inline std::vector<int> all_indices(const Terrain& t) {
  std::vector<int> v(static_cast<size_t>(t.size()));
  for (int i = 0; i < t.size(); ++i) v[static_cast<size_t>(i)] = i;
  return v;
}

}  // namespace otg::test
