#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "otg/solver.hpp"
#include "otg/terrain.hpp"

namespace otg {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfeasibleCover : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  int optimum_size = 0;
  /// One minimum cover, ascending; deterministic (lowest-index branching).
  std::vector<int> optimum_set;
  /// Search nodes explored.
  std::uint64_t explored = 0;
};

/// Exact minimum set cover over the visibility relation: branch on the
/// uncovered witness with the fewest seers, iterative deepening on
/// cardinality. Throws InfeasibleCover when a witness has no seer among the
/// candidates, BudgetExceeded when more than `budget` nodes are explored.
OracleResult min_guard_set_exact(const Terrain& t, std::span<const int> candidates,
                                 std::span<const int> witnesses,
                                 std::uint64_t budget = 10'000'000);

/// True iff no reflex vertex sees two distinct members of sol.witnesses.
/// True certifies that the solution size is a lower bound on any cover of
/// the witnesses by reflex vertices. Accepts right/left solutions only.
bool certify_witness_independence(const Terrain& t, const GuardSolution& sol);

enum class PropertyId : int {
  kOrderClaim = 0,       // a<b<c<d, a sees c, b sees d  =>  a sees d
  kLeftReflexPair,       // left reflex sees at most two right convex: the wall
                         // bottom below it and one level sightline rightward
  kLeftmostRcReflex,     // leftmost right convex: at most one left reflex seer, same abscissa
  kBetweenBelowSeer,     // vertices strictly between L(v) and right convex v stay below L(v)
  kReflexOnLeft,         // right reflex sees right convex only from the left
  kHigherHidden,         // a convex vertex higher than a reflex one is hidden from it
  kSeerExhausted,        // low leftmost seer: blind to right convex past the wall top
  kTangentSight,         // tangent at the leftmost visible in-between vertex implies sight
  kSingletonCover,       // every single-vertex witness set has a size-1 cover
  kCount,
};

const char* to_string(PropertyId p);

struct PropertyCounterexample {
  std::vector<int> indices;
  std::string terrain_doc;
};

struct PropertyCounters {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<PropertyCounterexample> samples;  // at most kMaxCounterexamples
};

inline constexpr int kMaxCounterexamples = 8;

struct PropertyReport {
  std::array<PropertyCounters, static_cast<size_t>(PropertyId::kCount)> counters;

  PropertyCounters& at(PropertyId p) { return counters[static_cast<size_t>(p)]; }
  const PropertyCounters& at(PropertyId p) const {
    return counters[static_cast<size_t>(p)];
  }
  bool clean() const;
  std::uint64_t total_violations() const;
  /// Associative merge of per-terrain reports.
  void merge(const PropertyReport& other);
};

enum class SuiteMode { kExhaustive, kSampled };

/// Evaluates every property above on one terrain. Exhaustive mode checks all
/// index tuples and requires n <= 30 (std::invalid_argument otherwise);
/// sampled mode draws a fixed, seed-deterministic subset of tuples.
PropertyReport property_suite(const Terrain& t, SuiteMode mode);

}  // namespace otg
