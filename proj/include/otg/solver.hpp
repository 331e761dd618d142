#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "otg/classify.hpp"
#include "otg/terrain.hpp"
#include "otg/visibility.hpp"

namespace otg {

enum class Side { kRight, kLeft, kFull };
enum class Engine { kFast, kReference };

const char* to_string(Side s);

struct GuardSolution {
  Side side = Side::kRight;
  /// Ascending guard vertex indices.
  std::vector<int> guards;
  /// assignment[i] = guard assigned to vertex i, -1 when unassigned. For a
  /// right (left) run every right (left) convex index is assigned.
  std::vector<int> assignment;
  /// Witnesses in the order their guards were created. |witnesses| equals
  /// |guards| for single-side runs.
  std::vector<int> witnesses;
  /// Vertex touch events during the run (chain reads, candidate evaluations,
  /// guard pops). The reference solver does not track this and reports 0.
  std::uint64_t visits = 0;
  /// Set when the candidate rule had to pick a convex guard (terrains with
  /// no usable reflex vertex, e.g. a single horizontal edge).
  bool convex_guard = false;
};

/// Doubly linked order over surviving vertex indices; removal is O(1) and
/// the live set only shrinks.
class ActiveChain {
 public:
  explicit ActiveChain(int n);
  int size() const { return n_; }
  bool alive(int i) const { return alive_[static_cast<size_t>(i)] != 0; }
  /// Live neighbour to the left (-1 past the start) / right (n past the end).
  int prev(int i) const { return prev_[static_cast<size_t>(i)]; }
  int next(int i) const { return next_[static_cast<size_t>(i)]; }
  void remove(int i);

 private:
  int n_;
  std::vector<int> prev_;
  std::vector<int> next_;
  std::vector<char> alive_;
};

/// Quadratic greedy sweep: left to right over the right convex vertices, a
/// vertex not seen by any guard so far recruits the higher of its leftmost
/// seer and its wall top (ties favour the seer). Every visibility decision
/// goes through the kernel `sees`, which makes this the differential
/// reference for the fast solver; vertices that are already guarded are
/// assigned the rightmost guard that has not failed an earlier probe.
GuardSolution solve_right_convex_reference(const Terrain& t);

/// Linear-time solver over an ActiveChain. Produces exactly the reference
/// solver's guards, assignment and witness list, and reports chain visits.
GuardSolution solve_right_convex_fast(const Terrain& t);

/// Runs the chosen right-convex engine on the mirrored terrain and maps the
/// result back; side == kLeft.
GuardSolution solve_left_convex(const Terrain& t, Engine engine = Engine::kFast);

/// Union of the right and left fast solutions (deduplicated, ascending);
/// right-side assignments win on shared indices. The union covers every
/// vertex of the terrain; that postcondition is asserted in debug builds.
GuardSolution solve_full(const Terrain& t);

/// Exactly the witnesses not seen by any guard, ascending. Empty means full
/// coverage. Throws std::out_of_range on bad indices.
std::vector<int> verify_coverage(const Terrain& t, std::span<const int> guards,
                                 std::span<const int> witnesses);

}  // namespace otg
