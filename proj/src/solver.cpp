#include "otg/solver.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace otg {

const char* to_string(Side s) {
  switch (s) {
    case Side::kRight: return "right";
    case Side::kLeft: return "left";
    case Side::kFull: return "full";
  }
  return "?";
}

ActiveChain::ActiveChain(int n)
    : n_(n),
      prev_(static_cast<size_t>(n)),
      next_(static_cast<size_t>(n)),
      alive_(static_cast<size_t>(n), 1) {
  for (int i = 0; i < n; ++i) {
    prev_[static_cast<size_t>(i)] = i - 1;
    next_[static_cast<size_t>(i)] = i + 1;
  }
}

void ActiveChain::remove(int i) {
  assert(alive(i));
  const int p = prev_[static_cast<size_t>(i)];
  const int nx = next_[static_cast<size_t>(i)];
  if (p >= 0) next_[static_cast<size_t>(p)] = nx;
  if (nx < n_) prev_[static_cast<size_t>(nx)] = p;
  alive_[static_cast<size_t>(i)] = 0;
}

namespace {

// Higher of the leftmost seer and the wall top; ties and a missing wall top
// fall to the seer.
int pick_candidate(const Terrain& t, const LeftmostMap& lmap, int i,
                   std::uint64_t* visits) {
  const int seer = lmap.assoc[static_cast<size_t>(i)];
  if (visits) ++*visits;
  if (i + 1 < t.size()) {
    if (visits) ++*visits;
    if (t.vertex(i + 1).y > t.vertex(seer).y) return i + 1;
  }
  return seer;
}

struct FastState {
  const Terrain& t;
  const VertexClassification& cls;
  const LeftmostMap& lmap;
  GuardSolution& sol;
  ActiveChain chain;
  std::vector<int> live_guards;
  std::uint64_t visits = 0;
  std::vector<int> scratch;

  FastState(const Terrain& terrain, const VertexClassification& c,
            const LeftmostMap& l, GuardSolution& s)
      : t(terrain), cls(c), lmap(l), sol(s), chain(terrain.size()) {}

  // Drops live vertices with lo < index < hi.
  void remove_between(int lo, int hi) {
    for (int u = chain.prev(hi); u >= 0 && u > lo;) {
      const int p = chain.prev(u);
      chain.remove(u);
      ++visits;
      u = p;
    }
  }

  void create_guard(int i) {
    const int g = pick_candidate(t, lmap, i, &visits);
    sol.assignment[static_cast<size_t>(i)] = g;
    sol.guards.push_back(g);
    sol.witnesses.push_back(i);
    if (!cls.reflex(g)) sol.convex_guard = true;
    remove_between(lmap.assoc[static_cast<size_t>(i)], i);
    if (chain.alive(g)) {
      assert(live_guards.empty() ||
             t.vertex(live_guards.back()).x < t.vertex(g).x ||
             live_guards.back() < g);
      live_guards.push_back(g);
    }
  }

  void process_witness(int i) {
    ++visits;  // the witness itself
    const int li = lmap.assoc[static_cast<size_t>(i)];
    for (;;) {
      if (live_guards.empty()) {
        create_guard(i);
        return;
      }
      const int gj = live_guards.back();
      ++visits;
      if (t.vertex(gj).x < t.vertex(li).x) {
        // Tangent test against the sight ray from v_i through its leftmost
        // seer; on or above the ray is equivalent to seeing v_i here.
        if (orient(t.vertex(i), t.vertex(li), t.vertex(gj)) <= 0) {
          sol.assignment[static_cast<size_t>(i)] = gj;
          remove_between(gj, i);
          return;
        }
        create_guard(i);
        return;
      }
      // Guard inside [L(v_i), v_i]: walk the live chain down from v_i until
      // the guard or the first vertex poking above the chord.
      scratch.clear();
      int blocker = -1;
      for (int u = chain.prev(i); u != gj; u = chain.prev(u)) {
        ++visits;
        if (orient(t.vertex(gj), t.vertex(i), t.vertex(u)) > 0) {
          blocker = u;
          break;
        }
        scratch.push_back(u);
      }
      if (blocker < 0) {
        sol.assignment[static_cast<size_t>(i)] = gj;
        for (int u : scratch) chain.remove(u);
        return;
      }
      // The scanned prefix sits under the chord from the blocker to v_i (the
      // blocker saw over it), so it can never block a later query; dropping
      // it keeps failed probes amortized constant.
      for (int u : scratch) chain.remove(u);
      live_guards.pop_back();
      chain.remove(gj);
      ++visits;
    }
  }
};

}  // namespace

GuardSolution solve_right_convex_fast(const Terrain& t) {
  const VertexClassification cls = classify_vertices(t);
  const LeftmostMap lmap = leftmost_visible_all(t, cls);
  GuardSolution sol;
  sol.side = Side::kRight;
  sol.assignment.assign(static_cast<size_t>(t.size()), -1);
  FastState state(t, cls, lmap, sol);
  for (int i : cls.rc) state.process_witness(i);
  sol.visits = state.visits;
  std::sort(sol.guards.begin(), sol.guards.end());
  sol.guards.erase(std::unique(sol.guards.begin(), sol.guards.end()), sol.guards.end());
  assert(sol.guards.size() == sol.witnesses.size());
  return sol;
}

GuardSolution solve_right_convex_reference(const Terrain& t) {
  const VertexClassification cls = classify_vertices(t);
  const LeftmostMap lmap = leftmost_visible_all(t, cls);
  GuardSolution sol;
  sol.side = Side::kRight;
  sol.assignment.assign(static_cast<size_t>(t.size()), -1);
  // Guards that have not failed a probe yet, ascending by position. A guard
  // right of the current witness's leftmost seer that fails to see the
  // witness is retired for good; one left of the seer ends the walk, since
  // guards further down can do no better.
  std::vector<int> stack;
  for (int i : cls.rc) {
    const int li = lmap.assoc[static_cast<size_t>(i)];
    int assigned = -1;
    while (!stack.empty()) {
      const int g = stack.back();
      if (sees(t, g, i)) {
        assigned = g;
        break;
      }
      if (t.vertex(g).x < t.vertex(li).x) break;
      stack.pop_back();
    }
    if (assigned >= 0) {
      sol.assignment[static_cast<size_t>(i)] = assigned;
      continue;
    }
    const int g = pick_candidate(t, lmap, i, nullptr);
    stack.push_back(g);
    sol.guards.push_back(g);
    sol.assignment[static_cast<size_t>(i)] = g;
    sol.witnesses.push_back(i);
    if (!cls.reflex(g)) sol.convex_guard = true;
  }
  std::sort(sol.guards.begin(), sol.guards.end());
  sol.guards.erase(std::unique(sol.guards.begin(), sol.guards.end()), sol.guards.end());
  return sol;
}

GuardSolution solve_left_convex(const Terrain& t, Engine engine) {
  const int n = t.size();
  const Terrain m = mirror_terrain(t);
  const GuardSolution ms = engine == Engine::kFast ? solve_right_convex_fast(m)
                                                   : solve_right_convex_reference(m);
  GuardSolution out;
  out.side = Side::kLeft;
  out.visits = ms.visits;
  out.convex_guard = ms.convex_guard;
  out.assignment.assign(static_cast<size_t>(n), -1);
  out.guards.reserve(ms.guards.size());
  for (int g : ms.guards) out.guards.push_back(mirror_index(n, g));
  std::sort(out.guards.begin(), out.guards.end());
  out.witnesses.reserve(ms.witnesses.size());
  for (int w : ms.witnesses) out.witnesses.push_back(mirror_index(n, w));
  for (int i = 0; i < n; ++i) {
    const int g = ms.assignment[static_cast<size_t>(i)];
    if (g >= 0) out.assignment[static_cast<size_t>(mirror_index(n, i))] = mirror_index(n, g);
  }
  return out;
}

GuardSolution solve_full(const Terrain& t) {
  const GuardSolution right = solve_right_convex_fast(t);
  const GuardSolution left = solve_left_convex(t, Engine::kFast);
  GuardSolution out;
  out.side = Side::kFull;
  out.visits = right.visits + left.visits;
  out.convex_guard = right.convex_guard || left.convex_guard;
  out.guards = right.guards;
  out.guards.insert(out.guards.end(), left.guards.begin(), left.guards.end());
  std::sort(out.guards.begin(), out.guards.end());
  out.guards.erase(std::unique(out.guards.begin(), out.guards.end()), out.guards.end());
  out.assignment = left.assignment;
  for (int i = 0; i < t.size(); ++i) {
    if (right.assignment[static_cast<size_t>(i)] >= 0)
      out.assignment[static_cast<size_t>(i)] = right.assignment[static_cast<size_t>(i)];
  }
  out.witnesses = right.witnesses;
  out.witnesses.insert(out.witnesses.end(), left.witnesses.begin(), left.witnesses.end());
#ifndef NDEBUG
  {
    std::vector<int> all(static_cast<size_t>(t.size()));
    for (int i = 0; i < t.size(); ++i) all[static_cast<size_t>(i)] = i;
    assert(verify_coverage(t, out.guards, all).empty());
  }
#endif
  return out;
}

std::vector<int> verify_coverage(const Terrain& t, std::span<const int> guards,
                                 std::span<const int> witnesses) {
  std::vector<int> unguarded;
  for (int w : witnesses) {
    bool covered = false;
    for (int g : guards) {
      if (sees(t, g, w)) {
        covered = true;
        break;
      }
    }
    if (!covered) unguarded.push_back(w);
  }
  std::sort(unguarded.begin(), unguarded.end());
  return unguarded;
}

}  // namespace otg
