#include "otg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "otg/generator.hpp"
#include "otg/io.hpp"
#include "otg/visibility.hpp"

namespace otg {

namespace {

void check_indices(const Terrain& t, std::span<const int> v, const char* what) {
  for (int i : v) {
    if (i < 0 || i >= t.size())
      throw std::out_of_range(std::string(what) + " index " + std::to_string(i) +
                              " out of range");
  }
}

int popcount(const std::vector<std::uint64_t>& bits) {
  int c = 0;
  for (std::uint64_t w : bits) c += std::popcount(w);
  return c;
}

// Seers of v strictly to its left, enumerated right to left down to `stop`
// (inclusive). Classic sight walk: the pivot is the binding obstruction so
// far; a vertex is visible exactly when it reaches the ray from v through
// the pivot.
template <typename Fn>
void walk_visible_left(const Terrain& t, int v, int stop, Fn&& fn) {
  if (v == 0) return;
  int pivot = v - 1;
  fn(pivot);
  for (int u = v - 2; u >= stop; --u) {
    if (orient(t.vertex(v), t.vertex(pivot), t.vertex(u)) <= 0) {
      fn(u);
      pivot = u;
    }
  }
}

template <typename Fn>
void walk_visible_right(const Terrain& t, int v, Fn&& fn) {
  const int n = t.size();
  if (v == n - 1) return;
  int pivot = v + 1;
  fn(pivot);
  for (int u = v + 2; u < n; ++u) {
    if (orient(t.vertex(v), t.vertex(pivot), t.vertex(u)) >= 0) {
      fn(u);
      pivot = u;
    }
  }
}

struct CoverSearch {
  const std::vector<std::vector<std::uint64_t>>& mask;
  const std::vector<std::vector<int>>& seers;
  std::uint64_t budget;
  int max_cover;
  std::uint64_t explored = 0;
  std::vector<int> chosen;

  bool dfs(int remaining, std::vector<std::uint64_t>& uncovered) {
    if (++explored > budget)
      throw BudgetExceeded("set-cover search exceeded " + std::to_string(budget) +
                           " nodes");
    const int open = popcount(uncovered);
    if (open == 0) return true;
    if (remaining == 0) return false;
    if (static_cast<std::uint64_t>(remaining) * static_cast<std::uint64_t>(max_cover) <
        static_cast<std::uint64_t>(open))
      return false;
    // Branch on the uncovered witness with the fewest seers, lowest index on
    // ties.
    int pick = -1;
    size_t pick_deg = 0;
    for (size_t wi = 0; wi < seers.size(); ++wi) {
      if (!((uncovered[wi >> 6] >> (wi & 63)) & 1u)) continue;
      if (pick < 0 || seers[wi].size() < pick_deg) {
        pick = static_cast<int>(wi);
        pick_deg = seers[wi].size();
      }
    }
    for (int ci : seers[static_cast<size_t>(pick)]) {
      std::vector<std::uint64_t> next(uncovered.size());
      for (size_t w = 0; w < uncovered.size(); ++w)
        next[w] = uncovered[w] & ~mask[static_cast<size_t>(ci)][w];
      chosen.push_back(ci);
      if (dfs(remaining - 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

OracleResult min_guard_set_exact(const Terrain& t, std::span<const int> candidates,
                                 std::span<const int> witnesses, std::uint64_t budget) {
  check_indices(t, candidates, "candidate");
  check_indices(t, witnesses, "witness");
  const size_t wcount = witnesses.size();
  OracleResult res;
  if (wcount == 0) return res;

  const size_t words = (wcount + 63) / 64;
  std::vector<std::vector<std::uint64_t>> mask(
      candidates.size(), std::vector<std::uint64_t>(words, 0));
  std::vector<std::vector<int>> seers(wcount);
  for (size_t ci = 0; ci < candidates.size(); ++ci) {
    for (size_t wi = 0; wi < wcount; ++wi) {
      if (sees(t, candidates[ci], witnesses[wi])) {
        mask[ci][wi >> 6] |= std::uint64_t{1} << (wi & 63);
        seers[wi].push_back(static_cast<int>(ci));
      }
    }
  }
  int max_cover = 0;
  for (const auto& m : mask) max_cover = std::max(max_cover, popcount(m));
  for (size_t wi = 0; wi < wcount; ++wi) {
    if (seers[wi].empty())
      throw InfeasibleCover("witness " + std::to_string(witnesses[wi]) +
                            " is seen by no candidate");
  }

  CoverSearch search{mask, seers, budget, max_cover, 0, {}};
  std::vector<std::uint64_t> all(words, 0);
  for (size_t wi = 0; wi < wcount; ++wi) all[wi >> 6] |= std::uint64_t{1} << (wi & 63);
  for (int k = 1;; ++k) {
    std::vector<std::uint64_t> uncovered = all;
    if (search.dfs(k, uncovered)) {
      res.optimum_size = k;
      for (int ci : search.chosen)
        res.optimum_set.push_back(candidates[static_cast<size_t>(ci)]);
      std::sort(res.optimum_set.begin(), res.optimum_set.end());
      res.explored = search.explored;
      return res;
    }
  }
}

bool certify_witness_independence(const Terrain& t, const GuardSolution& sol) {
  if (sol.side == Side::kFull)
    throw std::invalid_argument("independence certificate applies to single-side runs");
  const int n = t.size();
  if (sol.side == Side::kLeft) {
    GuardSolution mirrored;
    mirrored.side = Side::kRight;
    mirrored.witnesses.reserve(sol.witnesses.size());
    for (int w : sol.witnesses) mirrored.witnesses.push_back(mirror_index(n, w));
    return certify_witness_independence(mirror_terrain(t), mirrored);
  }

  const VertexClassification cls = classify_vertices(t);
  const LeftmostMap lmap = leftmost_visible_all(t, cls);
  std::vector<char> is_witness(static_cast<size_t>(n), 0);
  for (int w : sol.witnesses) is_witness[static_cast<size_t>(w)] = 1;

  // A left reflex vertex reaches right convex vertices only at its two
  // neighbours, so a shared left reflex seer means both neighbours are
  // witnesses. Right reflex seers lie to the left of what they see, so
  // leftward sight walks from each witness enumerate every remaining
  // candidate pair.
  for (int r : cls.lr) {
    if (r > 0 && r + 1 < n && is_witness[static_cast<size_t>(r - 1)] &&
        is_witness[static_cast<size_t>(r + 1)])
      return false;
  }
  std::vector<char> seen_once(static_cast<size_t>(n), 0);
  for (int w : sol.witnesses) {
    const int stop = lmap.assoc[static_cast<size_t>(w)] >= 0
                         ? lmap.assoc[static_cast<size_t>(w)]
                         : 0;
    bool shared = false;
    walk_visible_left(t, w, stop, [&](int u) {
      if (!cls.reflex(u)) return;
      if (seen_once[static_cast<size_t>(u)]) shared = true;
      seen_once[static_cast<size_t>(u)] = 1;
    });
    if (shared) return false;
  }
  return true;
}

const char* to_string(PropertyId p) {
  switch (p) {
    case PropertyId::kOrderClaim: return "order_claim";
    case PropertyId::kLeftReflexPair: return "left_reflex_pair";
    case PropertyId::kLeftmostRcReflex: return "leftmost_rc_reflex";
    case PropertyId::kBetweenBelowSeer: return "between_below_seer";
    case PropertyId::kReflexOnLeft: return "reflex_on_left";
    case PropertyId::kHigherHidden: return "higher_hidden";
    case PropertyId::kSeerExhausted: return "seer_exhausted";
    case PropertyId::kTangentSight: return "tangent_sight";
    case PropertyId::kSingletonCover: return "singleton_cover";
    case PropertyId::kCount: break;
  }
  return "?";
}

bool PropertyReport::clean() const { return total_violations() == 0; }

std::uint64_t PropertyReport::total_violations() const {
  std::uint64_t v = 0;
  for (const auto& c : counters) v += c.violations;
  return v;
}

void PropertyReport::merge(const PropertyReport& other) {
  for (size_t i = 0; i < counters.size(); ++i) {
    counters[i].checked += other.counters[i].checked;
    counters[i].violations += other.counters[i].violations;
    for (const auto& s : other.counters[i].samples) {
      if (counters[i].samples.size() >= static_cast<size_t>(kMaxCounterexamples)) break;
      counters[i].samples.push_back(s);
    }
  }
}

PropertyReport property_suite(const Terrain& t, SuiteMode mode) {
  const int n = t.size();
  if (mode == SuiteMode::kExhaustive && n > 30)
    throw std::invalid_argument("exhaustive property suite requires n <= 30");
  const VertexClassification cls = classify_vertices(t);
  const LeftmostMap lmap = leftmost_visible_all(t, cls);
  const bool have_matrix = n <= VisibilityMatrix::kDefaultCap;
  VisibilityMatrix vm;
  if (have_matrix) vm = VisibilityMatrix::compute(t);
  auto see = [&](int i, int j) { return have_matrix ? vm.at(i, j) : sees(t, i, j); };

  PropertyReport rep;
  std::string doc;
  auto record = [&](PropertyId p, bool ok, std::vector<int> idx) {
    PropertyCounters& c = rep.at(p);
    ++c.checked;
    if (ok) return;
    ++c.violations;
    if (c.samples.size() < static_cast<size_t>(kMaxCounterexamples)) {
      if (doc.empty()) doc = serialize_terrain(t);
      c.samples.push_back(PropertyCounterexample{std::move(idx), doc});
    }
  };
  SplitMix64 rng{0x0705C0DEull ^ static_cast<std::uint64_t>(n)};
  auto uniform = [&](int bound) { return static_cast<int>(rng.next() % static_cast<std::uint64_t>(bound)); };

  // Order claim over quadruples.
  auto check_quad = [&](int a, int b, int c, int d) {
    const bool ok = !(see(a, c) && see(b, d)) || see(a, d);
    record(PropertyId::kOrderClaim, ok, {a, b, c, d});
  };
  if (mode == SuiteMode::kExhaustive) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          for (int d = c + 1; d < n; ++d) check_quad(a, b, c, d);
  } else if (n >= 4) {
    for (int s = 0; s < 2000; ++s) {
      int idx[4];
      for (int& v : idx) v = uniform(n);
      std::sort(std::begin(idx), std::end(idx));
      if (idx[0] == idx[1] || idx[1] == idx[2] || idx[2] == idx[3]) continue;
      check_quad(idx[0], idx[1], idx[2], idx[3]);
    }
  }

  // A left reflex vertex reaches at most two right convex vertices: the wall
  // bottom just below it plus at most one at its own height further right
  // (its step neighbour unless a level sightline grazes through).
  {
    std::vector<int> lrs = cls.lr;
    if (!have_matrix && lrs.size() > 200) {
      std::vector<int> sampled;
      for (int s = 0; s < 200; ++s)
        sampled.push_back(lrs[static_cast<size_t>(uniform(static_cast<int>(lrs.size())))]);
      lrs = std::move(sampled);
    }
    std::vector<char> is_rc(static_cast<size_t>(n), 0);
    for (int u : cls.rc) is_rc[static_cast<size_t>(u)] = 1;
    for (int v : lrs) {
      std::vector<int> seen_rc;
      if (have_matrix) {
        for (int u : cls.rc)
          if (see(v, u)) seen_rc.push_back(u);
      } else {
        auto tally = [&](int u) {
          if (is_rc[static_cast<size_t>(u)]) seen_rc.push_back(u);
        };
        walk_visible_left(t, v, 0, tally);
        walk_visible_right(t, v, tally);
      }
      bool ok = true;
      int others = 0;
      int offender = -1;
      for (int u : seen_rc) {
        if (u == v - 1) continue;
        ++others;
        if (t.vertex(u).x <= t.vertex(v).x || t.vertex(u).y != t.vertex(v).y) {
          ok = false;
          offender = u;
        }
      }
      if (others > 1) ok = false;
      record(PropertyId::kLeftReflexPair, ok, {v, offender});
    }
  }

  // The leftmost right convex vertex sees at most one left reflex vertex,
  // and only straight up its own wall.
  if (!cls.rc.empty()) {
    const int v0 = cls.rc.front();
    int lr_seen = 0;
    bool same_x = true;
    auto tally = [&](int u) {
      if (cls.classes[static_cast<size_t>(u)] != VertexClass::kLeftReflex) return;
      ++lr_seen;
      if (t.vertex(u).x != t.vertex(v0).x) same_x = false;
    };
    walk_visible_left(t, v0, 0, tally);
    walk_visible_right(t, v0, tally);
    record(PropertyId::kLeftmostRcReflex, lr_seen <= 1 && same_x, {v0});
  }

  // Everything strictly between a right convex vertex and its leftmost seer
  // stays at or below the seer.
  {
    const size_t limit = mode == SuiteMode::kSampled && !have_matrix ? 500 : cls.rc.size();
    for (size_t k = 0; k < cls.rc.size() && k < limit; ++k) {
      const int v = cls.rc[k];
      const int L = lmap.assoc[static_cast<size_t>(v)];
      bool ok = true;
      int bad = -1;
      for (int u = L + 1; u < v; ++u) {
        if (t.vertex(u).x <= t.vertex(L).x || t.vertex(u).x >= t.vertex(v).x) continue;
        if (t.vertex(u).y > t.vertex(L).y) {
          ok = false;
          bad = u;
          break;
        }
      }
      record(PropertyId::kBetweenBelowSeer, ok, {v, L, bad});
    }
  }

  // Right reflex vertices see right convex vertices only from the left.
  if (have_matrix) {
    for (int v : cls.rr)
      for (int u : cls.rc) {
        if (!see(v, u)) continue;
        record(PropertyId::kReflexOnLeft, t.vertex(v).x < t.vertex(u).x, {v, u});
      }
  } else if (!cls.rr.empty() && !cls.rc.empty()) {
    for (int s = 0; s < 2000; ++s) {
      const int v = cls.rr[static_cast<size_t>(uniform(static_cast<int>(cls.rr.size())))];
      const int u = cls.rc[static_cast<size_t>(uniform(static_cast<int>(cls.rc.size())))];
      if (t.vertex(v).x < t.vertex(u).x) continue;
      record(PropertyId::kReflexOnLeft, !see(v, u), {v, u});
    }
  }

  // A convex vertex strictly higher than a reflex vertex is hidden from it.
  {
    std::vector<int> convex = cls.rc;
    convex.insert(convex.end(), cls.lc.begin(), cls.lc.end());
    std::vector<int> reflex = cls.rr;
    reflex.insert(reflex.end(), cls.lr.begin(), cls.lr.end());
    if (have_matrix) {
      for (int v : convex)
        for (int u : reflex) {
          if (t.vertex(v).y <= t.vertex(u).y) continue;
          record(PropertyId::kHigherHidden, !see(u, v), {u, v});
        }
    } else if (!convex.empty() && !reflex.empty()) {
      for (int s = 0; s < 2000; ++s) {
        const int v = convex[static_cast<size_t>(uniform(static_cast<int>(convex.size())))];
        const int u = reflex[static_cast<size_t>(uniform(static_cast<int>(reflex.size())))];
        if (t.vertex(v).y <= t.vertex(u).y) continue;
        record(PropertyId::kHigherHidden, !see(u, v), {u, v});
      }
    }
  }

  // When the wall top outtops the leftmost seer, the seer is blind to every
  // right convex vertex past the wall.
  {
    for (size_t a = 0; a < cls.rc.size(); ++a) {
      const int i = cls.rc[a];
      if (i + 1 >= n) continue;
      const int L = lmap.assoc[static_cast<size_t>(i)];
      if (t.vertex(L).y >= t.vertex(i + 1).y) continue;
      if (have_matrix) {
        for (size_t b = a + 1; b < cls.rc.size(); ++b) {
          const int j = cls.rc[b];
          if (j <= i + 1) continue;
          record(PropertyId::kSeerExhausted, !see(L, j), {i, L, j});
        }
      } else {
        for (int s = 0; s < 64 && a + 1 < cls.rc.size(); ++s) {
          const size_t b = a + 1 + static_cast<size_t>(uniform(
                               static_cast<int>(cls.rc.size() - a - 1)));
          const int j = cls.rc[b];
          if (j <= i + 1) continue;
          record(PropertyId::kSeerExhausted, !see(L, j), {i, L, j});
        }
        break;  // sampled mode: one seed vertex is enough at this scale
      }
    }
  }

  // Tangent visibility: with v_k the leftmost seer of v_i strictly between
  // v_j and v_i, a flat-or-convex bend at v_k implies v_i sees v_j.
  auto check_tangent = [&](int i, int j) {
    int k = -1;
    for (int c = j + 1; c < i; ++c) {
      if (see(i, c)) {
        k = c;
        break;
      }
    }
    if (k < 0) return;
    if (orient(t.vertex(i), t.vertex(k), t.vertex(j)) > 0) return;
    record(PropertyId::kTangentSight, see(i, j), {i, k, j});
  };
  if (mode == SuiteMode::kExhaustive) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j + 1 < i; ++j) check_tangent(i, j);
  } else if (n >= 3) {
    for (int s = 0; s < 300; ++s) {
      const int i = 2 + uniform(n - 2);
      const int lo = std::max(0, i - 40);
      const int j = lo + uniform(std::max(1, i - 1 - lo));
      if (j + 1 < i) check_tangent(i, j);
    }
  }

  // Single-vertex witness sets always admit a size-1 cover.
  {
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    std::vector<int> picks;
    if (mode == SuiteMode::kExhaustive || n <= 64) {
      picks = all;
    } else {
      for (int s = 0; s < 5; ++s) picks.push_back(uniform(n));
    }
    for (int w : picks) {
      const int one[1] = {w};
      const OracleResult r = min_guard_set_exact(t, all, one);
      record(PropertyId::kSingletonCover, r.optimum_size == 1, {w});
    }
  }

  return rep;
}

}  // namespace otg
