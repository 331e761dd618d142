#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "otg/io.hpp"
#include "otg/oracle.hpp"
#include "support.hpp"

using namespace otg;
using namespace otg::test;

namespace {

std::vector<int> reflex_indices(const Terrain& t) {
  const VertexClassification c = classify_vertices(t);
  std::vector<int> out = c.lr;
  out.insert(out.end(), c.rr.begin(), c.rr.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("exact cover on the fixtures") {
  const Terrain v = valley();
  const OracleResult all = min_guard_set_exact(v, all_indices(v), all_indices(v));
  CHECK(all.optimum_size == 1);
  CHECK(all.optimum_set == std::vector<int>{1});
  CHECK(all.explored > 0);

  const Terrain s = stairs();
  const VertexClassification sc = classify_vertices(s);
  const OracleResult right = min_guard_set_exact(s, reflex_indices(s), sc.rc);
  CHECK(right.optimum_size == 2);

  const std::vector<int> none;
  CHECK(min_guard_set_exact(v, all_indices(v), none).optimum_size == 0);
}

TEST_CASE("exact cover error paths") {
  const Terrain f = flat();
  const VertexClassification fc = classify_vertices(f);
  CHECK_THROWS_AS(min_guard_set_exact(f, reflex_indices(f), fc.rc), InfeasibleCover);
  const Terrain v = valley();
  CHECK_THROWS_AS(min_guard_set_exact(v, all_indices(v), all_indices(v), 1),
                  BudgetExceeded);
  const std::vector<int> bad{7};
  CHECK_THROWS_AS(min_guard_set_exact(f, bad, bad), std::out_of_range);
}

TEST_CASE("branch and bound matches subset enumeration") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const Terrain t = corpus_terrain(seed, 9);  // n <= 18 keeps enumeration cheap
    const std::vector<int> all = all_indices(t);
    const int expect = min_cover_by_enumeration(t, all, all);
    const OracleResult got = min_guard_set_exact(t, all, all);
    CHECK(got.optimum_size == expect);
    CHECK(verify_coverage(t, got.optimum_set, all).empty());
  }
}

TEST_CASE("exact cover is deterministic") {
  const Terrain t = corpus_terrain(17, 30);
  const std::vector<int> all = all_indices(t);
  const OracleResult a = min_guard_set_exact(t, all, all);
  const OracleResult b = min_guard_set_exact(t, all, all);
  CHECK(a.optimum_set == b.optimum_set);
  CHECK(a.explored == b.explored);
}

TEST_CASE("independence certificate fixtures") {
  const GuardSolution s = solve_right_convex_fast(stairs());
  CHECK(s.witnesses == std::vector<int>{1, 5});
  CHECK(certify_witness_independence(stairs(), s));
  const GuardSolution v = solve_right_convex_fast(valley());
  CHECK(certify_witness_independence(valley(), v));
  CHECK_THROWS_AS(certify_witness_independence(valley(), solve_full(valley())),
                  std::invalid_argument);
}

TEST_CASE("property suite is clean on fixtures and corpora") {
  CHECK(property_suite(valley(), SuiteMode::kExhaustive).clean());
  CHECK(property_suite(stairs(), SuiteMode::kExhaustive).clean());
  CHECK(property_suite(walkthrough21(), SuiteMode::kExhaustive).clean());
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const Terrain t = corpus_terrain(seed, 12);
    const PropertyReport rep = property_suite(t, SuiteMode::kExhaustive);
    CHECK(rep.clean());
    if (t.size() >= 4) CHECK(rep.at(PropertyId::kOrderClaim).checked > 0);
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    CHECK(property_suite(corpus_terrain(seed, 100), SuiteMode::kSampled).clean());
  }
}

TEST_CASE("property suite preconditions and merging") {
  CHECK_THROWS_AS(property_suite(corpus_terrain(100, 200), SuiteMode::kExhaustive),
                  std::invalid_argument);
  PropertyReport a = property_suite(valley(), SuiteMode::kExhaustive);
  const PropertyReport b = property_suite(stairs(), SuiteMode::kExhaustive);
  const std::uint64_t quads = a.at(PropertyId::kOrderClaim).checked +
                              b.at(PropertyId::kOrderClaim).checked;
  a.merge(b);
  CHECK(a.at(PropertyId::kOrderClaim).checked == quads);
  CHECK(a.clean());
}

TEST_CASE("property report serialization carries counterexamples") {
  PropertyReport rep;
  rep.at(PropertyId::kOrderClaim).checked = 3;
  rep.at(PropertyId::kOrderClaim).violations = 1;
  rep.at(PropertyId::kOrderClaim)
      .samples.push_back(PropertyCounterexample{{0, 1, 2, 3}, serialize_terrain(valley())});
  const std::string doc = serialize_property_report(rep);
  CHECK(doc.find("\"order_claim\"") != std::string::npos);
  CHECK(doc.find("\"violations\":1") != std::string::npos);
  CHECK(doc.find("\"vertices\"") != std::string::npos);
}
