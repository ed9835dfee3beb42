#include <algorithm>
#include <vector>

#include "doctest.h"

#include "cleanring/cleanness.hpp"
#include "cleanring/spec_dsl.hpp"
#include "cleanring/structure.hpp"
#include "properties.hpp"

using namespace cleanring;

namespace {

Elem matrix(const FiniteRing& ring, std::vector<Elem> digits) {
  return ring.codec().encode(digits);
}

}  // namespace

TEST_CASE("fleet properties hold exhaustively") {
  const auto stats = oracle::check_fleet(oracle::fleet());
  for (const auto& f : stats.failures) FAIL_CHECK(f);
  CHECK(stats.rings == oracle::fleet().size());
  CHECK(stats.close_pairs > 0);
  MESSAGE(stats.rings << " rings, " << stats.elements << " elements, " << stats.close_pairs
                      << " idempotent pairs with nilpotent difference");
}

TEST_CASE("decompositions in Z4") {
  const auto z4 = build_ring("Z4");
  const auto clean = clean_decompositions(z4, 3);
  REQUIRE(clean.size() == 1);
  CHECK(clean[0].e == 0);
  CHECK(clean[0].t == 3);
  const auto nil = nil_clean_decompositions(z4, 3);
  REQUIRE(nil.size() == 1);
  CHECK(nil[0].e == 1);
  CHECK(nil[0].t == 2);
  const auto report = classify_ring(z4);
  CHECK(report.flags[Flag::uniquely_nil_clean]);
  CHECK(report.flags[Flag::j_clean]);
  CHECK(report.witnesses.empty());
}

TEST_CASE("M(2,F2) flags and witnesses") {
  const auto m = build_ring("M(2,F2)");
  const auto r = classify_ring(m);
  CHECK(r.flags[Flag::conjugate_nil_clean]);
  CHECK_FALSE(r.flags[Flag::conjugate_clean]);
  CHECK_FALSE(r.flags[Flag::uniquely_nil_clean]);
  CHECK_FALSE(r.abelian);
  CHECK(r.uniqueness_consistent);

  const auto* w = r.witness(Flag::conjugate_clean);
  REQUIRE(w);
  REQUIRE(w->pair);
  const auto& [first, second] = *w->pair;
  CHECK(first.a == w->element);
  CHECK(m.add(first.e, first.t) == w->element);
  CHECK(m.add(second.e, second.t) == w->element);
  CHECK_FALSE(are_conjugate(m, first.e, second.e).conjugate());

  // [[0,1],[1,0]] = I + [[1,1],[1,1]] is its only nil clean decomposition.
  const Elem swap = matrix(m, {0, 1, 1, 0});
  const auto nil = nil_clean_decompositions(m, swap);
  REQUIRE(nil.size() == 1);
  CHECK(nil[0].e == m.one());
}

TEST_CASE("the 3x3 obstruction over F2") {
  const auto m = build_ring("M(3,F2)");
  const Elem a = matrix(m, {1, 1, 1, 0, 1, 1, 0, 0, 1});
  const Elem n = matrix(m, {0, 1, 1, 0, 0, 1, 0, 0, 0});
  const Elem j = matrix(m, {1, 1, 1, 1, 1, 1, 1, 1, 1});
  const Elem l = matrix(m, {0, 0, 0, 1, 0, 0, 1, 1, 0});
  const auto ds = nil_clean_decompositions(m, a);
  const Decomposition p{a, m.one(), n, DecompositionKind::nil_clean};
  const Decomposition q{a, j, l, DecompositionKind::nil_clean};
  CHECK(std::find(ds.begin(), ds.end(), p) != ds.end());
  CHECK(std::find(ds.begin(), ds.end(), q) != ds.end());
  CHECK_FALSE(are_conjugate(m, m.one(), j).conjugate());

  const auto r = classify_ring(m);
  CHECK(r.flags[Flag::nil_clean]);
  CHECK_FALSE(r.flags[Flag::conjugate_nil_clean]);
  const auto* w = r.witness(Flag::conjugate_nil_clean);
  REQUIRE(w);
  REQUIRE(w->pair);
  CHECK_FALSE(are_conjugate(m, w->pair->first.e, w->pair->second.e).conjugate());
}

TEST_CASE("conjugate flags are false when the plain flag fails") {
  const auto z3 = build_ring("Z3");
  const auto r = classify_ring(z3);
  CHECK_FALSE(r.flags[Flag::nil_clean]);
  CHECK_FALSE(r.flags[Flag::conjugate_nil_clean]);
  const auto c = classify_element(z3, 2);
  CHECK(c.nil_clean_count == 0);
  CHECK_FALSE(c.flags[Flag::conjugate_nil_clean]);
  CHECK(c.clean_count == 2);
  CHECK_FALSE(c.flags[Flag::conjugate_clean]);
  CHECK(c.clean_witness);
}

TEST_CASE("classification respects the size cap and thread count") {
  const auto m = build_ring("M(3,F2)");
  ClassifyOptions small;
  small.size_cap = 256;
  CHECK_THROWS_AS(classify_ring(m, small), SizeCapError);
  ClassifyOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const auto a = classify_ring(m, one);
  const auto b = classify_ring(m, four);
  CHECK(a.flags == b.flags);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    CHECK(a.witnesses[i].element == b.witnesses[i].element);
  }
}

TEST_CASE("flag names round trip") {
  for (Flag f : kAllFlags) CHECK(parse_flag(to_string(f)) == f);
  CHECK_FALSE(parse_flag("abelian"));
  CHECK(to_string(DecompositionKind::j_clean) == "J-clean");
  CHECK(is_boolean(build_ring("B2")));
  CHECK_FALSE(is_boolean(build_ring("Z4")));
}
