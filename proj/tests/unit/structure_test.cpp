#include <algorithm>
#include <set>
#include <thread>
#include <vector>

#include "doctest.h"

#include "cleanring/constructors.hpp"
#include "cleanring/gf2_matrix.hpp"
#include "cleanring/spec_dsl.hpp"
#include "cleanring/structure.hpp"
#include "oracles.hpp"

using namespace cleanring;

TEST_CASE("structural sets agree with brute force on the fleet") {
  for (const auto& spec : oracle::fleet()) {
    const auto ring = build_ring(spec);
    if (ring.size() > 256) continue;
    CAPTURE(spec);
    const auto unit = oracle::units(ring);
    const auto nil = oracle::nilpotents(ring);
    const auto rad = oracle::radical(ring, unit);

    CHECK(idempotents(ring) == oracle::idempotents(ring));
    const auto& u = units(ring);
    for (Elem a = 0; a < ring.size(); ++a) {
      REQUIRE(u.contains(a) == unit[a]);
      if (unit[a]) REQUIRE(ring.mul(a, u.inverse(a)) == ring.one());
      REQUIRE(nilpotent_flags(ring)[a] == nil[a]);
      REQUIRE(nilpotency_index(ring, a).has_value() == nil[a]);
    }
    const auto j = jacobson_radical(ring);
    for (Elem a = 0; a < ring.size(); ++a) REQUIRE(j.contains(a) == rad[a]);
    // A finite ring's radical is nilpotent.
    CHECK(j.is_nil());

    const auto& cc = conjugacy_classes(ring);
    const auto& idem = idempotents(ring);
    for (std::size_t p = 0; p < idem.size(); ++p) {
      const Elem e = idem[p];
      const Elem rep = cc.classes[cc.class_of[e]].front();
      const Elem t = cc.transversal[e];
      REQUIRE(ring.mul(ring.mul(t, rep), u.inverse(t)) == e);
      for (std::size_t q = p + 1; q < idem.size(); ++q) {
        const Elem f = idem[q];
        const bool same = cc.class_of[e] == cc.class_of[f];
        REQUIRE(same == oracle::conjugate(ring, e, f, unit));
        const auto cert = are_conjugate(ring, e, f);
        REQUIRE(cert.conjugate() == same);
        if (cert.witness) {
          REQUIRE(ring.mul(ring.mul(*cert.witness, f), u.inverse(*cert.witness)) == e);
        }
      }
    }
  }
}

TEST_CASE("small structural facts") {
  const auto ut = build_ring("UT(2,F2)");
  const auto j = jacobson_radical(ut);
  CHECK(j.size() == 2);
  CHECK(j.nilpotency_class() == 2);
  const auto m2 = build_ring("M(2,F2)");
  CHECK(idempotents(m2).size() == 8);
  CHECK(conjugacy_classes(m2).classes.size() == 3);
  CHECK(units(m2).size() == 6);
  CHECK(units(build_ring("B3")).size() == 1);
  CHECK(nilpotency_index(build_ring("Z8"), 2) == 3);
  CHECK(nilpotency_index(build_ring("Z8"), 0) == 1);
  CHECK_FALSE(nilpotency_index(build_ring("Z6"), 2));
  const auto m3 = build_ring("M(3,F2)");
  CHECK(idempotents(m3).size() == oracle::idempotents(m3).size());
  CHECK(idempotents(m3).size() == 58);
  CHECK(units(m3).size() == 168);
}

TEST_CASE("abelian test") {
  CHECK(is_abelian(build_ring("Z4 x F2")).abelian);
  CHECK(is_abelian(build_ring("T(F2 x F2,id,2)")).abelian);
  const auto t = build_ring("T(F2 x F2,swap(1,2),2)");
  const auto a = is_abelian(t);
  REQUIRE_FALSE(a.abelian);
  const auto [e, r] = *a.witness;
  CHECK(t.mul(e, e) == e);
  CHECK(t.mul(e, r) != t.mul(r, e));
}

TEST_CASE("ideals, closures and quotients") {
  const auto z8 = build_ring("Z8");
  const std::vector<Elem> two{2};
  const auto i = ideal_closure(z8, two);
  CHECK(i.elements() == std::vector<Elem>{0, 2, 4, 6});
  CHECK(i.is_nil());
  CHECK(i.nilpotency_class() == 3);
  const auto q = make_quotient(i);
  CHECK(q.ring.size() == 2);
  CHECK(q.projection[5] == 1);
  CHECK(q.representatives == std::vector<Elem>{0, 1});

  const std::vector<Elem> odd{0, 1};
  CHECK_THROWS_AS(make_ideal(z8, odd), RingError);

  const auto m2 = build_ring("M(2,Z4)");
  const std::vector<Elem> gen{m2.times(2, m2.one())};
  const auto two_r = ideal_closure(m2, gen);
  CHECK(two_r.size() == 16);
  CHECK(jacobson_radical(m2).size() == 16);

  const auto alg = algebra_from_ideal(jacobson_radical(build_ring("UT(3,F2)")));
  CHECK(alg.size() == 8);
}

TEST_CASE("split check clauses") {
  const auto z4 = build_ring("Z4");
  const std::vector<Elem> zero_ideal{0};
  const auto trivial = make_ideal(z4, zero_ideal);
  const std::vector<Elem> s{0, 1};
  const auto bad = check_split(z4, s, trivial);
  CHECK_FALSE(bad.passed);
  CHECK(bad.clause.find("addition") != std::string::npos);

  const std::vector<Elem> all{0, 1, 2, 3};
  CHECK(check_split(z4, all, trivial).passed);

  const auto t = build_ring("T(F2,id,2)");
  const std::vector<Elem> constants{0, 1};
  const std::vector<Elem> xs{0, 2};
  CHECK(check_split(t, constants, make_ideal(t, xs)).passed);
  CHECK(two_sided_annihilator(t, constants, xs) == std::vector<Elem>{0});
  CHECK_FALSE(subring_violation(t, constants));
  CHECK(subring_violation(t, xs));
}

TEST_CASE("idempotent lifting modulo a nil ideal") {
  const auto z8 = build_ring("Z8");
  const std::vector<Elem> gen{2};
  const auto i = ideal_closure(z8, gen);
  for (Elem a = 0; a < 8; ++a) {
    const Elem d = z8.sub(z8.mul(a, a), a);
    if (!i.contains(d)) continue;
    const Elem e = lift_idempotent(z8, i, a);
    CHECK(z8.mul(e, e) == e);
    CHECK(i.contains(z8.sub(e, a)));
  }
}

TEST_CASE("frozen caches are shared across threads") {
  const auto ring = build_ring("M(3,F2)");
  std::vector<const std::vector<Elem>*> seen(4);
  std::vector<std::thread> pool;
  for (std::size_t k = 0; k < seen.size(); ++k) {
    pool.emplace_back([&, k] { seen[k] = &idempotents(ring); });
  }
  for (auto& th : pool) th.join();
  for (auto* p : seen) CHECK(p == seen.front());
  const auto copy = ring;
  CHECK(&idempotents(copy) == seen.front());
}

TEST_CASE("bit-packed GF(2) matrices") {
  using gf2::BitMatrix;
  const auto m3 = build_ring("M(3,F2)");
  for (std::uint64_t a = 0; a < 512; a += 5) {
    for (std::uint64_t b = 0; b < 512; b += 3) {
      const auto x = BitMatrix::from_index(a, 3);
      const auto y = BitMatrix::from_index(b, 3);
      REQUIRE(x.to_index() == a);
      REQUIRE((x * y).to_index() == m3.mul(static_cast<Elem>(a), static_cast<Elem>(b)));
      REQUIRE(gf2::mul_packed(a, b, 3) == m3.mul(static_cast<Elem>(a), static_cast<Elem>(b)));
    }
  }
  const BitMatrix n{{0, 1, 1}, {0, 0, 1}, {0, 0, 0}};
  CHECK(n.nilpotent());
  CHECK(n.rank() == 2);
  CHECK(BitMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}.idempotent());
  CHECK(BitMatrix::identity(4).invertible());
  CHECK(gf2::general_linear_group(3).size() == 168);
  const auto d = gf2::block_diagonal(n, BitMatrix::identity(1));
  CHECK(d.dim() == 4);
  CHECK(d.rank() == 3);
  const auto gl2 = gf2::general_linear_group(2);
  const BitMatrix e11{{1, 0}, {0, 0}};
  const BitMatrix e22{{0, 0}, {0, 1}};
  const auto u = gf2::find_conjugator(e11, e22, gl2);
  REQUIRE(u);
  CHECK(*u * e22 == e11 * *u);
  CHECK_FALSE(gf2::find_conjugator(e11, BitMatrix::identity(2), gl2));
}
