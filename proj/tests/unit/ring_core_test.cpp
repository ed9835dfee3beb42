#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"

#include "cleanring/axioms.hpp"
#include "cleanring/constructors.hpp"
#include "cleanring/mixed_radix.hpp"
#include "cleanring/structure.hpp"

using namespace cleanring;

namespace {

// Naive n x n product of digit vectors over Z/m.
std::vector<Elem> matmul(const std::vector<Elem>& a, const std::vector<Elem>& b, std::size_t n,
                         Elem m) {
  std::vector<Elem> c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Elem s = 0;
      for (std::size_t k = 0; k < n; ++k) s = (s + a[i * n + k] * b[k * n + j]) % m;
      c[i * n + j] = s;
    }
  }
  return c;
}

// Upper-triangle digits to a full row-major matrix.
std::vector<Elem> expand_ut(const std::vector<Elem>& d, std::size_t n) {
  std::vector<Elem> full(n * n, 0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) full[i * n + j] = d[k++];
  }
  return full;
}

bool is_isomorphism(const FiniteRing& r, const FiniteRing& s, const std::vector<Elem>& phi) {
  for (Elem a = 0; a < r.size(); ++a) {
    for (Elem b = 0; b < r.size(); ++b) {
      if (phi[r.add(a, b)] != s.add(phi[a], phi[b])) return false;
      if (phi[r.mul(a, b)] != s.mul(phi[a], phi[b])) return false;
    }
  }
  return phi[r.one()] == s.one();
}

}  // namespace

TEST_CASE("mixed radix round trip") {
  const MixedRadix codec({3, 4, 2});
  CHECK(codec.size() == 24);
  for (Elem i = 0; i < 24; ++i) {
    const auto d = codec.decode(i);
    CHECK(codec.encode(d) == i);
    CHECK(d[0] == i % 3);
    CHECK(codec.digit(i, 1) == (i / 3) % 4);
  }
  CHECK(saturating_pow(2, 81) == UINT64_MAX);
  CHECK(saturating_mul(1ULL << 40, 1ULL << 30) == UINT64_MAX);
}

TEST_CASE("Z/n and Boolean rings") {
  const auto z6 = make_zmod(6);
  for (Elem a = 0; a < 6; ++a) {
    for (Elem b = 0; b < 6; ++b) {
      CHECK(z6.add(a, b) == (a + b) % 6);
      CHECK(z6.mul(a, b) == (a * b) % 6);
    }
  }
  CHECK(z6.times(2, z6.one()) == 2);
  const auto b3 = make_boolean(3);
  CHECK(b3.size() == 8);
  CHECK(b3.one() == 7);
  CHECK(idempotents(b3).size() == 8);
  CHECK_THROWS_AS(make_zmod(1), RingError);
}

TEST_CASE("M(3,F2) agrees with naive matrix multiplication") {
  const auto m3 = make_matrix_ring(make_zmod(2), 3);
  REQUIRE(m3.size() == 512);
  const auto& codec = m3.codec();
  for (Elem a = 0; a < 512; a += 7) {
    for (Elem b = 0; b < 512; ++b) {
      const auto c = matmul(codec.decode(a), codec.decode(b), 3, 2);
      REQUIRE(m3.mul(a, b) == codec.encode(c));
      REQUIRE(m3.add(a, b) == (a ^ b));
    }
  }
  // Packed index: entry (r, c) is bit 3r + c.
  CHECK(m3.one() == (1U | (1U << 4) | (1U << 8)));
}

TEST_CASE("M(2,Z4) and UT(3,Z4) agree with naive products") {
  const auto z4 = make_zmod(4);
  const auto m2 = make_matrix_ring(z4, 2);
  for (Elem a = 0; a < m2.size(); ++a) {
    for (Elem b = 0; b < m2.size(); b += 3) {
      const auto c = matmul(m2.codec().decode(a), m2.codec().decode(b), 2, 4);
      REQUIRE(m2.mul(a, b) == m2.codec().encode(c));
    }
  }
  const auto ut = make_ut_ring(z4, 3);
  REQUIRE(ut.size() == 4096);
  for (Elem a = 0; a < ut.size(); a += 37) {
    for (Elem b = 0; b < ut.size(); b += 11) {
      const auto c = matmul(expand_ut(ut.codec().decode(a), 3), expand_ut(ut.codec().decode(b), 3),
                            3, 4);
      const auto d = ut.codec().decode(ut.mul(a, b));
      REQUIRE(expand_ut(d, 3) == c);
    }
  }
}

TEST_CASE("truncated skew polynomials match a direct convolution") {
  SUBCASE("identity twist over Z4") {
    const auto z4 = make_zmod(4);
    const auto t = make_trunc_skew_poly(z4, identity_endomorphism(z4), 3);
    REQUIRE(t.size() == 64);
    for (Elem a = 0; a < 64; ++a) {
      for (Elem b = 0; b < 64; ++b) {
        const auto x = t.codec().decode(a);
        const auto y = t.codec().decode(b);
        std::vector<Elem> z(3, 0);
        for (std::size_t i = 0; i < 3; ++i) {
          for (std::size_t j = 0; i + j < 3; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % 4;
        }
        REQUIRE(t.mul(a, b) == t.codec().encode(z));
      }
    }
  }
  SUBCASE("swap twist over F2 x F2") {
    const auto f2 = make_zmod(2);
    const std::vector<FiniteRing> factors{f2, f2};
    const auto p = make_product(factors);
    const auto sigma = swap_endomorphism(p, 0, 1);
    const auto t = make_trunc_skew_poly(p, sigma, 3);
    REQUIRE(t.size() == 64);
    auto twist = [&](Elem c, std::size_t times) {
      for (std::size_t k = 0; k < times; ++k) c = sigma(c);
      return c;
    };
    for (Elem a = 0; a < 64; ++a) {
      for (Elem b = 0; b < 64; ++b) {
        const auto x = t.codec().decode(a);
        const auto y = t.codec().decode(b);
        std::vector<Elem> z(3, p.zero());
        for (std::size_t i = 0; i < 3; ++i) {
          for (std::size_t j = 0; i + j < 3; ++j) {
            z[i + j] = p.add(z[i + j], p.mul(x[i], twist(y[j], i)));
          }
        }
        REQUIRE(t.mul(a, b) == t.codec().encode(z));
      }
    }
  }
}

TEST_CASE("F2 x Z3 is isomorphic to Z6") {
  const std::vector<FiniteRing> factors{make_zmod(2), make_zmod(3)};
  const auto p = make_product(factors);
  const auto z6 = make_zmod(6);
  std::vector<Elem> phi(6);
  std::iota(phi.begin(), phi.end(), 0);
  bool found = false;
  do {
    found = is_isomorphism(p, z6, phi);
  } while (!found && std::next_permutation(phi.begin(), phi.end()));
  CHECK(found);
}

TEST_CASE("M(2,Z4) modulo even matrices is M(2,F2)") {
  const auto m = make_matrix_ring(make_zmod(4), 2);
  std::vector<Elem> even;
  for (Elem a = 0; a < m.size(); ++a) {
    const auto d = m.codec().decode(a);
    if (std::all_of(d.begin(), d.end(), [](Elem x) { return x % 2 == 0; })) even.push_back(a);
  }
  const auto q = make_quotient(m, even);
  REQUIRE(q.ring.size() == 16);
  const auto f = make_matrix_ring(make_zmod(2), 2);
  std::vector<Elem> phi(16);
  for (Elem c = 0; c < 16; ++c) {
    auto d = m.codec().decode(q.representatives[c]);
    for (auto& x : d) x %= 2;
    phi[c] = f.codec().encode(d);
  }
  auto sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  CHECK(is_isomorphism(q.ring, f, phi));
}

TEST_CASE("constructor errors") {
  const auto f2 = make_zmod(2);
  CHECK_THROWS_AS(make_matrix_ring(f2, 9), SizeCapError);
  try {
    make_matrix_ring(f2, 9);
  } catch (const SizeCapError& e) {
    CHECK(e.required() == UINT64_MAX);
    CHECK(e.required_log2() == doctest::Approx(81.0));
  }
  CHECK_THROWS_AS(make_ut_ring(f2, 1), RingError);

  const auto z4 = make_zmod(4);
  std::vector<Elem> bad{0, 2, 0, 2};  // x -> 2x is not unital
  CHECK_FALSE(check_endomorphism(z4, bad));
  Endomorphism sigma{z4, bad, "double"};
  try {
    make_trunc_skew_poly(z4, sigma, 2);
    FAIL("expected an invalid endomorphism");
  } catch (const RingError& e) {
    CHECK(e.kind() == ErrorKind::invalid_endomorphism);
  }

  const std::vector<FiniteRing> unequal{make_zmod(2), make_zmod(3)};
  CHECK_THROWS_AS(swap_endomorphism(make_product(unequal), 0, 1), RingError);

  std::vector<Elem> all(4);
  std::iota(all.begin(), all.end(), 0);
  try {
    make_quotient(z4, all);
    FAIL("expected an improper ideal");
  } catch (const RingError& e) {
    CHECK(e.kind() == ErrorKind::improper_ideal);
  }
  std::vector<Elem> not_ideal{0, 1};
  try {
    make_quotient(z4, not_ideal);
    FAIL("expected an invalid ideal");
  } catch (const RingError& e) {
    CHECK(e.kind() == ErrorKind::invalid_ideal);
  }
}

TEST_CASE("unity adjoined to a nil algebra") {
  const auto a = make_strictly_upper_algebra(3);
  CHECK(a.size() == 8);
  CHECK(check_algebra_axioms(a));
  const auto star = adjoin_unity(a);
  CHECK(star.size() == 16);
  CHECK(star.one() == 1);
  CHECK(check_ring_axioms(star));
  // (1, a)(1, b) = (1, a + b + ab)
  for (Elem x = 0; x < 8; ++x) {
    for (Elem y = 0; y < 8; ++y) {
      const Elem expect = 1 + 2 * a.add(a.add(x, y), a.mul(x, y));
      CHECK(star.mul(1 + 2 * x, 1 + 2 * y) == expect);
    }
  }
  const auto p = make_nil_power_algebra(3);
  CHECK(p.size() == 4);
  CHECK(p.mul(1, 1) == 2);  // x * x = x^2
  CHECK(p.mul(1, 2) == 0);  // x * x^2 = 0
}

TEST_CASE("table rings and axiom violations") {
  // Z2 with a broken multiplication: 1 * 1 = 0 violates the identity law.
  const auto broken = make_table_ring(2, 0, 1, {0, 1, 1, 0}, {0, 0, 0, 0}, {0, 1}, "broken");
  const auto report = check_ring_axioms(broken);
  CHECK_FALSE(report.passed);
  CHECK_FALSE(report.axiom.empty());
  CHECK(check_ring_axioms(make_zmod(5)));
  const auto big = make_matrix_ring(make_zmod(2), 3);
  const auto sampled = check_ring_axioms(big);
  CHECK(sampled.passed);
  CHECK(sampled.sampled);
  CHECK_FALSE(sampled.notice.empty());
}
