#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cleanring/ring.hpp"

namespace cleanring {

/// Integers mod n (n >= 2); index i is the residue i.
FiniteRing make_zmod(std::uint64_t n, const Limits& limits = {});

/// F2^k with bitwise operations; element index is the k-bit vector.
FiniteRing make_boolean(std::uint64_t k, const Limits& limits = {});

/// Direct product with componentwise operations; factor i is digit i.
FiniteRing make_product(std::span<const FiniteRing> factors, const Limits& limits = {});

/// n x n matrices over `base`. Over a two-element base the bit-packed GF(2)
/// kernel evaluates products.
FiniteRing make_matrix_ring(const FiniteRing& base, std::size_t n, const Limits& limits = {});

/// Upper-triangular n x n matrices over `base`, n >= 2.
FiniteRing make_ut_ring(const FiniteRing& base, std::size_t n, const Limits& limits = {});

// An endomorphism of `ring` given as a total index map.
struct Endomorphism {
  FiniteRing ring;
  std::vector<Elem> map;
  std::string name;

  Elem operator()(Elem a) const { return map[a]; }
};

Endomorphism identity_endomorphism(const FiniteRing& ring);

// Exchanges factors i and j (0-based) of a product ring. The factors must
// have equal sizes; the resulting map is not checked here.
Endomorphism swap_endomorphism(const FiniteRing& product, std::size_t i, std::size_t j);

/// R[x; sigma]/(x^n) with left coefficients and x a = sigma(a) x:
///   (sum a_i x^i)(sum b_j x^j) = sum_{i+j<n} a_i sigma^i(b_j) x^{i+j}.
/// Throws invalid-endomorphism if sigma fails check_endomorphism.
FiniteRing make_trunc_skew_poly(const FiniteRing& base, const Endomorphism& sigma, std::size_t n,
                                const Limits& limits = {});

struct QuotientRing {
  FiniteRing ring;
  // projection[a] is the quotient index of a + I.
  std::vector<Elem> projection;
  // representatives[q] is the minimal parent index in coset q.
  std::vector<Elem> representatives;
};

/// R/I on minimal coset representatives, ordered by representative.
/// Throws invalid-ideal if `ideal` is not a two-sided ideal and
/// improper-ideal if it contains one.
QuotientRing make_quotient(const FiniteRing& ring, std::span<const Elem> ideal);

// A finite associative algebra without a unit, stored as operation tables.
class NonUnitalAlgebra {
 public:
  NonUnitalAlgebra(std::uint64_t size, std::vector<Elem> add, std::vector<Elem> mul,
                   std::vector<Elem> neg, std::string label);

  std::uint64_t size() const noexcept { return size_; }
  Elem zero() const noexcept { return 0; }
  Elem add(Elem a, Elem b) const { return add_[a * size_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * size_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  bool characteristic_two() const noexcept { return char2_; }
  const std::string& label() const noexcept { return label_; }

 private:
  std::uint64_t size_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::string label_;
  bool char2_ = false;
};

// Strictly upper-triangular n x n matrices over F2; n(n-1)/2 bits, row-major.
NonUnitalAlgebra make_strictly_upper_algebra(std::size_t n);

// x F2[x]/(x^n): bit i-1 holds the coefficient of x^i for 1 <= i < n.
NonUnitalAlgebra make_nil_power_algebra(std::size_t n);

/// Unity adjoined over F2: pairs (eps, a) encoded as eps + 2a, with
/// (eps, a)(delta, b) = (eps delta, eps b + delta a + ab).
FiniteRing adjoin_unity(const NonUnitalAlgebra& algebra);

// Ring given directly by operation tables; no axioms are checked.
FiniteRing make_table_ring(std::uint64_t size, Elem zero, Elem one, std::vector<Elem> add,
                           std::vector<Elem> mul, std::vector<Elem> neg, std::string label);

}  // namespace cleanring
