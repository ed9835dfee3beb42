#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cleanring/constructors.hpp"
#include "cleanring/ring.hpp"

namespace cleanring {

// A verified two-sided ideal together with its nilness data.
class Ideal {
 public:
  struct Data {
    std::vector<Elem> elements;  // sorted
    std::vector<bool> member;    // indexed by ring element
    std::vector<Elem> additive_generators;
    bool nil = false;
    // Least k with I^k = 0; only computed for |I| <= kNilpotencyClassLimit.
    std::optional<std::uint64_t> nilpotency_class;
  };

  static constexpr std::size_t kNilpotencyClassLimit = 4096;

  Ideal(FiniteRing ring, std::shared_ptr<const Data> data)
      : ring_(std::move(ring)), data_(std::move(data)) {}

  const FiniteRing& ring() const noexcept { return ring_; }
  const std::vector<Elem>& elements() const noexcept { return data_->elements; }
  std::size_t size() const noexcept { return data_->elements.size(); }
  bool contains(Elem a) const { return data_->member[a]; }
  bool is_nil() const noexcept { return data_->nil; }
  std::optional<std::uint64_t> nilpotency_class() const noexcept {
    return data_->nilpotency_class;
  }
  const std::vector<Elem>& additive_generators() const noexcept {
    return data_->additive_generators;
  }
  bool is_zero() const noexcept { return size() == 1; }

 private:
  FiniteRing ring_;
  std::shared_ptr<const Data> data_;
};

// Verifies `elements` is a two-sided ideal (invalid-ideal otherwise) and
// computes nilness.
Ideal make_ideal(const FiniteRing& ring, std::span<const Elem> elements);

/// Least ideal containing `generators`: the additive span closed under left
/// and right multiplication, computed as a fixed point over additive
/// generators.
Ideal ideal_closure(const FiniteRing& ring, std::span<const Elem> generators);

// The cached payloads never hold a FiniteRing, so they can live in the
// ring's own cache without creating ownership cycles.
struct UnitGroup {
  std::vector<Elem> units;  // sorted
  std::vector<bool> member;
  std::vector<Elem> inverse_of;  // meaningful for units only

  bool contains(Elem a) const { return member[a]; }
  Elem inverse(Elem u) const { return inverse_of[u]; }
  std::size_t size() const noexcept { return units.size(); }
};

const std::vector<Elem>& idempotents(const FiniteRing& ring);
const UnitGroup& units(const FiniteRing& ring);

// Least k >= 1 with a^k = 0, or nullopt when a is not nilpotent.
std::optional<std::uint64_t> nilpotency_index(const FiniteRing& ring, Elem a);
// Cached nilpotency flags for every element.
const std::vector<bool>& nilpotent_flags(const FiniteRing& ring);

/// J(R) = { x : 1 - r x is a unit for every r }.
Ideal jacobson_radical(const FiniteRing& ring);

struct ConjugacyClasses {
  static constexpr std::uint32_t kNone = 0xffffffffU;

  std::vector<std::vector<Elem>> classes;  // each sorted, ordered by least member
  std::vector<std::uint32_t> class_of;     // kNone for non-idempotents
  // transversal[e] is a unit t with e = t * rep * t^-1, rep the least
  // member of e's class.
  std::vector<Elem> transversal;
};

// Orbit partition of the idempotents under conjugation by units.
const ConjugacyClasses& conjugacy_classes(const FiniteRing& ring);

struct ConjugacyCertificate {
  Elem e = 0;
  Elem f = 0;
  // Unit u with e = u f u^-1; empty when no unit conjugates f to e.
  std::optional<Elem> witness;

  bool conjugate() const noexcept { return witness.has_value(); }
};

ConjugacyCertificate are_conjugate(const FiniteRing& ring, Elem e, Elem f);

struct AbelianCheck {
  bool abelian = true;
  // Least (idempotent, element) pair that fails to commute.
  std::optional<std::pair<Elem, Elem>> witness;
};

AbelianCheck is_abelian(const FiniteRing& ring);

/// { r in subring : r s = s r = 0 for all s in subset }. The subring must
/// contain one and be closed under the ring operations.
std::vector<Elem> two_sided_annihilator(const FiniteRing& ring, std::span<const Elem> subring,
                                        std::span<const Elem> subset);

// Empty when `subset` is a unital subring; otherwise the failed clause.
std::optional<std::string> subring_violation(const FiniteRing& ring, std::span<const Elem> subset);

struct SplitCheck {
  bool passed = true;
  std::string clause;
  std::vector<Elem> witness;

  explicit operator bool() const noexcept { return passed; }
};

// T = S (+) I: S a unital subring, I an ideal of T, S and I meet in zero,
// and every element is uniquely s + i.
SplitCheck check_split(const FiniteRing& ring, std::span<const Elem> subring, const Ideal& ideal);

/// For a with a^2 - a in I: takes the least clean decomposition a = e + u
/// and returns u (1 - e) u^-1, an idempotent congruent to a modulo I.
Elem lift_idempotent(const FiniteRing& ring, const Ideal& ideal, Elem a);

QuotientRing make_quotient(const Ideal& ideal);

// The ideal as a non-unital algebra, elements indexed by sorted position.
NonUnitalAlgebra algebra_from_ideal(const Ideal& ideal);

}  // namespace cleanring
