#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cleanring/constructors.hpp"
#include "cleanring/ring.hpp"

namespace cleanring {

enum class AxiomMode { exhaustive, sampled };

struct AxiomOptions {
  AxiomMode mode = AxiomMode::exhaustive;
  std::uint64_t samples = 1'000'000;
  // Exhaustive checking is O(size^3); larger rings fall back to sampling.
  std::uint64_t exhaustive_size_limit = 256;
  std::uint64_t seed = 0x5eed'c1ea'9f00'd001ULL;

  static AxiomOptions sampled(std::uint64_t count) {
    AxiomOptions o;
    o.mode = AxiomMode::sampled;
    o.samples = count;
    return o;
  }
};

struct AxiomReport {
  bool passed = true;
  std::string axiom;  // name of the violated axiom
  std::array<Elem, 3> witness{};
  bool sampled = false;
  std::string notice;  // set when exhaustive mode was downgraded
  std::uint64_t checked = 0;

  explicit operator bool() const noexcept { return passed; }
};

AxiomReport check_ring_axioms(const FiniteRing& ring, const AxiomOptions& options = {});

// Same checks minus the identity axioms; also reports whether the
// characteristic-two flag agrees with a + a = 0.
AxiomReport check_algebra_axioms(const NonUnitalAlgebra& algebra, const AxiomOptions& options = {});

struct EndomorphismReport {
  bool passed = true;
  std::string reason;
  Elem a = 0;
  Elem b = 0;

  explicit operator bool() const noexcept { return passed; }
};

EndomorphismReport check_endomorphism(const FiniteRing& ring, std::span<const Elem> map);

struct IdealReport {
  bool passed = true;
  std::string reason;
  Elem a = 0;
  Elem b = 0;
  // Additive generators of the subset (valid when passed).
  std::vector<Elem> additive_generators;

  explicit operator bool() const noexcept { return passed; }
};

// Two-sided ideal test: contains zero, closed under addition and negation,
// and r*x, x*r stay inside for all ring elements r. Absorption is checked on
// additive generators only, which suffices by bilinearity.
IdealReport check_ideal(const FiniteRing& ring, std::span<const Elem> elements);

}  // namespace cleanring
