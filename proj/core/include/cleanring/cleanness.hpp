#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cleanring/ring.hpp"

namespace cleanring {

enum class DecompositionKind { clean, nil_clean, j_clean };

std::string_view to_string(DecompositionKind kind) noexcept;

// a = e + t with e idempotent; t a unit, a nilpotent or a radical element
// depending on kind.
struct Decomposition {
  Elem a = 0;
  Elem e = 0;
  Elem t = 0;
  DecompositionKind kind = DecompositionKind::clean;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// All decompositions of a, ordered by idempotent index.
std::vector<Decomposition> clean_decompositions(const FiniteRing& ring, Elem a);
std::vector<Decomposition> nil_clean_decompositions(const FiniteRing& ring, Elem a);
std::vector<Decomposition> j_clean_decompositions(const FiniteRing& ring, Elem a);
std::vector<Decomposition> decompositions(const FiniteRing& ring, Elem a, DecompositionKind kind);

enum class Flag : std::size_t {
  clean,
  uniquely_clean,
  conjugate_clean,
  nil_clean,
  uniquely_nil_clean,
  conjugate_nil_clean,
  j_clean,
};

inline constexpr std::size_t kFlagCount = 7;
inline constexpr std::array<Flag, kFlagCount> kAllFlags = {
    Flag::clean,          Flag::uniquely_clean,      Flag::conjugate_clean, Flag::nil_clean,
    Flag::uniquely_nil_clean, Flag::conjugate_nil_clean, Flag::j_clean};

std::string_view to_string(Flag flag) noexcept;
std::optional<Flag> parse_flag(std::string_view name) noexcept;

struct FlagSet {
  std::array<bool, kFlagCount> values{};

  bool operator[](Flag f) const { return values[static_cast<std::size_t>(f)]; }
  bool& operator[](Flag f) { return values[static_cast<std::size_t>(f)]; }
  friend bool operator==(const FlagSet&, const FlagSet&) = default;
};

// Two decompositions of the same element whose idempotents are not
// conjugate; the pair is the lexicographically least such pair.
struct WitnessPair {
  Decomposition first;
  Decomposition second;
};

struct ElementClassification {
  Elem element = 0;
  FlagSet flags;
  std::size_t clean_count = 0;
  std::size_t nil_clean_count = 0;
  std::size_t j_clean_count = 0;
  std::optional<WitnessPair> clean_witness;      // set iff clean && !conjugate_clean
  std::optional<WitnessPair> nil_clean_witness;  // set iff nil_clean && !conjugate_nil_clean
};

ElementClassification classify_element(const FiniteRing& ring, Elem a);

// uniquely => conjugate => plain, for clean and nil clean.
bool implications_hold(const FlagSet& flags) noexcept;

struct RadicalSummary {
  std::uint64_t size = 0;
  bool nil = false;
  std::optional<std::uint64_t> nilpotency_class;
};

// Earliest element (by index) at which a ring-level flag fails.
struct FlagWitness {
  Flag flag = Flag::clean;
  Elem element = 0;
  // For conjugate flags: the non-conjugate pair. For uniquely flags with
  // several decompositions: the first two.
  std::optional<WitnessPair> pair;
};

struct PhaseTiming {
  double structure_ms = 0;
  double classification_ms = 0;
};

struct RingReport {
  std::string label;
  std::uint64_t size = 0;
  FlagSet flags;  // each flag is the conjunction over all elements
  bool abelian = true;
  std::optional<std::pair<Elem, Elem>> abelian_witness;
  RadicalSummary radical;
  std::size_t idempotent_count = 0;
  std::size_t unit_count = 0;
  std::size_t conjugacy_class_count = 0;
  std::vector<FlagWitness> witnesses;  // in flag order
  // uniquely_X == conjugate_X && abelian for X in {clean, nil clean}.
  bool uniqueness_consistent = true;
  PhaseTiming timing;

  const FlagWitness* witness(Flag flag) const;
};

struct ClassifyOptions {
  std::uint64_t size_cap = kDefaultSizeCap;
  // 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Classifies every element and folds the verdicts into ring-level flags.
/// Throws SizeCapError when the ring exceeds options.size_cap.
RingReport classify_ring(const FiniteRing& ring, const ClassifyOptions& options = {});

// Every element is idempotent.
bool is_boolean(const FiniteRing& ring);

}  // namespace cleanring
