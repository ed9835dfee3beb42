#pragma once

// Exhaustive fleet checks: axioms, decomposition counts against the pair
// oracle, the uniquely => conjugate => plain chains, and conjugacy of
// idempotents with nilpotent difference.

#include <string>
#include <vector>

#include "cleanring/axioms.hpp"
#include "cleanring/cleanness.hpp"
#include "cleanring/spec_dsl.hpp"
#include "cleanring/structure.hpp"
#include "oracles.hpp"

namespace oracle {

struct FleetStats {
  std::size_t rings = 0;
  std::size_t axiom_rings = 0;
  std::size_t elements = 0;
  std::size_t close_pairs = 0;
  std::vector<std::string> failures;
};

inline void check_ring(const std::string& spec, FleetStats& stats) {
  using namespace cleanring;
  auto fail = [&](const std::string& what) { stats.failures.push_back(spec + ": " + what); };
  const auto ring = build_ring(spec);
  if (ring.size() > 4096) {
    fail("fleet ring larger than 4096");
    return;
  }
  ++stats.rings;
  if (ring.size() <= 256) {
    ++stats.axiom_rings;
    const auto axioms = check_ring_axioms(ring);
    if (!axioms.passed || axioms.sampled) fail("axiom " + axioms.axiom);
  }

  const auto idem = oracle::idempotents(ring);
  const auto unit = oracle::units(ring);
  const auto nil = oracle::nilpotents(ring);
  const auto rad = oracle::radical(ring, unit);

  // Oracle conjugacy relation on idempotents.
  const std::size_t k = idem.size();
  std::vector<char> conj(k * k, 0);
  for (std::size_t p = 0; p < k; ++p) {
    conj[p * k + p] = 1;
    for (std::size_t q = p + 1; q < k; ++q) {
      conj[p * k + q] = conj[q * k + p] = oracle::conjugate(ring, idem[p], idem[q], unit);
      if (nil[ring.sub(idem[p], idem[q])]) {
        ++stats.close_pairs;
        if (!conj[p * k + q]) fail("idempotents with nilpotent difference are not conjugate");
      }
    }
  }

  // Every pair (e, t), bucketed by e + t.
  struct Bucket {
    std::vector<std::size_t> clean, nil;
    std::size_t j = 0;
  };
  std::vector<Bucket> buckets(ring.size());
  for (std::size_t p = 0; p < k; ++p) {
    for (Elem t = 0; t < ring.size(); ++t) {
      auto& b = buckets[ring.add(idem[p], t)];
      if (unit[t]) b.clean.push_back(p);
      if (nil[t]) b.nil.push_back(p);
      if (rad[t]) ++b.j;
    }
  }
  auto all_conjugate = [&](const std::vector<std::size_t>& ps) {
    for (std::size_t x : ps) {
      if (!conj[ps.front() * k + x]) return false;
    }
    return true;
  };

  FlagSet ring_flags;
  ring_flags.values.fill(true);
  for (Elem a = 0; a < ring.size(); ++a) {
    ++stats.elements;
    const auto& b = buckets[a];
    const auto c = classify_element(ring, a);
    if (c.clean_count != b.clean.size() || c.nil_clean_count != b.nil.size() ||
        c.j_clean_count != b.j) {
      fail("decomposition counts differ at " + ring.render(a));
    }
    FlagSet f;
    f[Flag::clean] = !b.clean.empty();
    f[Flag::uniquely_clean] = b.clean.size() == 1;
    f[Flag::conjugate_clean] = !b.clean.empty() && all_conjugate(b.clean);
    f[Flag::nil_clean] = !b.nil.empty();
    f[Flag::uniquely_nil_clean] = b.nil.size() == 1;
    f[Flag::conjugate_nil_clean] = !b.nil.empty() && all_conjugate(b.nil);
    f[Flag::j_clean] = b.j > 0;
    if (f != c.flags) fail("element flags differ at " + ring.render(a));
    if (!implications_hold(c.flags) || !implications_hold(f)) {
      fail("implication chain broken at " + ring.render(a));
    }
    for (std::size_t i = 0; i < kFlagCount; ++i) ring_flags.values[i] = ring_flags.values[i] && f.values[i];
  }
  const auto report = classify_ring(ring);
  if (report.flags != ring_flags) fail("ring flags differ from the oracle");
  if (!implications_hold(report.flags)) fail("ring-level implication chain broken");
  if (!report.uniqueness_consistent) fail("uniquely flags are not conjugate and abelian");
}

inline FleetStats check_fleet(const std::vector<std::string>& fleet) {
  FleetStats stats;
  for (const auto& spec : fleet) check_ring(spec, stats);
  return stats;
}

}  // namespace oracle
