#include "cleanring/cleanness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "cleanring/structure.hpp"

namespace cleanring {

std::string_view to_string(DecompositionKind kind) noexcept {
  switch (kind) {
    case DecompositionKind::clean: return "clean";
    case DecompositionKind::nil_clean: return "nil-clean";
    case DecompositionKind::j_clean: return "J-clean";
  }
  return "?";
}

std::string_view to_string(Flag flag) noexcept {
  switch (flag) {
    case Flag::clean: return "clean";
    case Flag::uniquely_clean: return "uniquely_clean";
    case Flag::conjugate_clean: return "conjugate_clean";
    case Flag::nil_clean: return "nil_clean";
    case Flag::uniquely_nil_clean: return "uniquely_nil_clean";
    case Flag::conjugate_nil_clean: return "conjugate_nil_clean";
    case Flag::j_clean: return "j_clean";
  }
  return "?";
}

std::optional<Flag> parse_flag(std::string_view name) noexcept {
  for (Flag f : kAllFlags) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

// Membership bytes for the three complement tests, indexed by element.
struct Complements {
  std::vector<char> unit;
  std::vector<char> nil;
  std::vector<char> radical;
};

Complements complements(const FiniteRing& ring) {
  Complements c;
  const auto& u = units(ring);
  const auto& nil = nilpotent_flags(ring);
  const auto j = jacobson_radical(ring);
  c.unit.assign(ring.size(), 0);
  c.nil.assign(ring.size(), 0);
  c.radical.assign(ring.size(), 0);
  for (Elem a = 0; a < ring.size(); ++a) {
    c.unit[a] = u.contains(a);
    c.nil[a] = nil[a];
    c.radical[a] = j.contains(a);
  }
  return c;
}

bool accepts(const FiniteRing& ring, DecompositionKind kind, Elem t) {
  switch (kind) {
    case DecompositionKind::clean: return units(ring).contains(t);
    case DecompositionKind::nil_clean: return nilpotent_flags(ring)[t];
    case DecompositionKind::j_clean: return jacobson_radical(ring).contains(t);
  }
  return false;
}

std::optional<WitnessPair> non_conjugate_pair(const FiniteRing& ring,
                                              const std::vector<Decomposition>& ds) {
  if (ds.empty()) return std::nullopt;
  const auto& cc = conjugacy_classes(ring);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      if (cc.class_of[ds[i].e] != cc.class_of[ds[j].e]) return WitnessPair{ds[i], ds[j]};
    }
  }
  return std::nullopt;
}

// Per-element counters for the fast classification pass.
struct Tally {
  std::size_t count = 0;
  std::uint32_t first_class = 0;
  bool mixed = false;

  void add(std::uint32_t cls) {
    if (count++ == 0) {
      first_class = cls;
    } else if (cls != first_class) {
      mixed = true;
    }
  }
};

constexpr Elem kNoFailure = std::numeric_limits<Elem>::max();

using FirstFailures = std::array<Elem, kFlagCount>;

FirstFailures scan(const FiniteRing& ring, const Complements& c, const std::vector<Elem>& idem,
                   const std::vector<Elem>& neg_idem, const std::vector<std::uint32_t>& cls,
                   Elem begin, Elem end) {
  FirstFailures first;
  first.fill(kNoFailure);
  auto fail = [&](Flag f, Elem a) {
    auto& slot = first[static_cast<std::size_t>(f)];
    if (slot == kNoFailure) slot = a;
  };
  for (Elem a = begin; a < end; ++a) {
    Tally clean, nil;
    std::size_t j = 0;
    for (std::size_t i = 0; i < idem.size(); ++i) {
      const Elem t = ring.add(a, neg_idem[i]);
      if (c.unit[t]) clean.add(cls[i]);
      if (c.nil[t]) nil.add(cls[i]);
      if (c.radical[t]) ++j;
    }
    if (clean.count == 0) fail(Flag::clean, a);
    if (clean.count != 1) fail(Flag::uniquely_clean, a);
    if (clean.count == 0 || clean.mixed) fail(Flag::conjugate_clean, a);
    if (nil.count == 0) fail(Flag::nil_clean, a);
    if (nil.count != 1) fail(Flag::uniquely_nil_clean, a);
    if (nil.count == 0 || nil.mixed) fail(Flag::conjugate_nil_clean, a);
    if (j == 0) fail(Flag::j_clean, a);
  }
  return first;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

std::vector<Decomposition> decompositions(const FiniteRing& ring, Elem a, DecompositionKind kind) {
  if (a >= ring.size()) {
    throw RingError(ErrorKind::invalid_argument,
                    "element " + std::to_string(a) + " is outside " + ring.label());
  }
  std::vector<Decomposition> out;
  for (Elem e : idempotents(ring)) {
    const Elem t = ring.sub(a, e);
    if (accepts(ring, kind, t)) out.push_back({a, e, t, kind});
  }
  return out;
}

std::vector<Decomposition> clean_decompositions(const FiniteRing& ring, Elem a) {
  return decompositions(ring, a, DecompositionKind::clean);
}

std::vector<Decomposition> nil_clean_decompositions(const FiniteRing& ring, Elem a) {
  return decompositions(ring, a, DecompositionKind::nil_clean);
}

std::vector<Decomposition> j_clean_decompositions(const FiniteRing& ring, Elem a) {
  return decompositions(ring, a, DecompositionKind::j_clean);
}

ElementClassification classify_element(const FiniteRing& ring, Elem a) {
  const auto clean = clean_decompositions(ring, a);
  const auto nil = nil_clean_decompositions(ring, a);
  const auto j = j_clean_decompositions(ring, a);
  ElementClassification c;
  c.element = a;
  c.clean_count = clean.size();
  c.nil_clean_count = nil.size();
  c.j_clean_count = j.size();
  c.clean_witness = non_conjugate_pair(ring, clean);
  c.nil_clean_witness = non_conjugate_pair(ring, nil);
  c.flags[Flag::clean] = !clean.empty();
  c.flags[Flag::uniquely_clean] = clean.size() == 1;
  c.flags[Flag::conjugate_clean] = !clean.empty() && !c.clean_witness;
  c.flags[Flag::nil_clean] = !nil.empty();
  c.flags[Flag::uniquely_nil_clean] = nil.size() == 1;
  c.flags[Flag::conjugate_nil_clean] = !nil.empty() && !c.nil_clean_witness;
  c.flags[Flag::j_clean] = !j.empty();
  return c;
}

bool implications_hold(const FlagSet& f) noexcept {
  auto implies = [](bool p, bool q) { return !p || q; };
  return implies(f[Flag::uniquely_clean], f[Flag::conjugate_clean]) &&
         implies(f[Flag::conjugate_clean], f[Flag::clean]) &&
         implies(f[Flag::uniquely_nil_clean], f[Flag::conjugate_nil_clean]) &&
         implies(f[Flag::conjugate_nil_clean], f[Flag::nil_clean]);
}

const FlagWitness* RingReport::witness(Flag flag) const {
  for (const auto& w : witnesses) {
    if (w.flag == flag) return &w;
  }
  return nullptr;
}

RingReport classify_ring(const FiniteRing& ring, const ClassifyOptions& options) {
  if (ring.size() > options.size_cap) {
    throw SizeCapError(ring.label() + " has " + std::to_string(ring.size()) +
                           " elements; classification needs a size cap of at least " +
                           std::to_string(ring.size()) + " (current cap " +
                           std::to_string(options.size_cap) + ")",
                       ring.size(), std::log2(static_cast<double>(ring.size())),
                       options.size_cap);
  }
  RingReport report;
  report.label = ring.label();
  report.size = ring.size();

  auto start = std::chrono::steady_clock::now();
  const auto& idem = idempotents(ring);
  const auto& cc = conjugacy_classes(ring);
  const Complements comp = complements(ring);
  const auto radical = jacobson_radical(ring);
  const auto abelian = is_abelian(ring);
  report.abelian = abelian.abelian;
  report.abelian_witness = abelian.witness;
  report.radical = {radical.size(), radical.is_nil(), radical.nilpotency_class()};
  report.idempotent_count = idem.size();
  report.unit_count = units(ring).size();
  report.conjugacy_class_count = cc.classes.size();
  report.timing.structure_ms = elapsed_ms(start);

  start = std::chrono::steady_clock::now();
  std::vector<Elem> neg_idem(idem.size());
  std::vector<std::uint32_t> cls(idem.size());
  for (std::size_t i = 0; i < idem.size(); ++i) {
    neg_idem[i] = ring.neg(idem[i]);
    cls[i] = cc.class_of[idem[i]];
  }
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, 64);
  const auto n = static_cast<Elem>(ring.size());
  if (n < threads * 64U) threads = 1;

  FirstFailures first;
  if (threads == 1) {
    first = scan(ring, comp, idem, neg_idem, cls, 0, n);
  } else {
    std::vector<FirstFailures> parts(threads);
    std::vector<std::thread> pool;
    const Elem chunk = (n + threads - 1) / threads;
    for (unsigned k = 0; k < threads; ++k) {
      const Elem lo = std::min<Elem>(n, k * chunk);
      const Elem hi = std::min<Elem>(n, lo + chunk);
      pool.emplace_back([&, k, lo, hi] { parts[k] = scan(ring, comp, idem, neg_idem, cls, lo, hi); });
    }
    for (auto& t : pool) t.join();
    first.fill(kNoFailure);
    for (const auto& p : parts) {
      for (std::size_t f = 0; f < kFlagCount; ++f) first[f] = std::min(first[f], p[f]);
    }
  }

  for (Flag flag : kAllFlags) {
    const Elem a = first[static_cast<std::size_t>(flag)];
    report.flags[flag] = a == kNoFailure;
    if (a == kNoFailure) continue;
    FlagWitness w{flag, a, std::nullopt};
    if (flag == Flag::conjugate_clean) w.pair = classify_element(ring, a).clean_witness;
    if (flag == Flag::conjugate_nil_clean) w.pair = classify_element(ring, a).nil_clean_witness;
    if (flag == Flag::uniquely_clean || flag == Flag::uniquely_nil_clean) {
      const auto ds = decompositions(ring, a,
                                     flag == Flag::uniquely_clean ? DecompositionKind::clean
                                                                  : DecompositionKind::nil_clean);
      if (ds.size() >= 2) w.pair = WitnessPair{ds[0], ds[1]};
    }
    report.witnesses.push_back(w);
  }
  report.uniqueness_consistent =
      report.flags[Flag::uniquely_clean] ==
          (report.flags[Flag::conjugate_clean] && report.abelian) &&
      report.flags[Flag::uniquely_nil_clean] ==
          (report.flags[Flag::conjugate_nil_clean] && report.abelian);
  report.timing.classification_ms = elapsed_ms(start);
  return report;
}

bool is_boolean(const FiniteRing& ring) {
  return idempotents(ring).size() == ring.size();
}

}  // namespace cleanring
