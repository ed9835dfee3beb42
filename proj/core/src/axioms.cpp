#include "cleanring/axioms.hpp"

#include <optional>
#include <random>

#include "cleanring/element_set.hpp"

namespace cleanring {

void extend_additive_span(const FiniteRing& ring, ElementSet& span, Elem g) {
  if (span.contains(g)) return;
  const std::vector<Elem> base = span.items();
  Elem h = g;
  while (!span.contains(h)) {
    for (Elem s : base) span.insert(ring.add(s, h));
    h = ring.add(h, g);
  }
}

ElementSet additive_span(const FiniteRing& ring, std::span<const Elem> generators) {
  ElementSet span(ring.size());
  span.insert(ring.zero());
  for (Elem g : generators) extend_additive_span(ring, span, g);
  return span;
}

namespace {

// Shared axiom checks for rings and non-unital algebras. `one` is empty for
// algebras.
template <class Ops>
class AxiomChecker {
 public:
  AxiomChecker(const Ops& ops, std::uint64_t size, Elem zero, std::optional<Elem> one)
      : ops_(ops), size_(size), zero_(zero), one_(one) {}

  bool unary(Elem a, AxiomReport& r) const {
    if (ops_.add(a, zero_) != a || ops_.add(zero_, a) != a) return fail(r, "add-identity", a, 0, 0);
    if (ops_.add(a, ops_.neg(a)) != zero_) return fail(r, "add-inverse", a, 0, 0);
    if (one_ && (ops_.mul(a, *one_) != a || ops_.mul(*one_, a) != a)) {
      return fail(r, "mul-identity", a, 0, 0);
    }
    return true;
  }

  bool binary(Elem a, Elem b, AxiomReport& r) const {
    if (ops_.add(a, b) != ops_.add(b, a)) return fail(r, "add-commutative", a, b, 0);
    return true;
  }

  bool ternary(Elem a, Elem b, Elem c, AxiomReport& r) const {
    if (ops_.add(ops_.add(a, b), c) != ops_.add(a, ops_.add(b, c))) {
      return fail(r, "add-associative", a, b, c);
    }
    if (ops_.mul(ops_.mul(a, b), c) != ops_.mul(a, ops_.mul(b, c))) {
      return fail(r, "mul-associative", a, b, c);
    }
    if (ops_.mul(a, ops_.add(b, c)) != ops_.add(ops_.mul(a, b), ops_.mul(a, c))) {
      return fail(r, "left-distributive", a, b, c);
    }
    if (ops_.mul(ops_.add(a, b), c) != ops_.add(ops_.mul(a, c), ops_.mul(b, c))) {
      return fail(r, "right-distributive", a, b, c);
    }
    return true;
  }

  AxiomReport run(const AxiomOptions& options) const {
    AxiomReport report;
    bool exhaustive = options.mode == AxiomMode::exhaustive;
    if (exhaustive && size_ > options.exhaustive_size_limit) {
      exhaustive = false;
      report.notice = "size " + std::to_string(size_) + " exceeds exhaustive limit " +
                      std::to_string(options.exhaustive_size_limit) + "; sampled " +
                      std::to_string(options.samples) + " triples instead";
    }
    report.sampled = !exhaustive;
    const auto n = static_cast<Elem>(size_);
    if (exhaustive) {
      for (Elem a = 0; a < n; ++a) {
        if (!unary(a, report)) return report;
      }
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          if (!binary(a, b, report)) return report;
        }
      }
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          for (Elem c = 0; c < n; ++c) {
            if (!ternary(a, b, c, report)) return report;
            ++report.checked;
          }
        }
      }
      return report;
    }
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, size_ - 1);
    for (std::uint64_t i = 0; i < options.samples; ++i) {
      const auto a = static_cast<Elem>(pick(rng));
      const auto b = static_cast<Elem>(pick(rng));
      const auto c = static_cast<Elem>(pick(rng));
      if (!unary(a, report) || !binary(a, b, report) || !ternary(a, b, c, report)) return report;
      ++report.checked;
    }
    return report;
  }

 private:
  static bool fail(AxiomReport& r, const char* axiom, Elem a, Elem b, Elem c) {
    r.passed = false;
    r.axiom = axiom;
    r.witness = {a, b, c};
    return false;
  }

  const Ops& ops_;
  std::uint64_t size_;
  Elem zero_;
  std::optional<Elem> one_;
};

}  // namespace

AxiomReport check_ring_axioms(const FiniteRing& ring, const AxiomOptions& options) {
  if (ring.one() == ring.zero()) {
    AxiomReport r;
    r.passed = false;
    r.axiom = "one-not-zero";
    return r;
  }
  return AxiomChecker<FiniteRing>(ring, ring.size(), ring.zero(), ring.one()).run(options);
}

AxiomReport check_algebra_axioms(const NonUnitalAlgebra& algebra, const AxiomOptions& options) {
  auto report =
      AxiomChecker<NonUnitalAlgebra>(algebra, algebra.size(), algebra.zero(), std::nullopt)
          .run(options);
  if (!report.passed) return report;
  bool char2 = true;
  for (Elem a = 0; a < algebra.size(); ++a) {
    if (algebra.add(a, a) != algebra.zero()) {
      char2 = false;
      break;
    }
  }
  if (char2 != algebra.characteristic_two()) {
    report.passed = false;
    report.axiom = "characteristic-flag";
  }
  return report;
}

EndomorphismReport check_endomorphism(const FiniteRing& ring, std::span<const Elem> map) {
  EndomorphismReport r;
  auto fail = [&](const char* reason, Elem a, Elem b) {
    r.passed = false;
    r.reason = reason;
    r.a = a;
    r.b = b;
    return r;
  };
  if (map.size() != ring.size()) return fail("map is not total", 0, 0);
  for (Elem a = 0; a < ring.size(); ++a) {
    if (map[a] >= ring.size()) return fail("map leaves the ring", a, 0);
  }
  if (map[ring.zero()] != ring.zero()) return fail("zero not preserved", ring.zero(), 0);
  if (map[ring.one()] != ring.one()) return fail("one not preserved", ring.one(), 0);
  const auto n = static_cast<Elem>(ring.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (map[ring.add(a, b)] != ring.add(map[a], map[b])) {
        return fail("addition not preserved", a, b);
      }
      if (map[ring.mul(a, b)] != ring.mul(map[a], map[b])) {
        return fail("multiplication not preserved", a, b);
      }
    }
  }
  return r;
}

IdealReport check_ideal(const FiniteRing& ring, std::span<const Elem> elements) {
  IdealReport r;
  auto fail = [&](std::string reason, Elem a, Elem b) {
    r.passed = false;
    r.reason = std::move(reason);
    r.a = a;
    r.b = b;
    r.additive_generators.clear();
    return r;
  };
  ElementSet members(ring.size());
  for (Elem x : elements) {
    if (x >= ring.size()) return fail("element out of range", x, 0);
    members.insert(x);
  }
  if (!members.contains(ring.zero())) return fail("zero missing", ring.zero(), 0);

  ElementSet span(ring.size());
  span.insert(ring.zero());
  for (Elem x : members.sorted()) {
    if (span.contains(x)) continue;
    r.additive_generators.push_back(x);
    extend_additive_span(ring, span, x);
    if (span.size() > members.size()) break;
  }
  bool closed = span.size() == members.size();
  for (std::size_t i = 0; closed && i < span.size(); ++i) closed = members.contains(span.items()[i]);
  if (!closed) {
    for (Elem a : members.items()) {
      for (Elem b : members.items()) {
        if (!members.contains(ring.add(a, b))) return fail("not closed under addition", a, b);
      }
    }
    for (Elem a : members.items()) {
      if (!members.contains(ring.neg(a))) return fail("not closed under negation", a, 0);
    }
    return fail("not an additive subgroup", 0, 0);
  }
  const auto n = static_cast<Elem>(ring.size());
  for (Elem g : r.additive_generators) {
    for (Elem x = 0; x < n; ++x) {
      if (!members.contains(ring.mul(x, g))) return fail("not left-absorbing", x, g);
      if (!members.contains(ring.mul(g, x))) return fail("not right-absorbing", g, x);
    }
  }
  return r;
}

}  // namespace cleanring
