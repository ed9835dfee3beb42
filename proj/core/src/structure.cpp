#include <bit>
#include <stdexcept>

#include "cleanring/axioms.hpp"
#include "cleanring/element_set.hpp"
#include "cleanring/structure.hpp"

namespace cleanring {

namespace {

std::uint64_t squaring_steps(std::uint64_t size) {
  // ceil(log2 size) + 1 squarings reach exponents >= size.
  return static_cast<std::uint64_t>(std::bit_width(size - 1)) + 1;
}

bool nilpotent_by_squaring(const FiniteRing& ring, Elem a) {
  Elem p = a;
  const std::uint64_t steps = squaring_steps(ring.size());
  for (std::uint64_t i = 0; i <= steps; ++i) {
    if (p == ring.zero()) return true;
    p = ring.mul(p, p);
  }
  return false;
}

// Walks a, a^2, ... until it reaches one (a is a unit, a^(m-1) its inverse)
// or Brent's cycle detection closes a cycle without meeting one.
std::optional<Elem> inverse_by_powers(const FiniteRing& ring, Elem a) {
  Elem prev = ring.one();  // a^(k-1)
  Elem cur = a;            // a^k
  Elem saved = a;
  std::uint64_t power = 1;
  std::uint64_t lam = 0;
  while (true) {
    if (cur == ring.one()) return prev;
    const Elem next = ring.mul(cur, a);
    if (next == saved) return std::nullopt;
    if (++lam == power) {
      saved = next;
      power *= 2;
      lam = 0;
    }
    prev = cur;
    cur = next;
  }
}

std::shared_ptr<Ideal::Data> ideal_data(const FiniteRing& ring, std::vector<Elem> elements,
                                        std::vector<Elem> generators) {
  auto data = std::make_shared<Ideal::Data>();
  std::sort(elements.begin(), elements.end());
  data->member.assign(ring.size(), false);
  for (Elem x : elements) data->member[x] = true;
  data->elements = std::move(elements);
  data->additive_generators = std::move(generators);

  const auto& nil = nilpotent_flags(ring);
  data->nil = true;
  for (Elem x : data->elements) {
    if (!nil[x]) {
      data->nil = false;
      break;
    }
  }
  if (data->nil && data->elements.size() <= Ideal::kNilpotencyClassLimit) {
    // I^(k+1) is spanned by products of generators of I^k with generators of I.
    std::vector<Elem> power_gens = data->additive_generators;
    std::uint64_t k = 1;
    while (!power_gens.empty()) {
      ElementSet next(ring.size());
      next.insert(ring.zero());
      std::vector<Elem> next_gens;
      for (Elem p : power_gens) {
        for (Elem g : data->additive_generators) {
          const Elem prod = ring.mul(p, g);
          if (!next.contains(prod)) {
            next_gens.push_back(prod);
            extend_additive_span(ring, next, prod);
          }
        }
      }
      power_gens = std::move(next_gens);
      ++k;
      if (k > data->elements.size() + 1) break;
    }
    data->nilpotency_class = data->additive_generators.empty() ? 1 : k;
  }
  return data;
}

}  // namespace

const std::vector<Elem>& idempotents(const FiniteRing& ring) {
  return ring.frozen<std::vector<Elem>>(CacheSlot::idempotents, [&] {
    std::vector<Elem> out;
    for (Elem a = 0; a < ring.size(); ++a) {
      if (ring.mul(a, a) == a) out.push_back(a);
    }
    return out;
  });
}

const UnitGroup& units(const FiniteRing& ring) {
  return ring.frozen<UnitGroup>(CacheSlot::units, [&] {
    UnitGroup g;
    g.member.assign(ring.size(), false);
    g.inverse_of.assign(ring.size(), ring.zero());
    std::vector<bool> decided(ring.size(), false);
    for (Elem a = 0; a < ring.size(); ++a) {
      if (decided[a]) continue;
      decided[a] = true;
      if (auto inv = inverse_by_powers(ring, a)) {
        g.member[a] = g.member[*inv] = true;
        g.inverse_of[a] = *inv;
        g.inverse_of[*inv] = a;
        decided[*inv] = true;
      }
    }
    for (Elem a = 0; a < ring.size(); ++a) {
      if (g.member[a]) g.units.push_back(a);
    }
    return g;
  });
}

std::optional<std::uint64_t> nilpotency_index(const FiniteRing& ring, Elem a) {
  if (!nilpotent_by_squaring(ring, a)) return std::nullopt;
  std::uint64_t k = 1;
  for (Elem p = a; p != ring.zero(); p = ring.mul(p, a)) ++k;
  return k;
}

const std::vector<bool>& nilpotent_flags(const FiniteRing& ring) {
  return ring.frozen<std::vector<bool>>(CacheSlot::nilpotents, [&] {
    std::vector<bool> flags(ring.size());
    for (Elem a = 0; a < ring.size(); ++a) flags[a] = nilpotent_by_squaring(ring, a);
    return flags;
  });
}

Ideal make_ideal(const FiniteRing& ring, std::span<const Elem> elements) {
  auto check = check_ideal(ring, elements);
  if (!check) {
    throw RingError(ErrorKind::invalid_ideal, "subset is not an ideal of " + ring.label() + ": " +
                                                  check.reason + " (" + std::to_string(check.a) +
                                                  ", " + std::to_string(check.b) + ")");
  }
  std::vector<Elem> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return Ideal(ring, ideal_data(ring, std::move(sorted), std::move(check.additive_generators)));
}

Ideal ideal_closure(const FiniteRing& ring, std::span<const Elem> generators) {
  ElementSet span(ring.size());
  span.insert(ring.zero());
  std::vector<Elem> gens;
  auto absorb = [&](Elem x) {
    if (span.contains(x)) return;
    gens.push_back(x);
    extend_additive_span(ring, span, x);
  };
  for (Elem g : generators) absorb(g);
  // Left and right multiples of additive generators suffice by bilinearity.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Elem g = gens[i];
    for (Elem r = 0; r < ring.size(); ++r) {
      absorb(ring.mul(r, g));
      absorb(ring.mul(g, r));
    }
  }
  return Ideal(ring, ideal_data(ring, span.sorted(), gens));
}

Ideal jacobson_radical(const FiniteRing& ring) {
  const auto& data = ring.frozen<std::shared_ptr<const Ideal::Data>>(CacheSlot::radical, [&] {
    const auto& u = units(ring);
    const auto& nil = nilpotent_flags(ring);
    const auto n = static_cast<Elem>(ring.size());
    auto in_radical = [&](Elem x) {
      for (Elem r = 0; r < n; ++r) {
        if (!u.contains(ring.sub(ring.one(), ring.mul(r, x)))) return false;
      }
      return true;
    };
    // J is an additive subgroup of nilpotents: members extend the span,
    // and a failure rules out its whole coset of the span found so far.
    ElementSet span(ring.size());
    span.insert(ring.zero());
    std::vector<bool> outside(ring.size(), false);
    std::vector<Elem> gens;
    for (Elem x = 0; x < n; ++x) {
      if (!nil[x] || span.contains(x) || outside[x]) continue;
      if (in_radical(x)) {
        gens.push_back(x);
        extend_additive_span(ring, span, x);
      } else {
        for (Elem j : span.items()) outside[ring.add(x, j)] = true;
      }
    }
    auto elements = span.sorted();
    if (auto check = check_ideal(ring, elements); !check) {
      throw std::logic_error("computed radical is not an ideal: " + check.reason);
    }
    return std::shared_ptr<const Ideal::Data>(ideal_data(ring, std::move(elements), gens));
  });
  return Ideal(ring, data);
}

}  // namespace cleanring
