#include <algorithm>
#include <stdexcept>

#include "cleanring/structure.hpp"

namespace cleanring {

const ConjugacyClasses& conjugacy_classes(const FiniteRing& ring) {
  return ring.frozen<ConjugacyClasses>(CacheSlot::conjugacy, [&] {
    const auto& idem = idempotents(ring);
    const auto& u = units(ring);
    ConjugacyClasses cc;
    cc.class_of.assign(ring.size(), ConjugacyClasses::kNone);
    cc.transversal.assign(ring.size(), ring.one());
    for (Elem e : idem) {
      if (cc.class_of[e] != ConjugacyClasses::kNone) continue;
      const auto id = static_cast<std::uint32_t>(cc.classes.size());
      std::vector<Elem> orbit{e};
      cc.class_of[e] = id;
      for (Elem unit : u.units) {
        const Elem g = ring.mul(ring.mul(unit, e), u.inverse(unit));
        if (cc.class_of[g] == ConjugacyClasses::kNone) {
          cc.class_of[g] = id;
          cc.transversal[g] = unit;
          orbit.push_back(g);
        }
      }
      std::sort(orbit.begin(), orbit.end());
      cc.classes.push_back(std::move(orbit));
    }
    return cc;
  });
}

ConjugacyCertificate are_conjugate(const FiniteRing& ring, Elem e, Elem f) {
  if (e >= ring.size() || f >= ring.size() || ring.mul(e, e) != e || ring.mul(f, f) != f) {
    throw RingError(ErrorKind::invalid_argument, "are_conjugate expects two idempotents");
  }
  ConjugacyCertificate cert{e, f, std::nullopt};
  if (e == f) {
    cert.witness = ring.one();
    return cert;
  }
  const auto& cc = conjugacy_classes(ring);
  if (cc.class_of[e] != cc.class_of[f]) return cert;
  const auto& u = units(ring);
  // e = t_e r t_e^-1 and f = t_f r t_f^-1 give e = (t_e t_f^-1) f (t_e t_f^-1)^-1.
  const Elem w = ring.mul(cc.transversal[e], u.inverse(cc.transversal[f]));
  if (ring.mul(ring.mul(w, f), u.inverse(w)) != e) {
    throw std::logic_error("conjugacy transversal produced a wrong witness");
  }
  cert.witness = w;
  return cert;
}

AbelianCheck is_abelian(const FiniteRing& ring) {
  AbelianCheck out;
  for (Elem e : idempotents(ring)) {
    for (Elem r = 0; r < ring.size(); ++r) {
      if (ring.mul(e, r) != ring.mul(r, e)) {
        out.abelian = false;
        out.witness = {e, r};
        return out;
      }
    }
  }
  return out;
}

std::optional<std::string> subring_violation(const FiniteRing& ring,
                                             std::span<const Elem> subset) {
  std::vector<bool> in(ring.size(), false);
  for (Elem x : subset) {
    if (x >= ring.size()) return "element out of range";
    in[x] = true;
  }
  if (!in[ring.zero()]) return "does not contain zero";
  if (!in[ring.one()]) return "does not contain one";
  for (Elem a : subset) {
    if (!in[ring.neg(a)]) return "not closed under negation (" + std::to_string(a) + ")";
    for (Elem b : subset) {
      if (!in[ring.add(a, b)]) {
        return "not closed under addition (" + std::to_string(a) + " + " + std::to_string(b) + ")";
      }
      if (!in[ring.mul(a, b)]) {
        return "not closed under multiplication (" + std::to_string(a) + " * " +
               std::to_string(b) + ")";
      }
    }
  }
  return std::nullopt;
}

std::vector<Elem> two_sided_annihilator(const FiniteRing& ring, std::span<const Elem> subring,
                                        std::span<const Elem> subset) {
  if (auto bad = subring_violation(ring, subring)) {
    throw RingError(ErrorKind::invalid_argument, "annihilator needs a unital subring: " + *bad);
  }
  std::vector<Elem> out;
  for (Elem r : subring) {
    bool kills = true;
    for (Elem s : subset) {
      if (ring.mul(r, s) != ring.zero() || ring.mul(s, r) != ring.zero()) {
        kills = false;
        break;
      }
    }
    if (kills) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SplitCheck check_split(const FiniteRing& ring, std::span<const Elem> subring, const Ideal& ideal) {
  SplitCheck out;
  auto fail = [&](std::string clause, std::vector<Elem> witness) {
    out.passed = false;
    out.clause = std::move(clause);
    out.witness = std::move(witness);
    return out;
  };
  std::vector<bool> in(ring.size(), false);
  for (Elem x : subring) {
    if (x >= ring.size()) return fail("subring element out of range", {x});
    in[x] = true;
  }
  if (!in[ring.zero()]) return fail("S does not contain zero", {});
  if (!in[ring.one()]) return fail("S does not contain one", {});
  for (Elem a : subring) {
    for (Elem b : subring) {
      if (!in[ring.add(a, b)]) return fail("S not closed under addition", {a, b});
      if (!in[ring.mul(a, b)]) return fail("S not closed under multiplication", {a, b});
    }
  }
  for (Elem a : subring) {
    if (!in[ring.neg(a)]) return fail("S not closed under negation", {a});
  }
  if (!ideal.ring().same_ring(ring)) return fail("I is not an ideal of T", {});
  for (Elem a : subring) {
    if (a != ring.zero() && ideal.contains(a)) return fail("S and I meet outside zero", {a});
  }
  std::vector<bool> hit(ring.size(), false);
  std::vector<Elem> distinct(subring.begin(), subring.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (Elem s : distinct) {
    for (Elem i : ideal.elements()) {
      const Elem t = ring.add(s, i);
      if (hit[t]) return fail("S + I does not cover T uniquely", {t});
      hit[t] = true;
    }
  }
  for (Elem t = 0; t < ring.size(); ++t) {
    if (!hit[t]) return fail("S + I does not cover T", {t});
  }
  return out;
}

Elem lift_idempotent(const FiniteRing& ring, const Ideal& ideal, Elem a) {
  if (!ideal.ring().same_ring(ring)) {
    throw RingError(ErrorKind::invalid_argument, "ideal belongs to a different ring");
  }
  if (!ideal.contains(ring.sub(ring.mul(a, a), a))) {
    throw RingError(ErrorKind::precondition, "a^2 - a is not in the ideal");
  }
  const auto& u = units(ring);
  for (Elem e : idempotents(ring)) {
    const Elem unit = ring.sub(a, e);
    if (!u.contains(unit)) continue;
    const Elem f =
        ring.mul(ring.mul(unit, ring.sub(ring.one(), e)), u.inverse(unit));
    if (ring.mul(f, f) != f || !ideal.contains(ring.sub(f, a))) {
      throw std::logic_error("lifted element is not an idempotent congruent to a");
    }
    return f;
  }
  throw RingError(ErrorKind::not_clean, "element " + std::to_string(a) + " has no clean decomposition");
}

QuotientRing make_quotient(const Ideal& ideal) {
  return make_quotient(ideal.ring(), ideal.elements());
}

NonUnitalAlgebra algebra_from_ideal(const Ideal& ideal) {
  const auto& ring = ideal.ring();
  const auto& el = ideal.elements();
  const std::uint64_t n = el.size();
  if (el.front() != ring.zero()) {
    throw RingError(ErrorKind::invalid_argument, "algebra_from_ideal needs zero at index 0");
  }
  std::vector<Elem> position(ring.size(), 0);
  for (Elem i = 0; i < n; ++i) position[el[i]] = i;
  std::vector<Elem> add(n * n), mul(n * n), neg(n);
  for (Elem i = 0; i < n; ++i) {
    neg[i] = position[ring.neg(el[i])];
    for (Elem j = 0; j < n; ++j) {
      add[i * n + j] = position[ring.add(el[i], el[j])];
      mul[i * n + j] = position[ring.mul(el[i], el[j])];
    }
  }
  return NonUnitalAlgebra(n, std::move(add), std::move(mul), std::move(neg),
                          "ideal of " + ring.label());
}

}  // namespace cleanring
