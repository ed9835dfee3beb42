#include "cleanring_cli/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>

#include "cleanring/axioms.hpp"
#include "cleanring/constructors.hpp"
#include "cleanring/gf2_matrix.hpp"
#include "cleanring/spec_dsl.hpp"
#include "cleanring/structure.hpp"
#include "cleanring_cli/element_literal.hpp"
#include "cleanring_cli/report.hpp"

namespace cleanring::cli {

using nlohmann::json;

namespace {

// Rings, reports and per-element classifications shared across cases.
class Workbench {
 public:
  explicit Workbench(const SuiteOptions& options) : options_(options) {}

  const FiniteRing& ring(const std::string& spec) { return entry(spec).ring; }

  const RingReport& report(const std::string& spec) {
    auto& e = entry(spec);
    if (!e.report) e.report = std::make_unique<RingReport>(classify_ring(e.ring, options_.classify));
    return *e.report;
  }

  const std::vector<ElementClassification>& elements(const std::string& spec) {
    auto& e = entry(spec);
    if (!e.elements) {
      e.elements = std::make_unique<std::vector<ElementClassification>>();
      for (Elem a = 0; a < e.ring.size(); ++a) e.elements->push_back(classify_element(e.ring, a));
    }
    return *e.elements;
  }

  RingReport classify(const FiniteRing& ring) { return classify_ring(ring, options_.classify); }
  const Limits& limits() const { return options_.limits; }

  std::vector<std::string> fleet;

 private:
  struct Entry {
    FiniteRing ring;
    std::unique_ptr<RingReport> report;
    std::unique_ptr<std::vector<ElementClassification>> elements;
  };

  Entry& entry(const std::string& spec) {
    auto it = entries_.find(spec);
    if (it == entries_.end()) {
      it = entries_.emplace(spec, Entry{build_ring(spec, options_.limits), nullptr, nullptr}).first;
    }
    return it->second;
  }

  const SuiteOptions& options_;
  std::map<std::string, Entry> entries_;
};

struct Outcome {
  json actual;
  bool extra_ok = true;  // side conditions beyond actual == expected
  std::string detail;
  json witness;  // null when there is nothing to show
};

json decomposition_pair_json(const FiniteRing& ring, const WitnessPair& p) {
  return json::array({decomposition_to_json(ring, p.first), decomposition_to_json(ring, p.second)});
}

std::string subject(const json& x) { return x.value("spec", std::string()); }

Outcome check_flag(Workbench& wb, const json& x) {
  const std::string spec = x.at("spec");
  const std::string name = x.at("flag");
  const auto& ring = wb.ring(spec);
  if (name == "boolean") return {is_boolean(ring), true, "", nullptr};
  const auto& report = wb.report(spec);
  if (name == "abelian") {
    Outcome o{report.abelian, true, "", nullptr};
    if (report.abelian_witness) {
      o.witness = {{"spec", spec},
                   {"flag", "abelian"},
                   {"idempotent", ring.render(report.abelian_witness->first)},
                   {"noncommuting", ring.render(report.abelian_witness->second)}};
    }
    return o;
  }
  const auto flag = parse_flag(name);
  if (!flag) throw std::invalid_argument("unknown flag " + name);
  Outcome o{report.flags[*flag], report.uniqueness_consistent, "", nullptr};
  if (!report.uniqueness_consistent) o.detail = "uniquely flags disagree with conjugate and abelian";
  if (const auto* w = report.witness(*flag)) {
    o.witness = {{"spec", spec}, {"flag", name}, {"element", ring.render(w->element)}};
    if (w->pair) o.witness["decompositions"] = decomposition_pair_json(ring, *w->pair);
  }
  return o;
}

Outcome check_idempotent_count(Workbench& wb, const json& x) {
  return {idempotents(wb.ring(x.at("spec"))).size(), true, "", nullptr};
}

Outcome check_nilpotent(Workbench& wb, const json& x) {
  const auto& ring = wb.ring(x.at("spec"));
  const Elem a = element_from_json(ring, x.at("element"));
  return {nilpotency_index(ring, a).has_value(), true, "", nullptr};
}

DecompositionKind kind_from(const std::string& name) {
  if (name == "clean") return DecompositionKind::clean;
  if (name == "nil") return DecompositionKind::nil_clean;
  if (name == "j") return DecompositionKind::j_clean;
  throw std::invalid_argument("unknown decomposition kind " + name);
}

Outcome check_decomposition_pair(Workbench& wb, const json& x) {
  const std::string spec = x.at("spec");
  const auto& ring = wb.ring(spec);
  const auto kind = kind_from(x.at("kind"));
  const Elem a = element_from_json(ring, x.at("element"));
  const auto all = decompositions(ring, a, kind);
  auto read = [&](const json& d) {
    return Decomposition{a, element_from_json(ring, d.at("e")), element_from_json(ring, d.at("t")),
                         kind};
  };
  const Decomposition first = read(x.at("first"));
  const Decomposition second = read(x.at("second"));
  Outcome o;
  for (const auto& d : {first, second}) {
    if (std::find(all.begin(), all.end(), d) == all.end()) {
      o.extra_ok = false;
      o.detail += ring.render(a) + " = " + ring.render(d.e) + " + " + ring.render(d.t) +
                  " is not a " + std::string(to_string(kind)) + " decomposition; ";
    }
  }
  const auto cert = are_conjugate(ring, first.e, second.e);
  o.actual = cert.conjugate();
  o.witness = {{"spec", spec},
               {"kind", std::string(to_string(kind))},
               {"element", ring.render(a)},
               {"decompositions", decomposition_pair_json(ring, {first, second})},
               {"conjugate", cert.conjugate()}};
  if (cert.witness) o.witness["unit"] = ring.render(*cert.witness);
  o.detail += std::to_string(all.size()) + " " + std::string(to_string(kind)) +
              " decompositions of the element";
  return o;
}

Outcome check_transfer(Workbench& wb, const json& x) {
  const auto flag = parse_flag(x.at("flag").get<std::string>());
  if (!flag) throw std::invalid_argument("unknown flag");
  const bool over = wb.report(x.at("spec")).flags[*flag];
  const bool base = wb.report(x.at("base")).flags[*flag];
  Outcome o{over, over == base, "", nullptr};
  o.detail = "base " + x.at("base").get<std::string>() + " has " + std::string(to_string(*flag)) +
             "=" + (base ? "true" : "false");
  return o;
}

Outcome check_product_law(Workbench& wb, const json& x) {
  Outcome o{true, true, "", nullptr};
  std::size_t pairs = 0;
  for (const auto& p : x.at("pairs")) {
    const std::string a = p.at(0);
    const std::string b = p.at(1);
    const std::string product = "(" + a + ") x (" + b + ")";
    const auto& ra = wb.report(a);
    const auto& rb = wb.report(b);
    const auto& rp = wb.report(product);
    ++pairs;
    for (Flag f : kAllFlags) {
      if (rp.flags[f] != (ra.flags[f] && rb.flags[f])) {
        o.actual = false;
        o.witness = {{"product", product}, {"flag", std::string(to_string(f))}};
        o.detail = std::string(to_string(f)) + " of " + product + " is not the conjunction";
        return o;
      }
    }
  }
  o.detail = "all 7 flags multiplicative on " + std::to_string(pairs) + " pairs";
  return o;
}

Ideal named_ideal(const FiniteRing& ring, const std::string& name) {
  if (name == "J") return jacobson_radical(ring);
  if (name == "2R") {
    const Elem two = ring.times(2, ring.one());
    return ideal_closure(ring, std::vector<Elem>{two});
  }
  throw std::invalid_argument("unknown ideal " + name);
}

Outcome check_quotient_transfer(Workbench& wb, const json& x) {
  const std::string spec = x.at("spec");
  const auto flag = parse_flag(x.at("flag").get<std::string>());
  if (!flag) throw std::invalid_argument("unknown flag");
  const auto& ring = wb.ring(spec);
  const Ideal ideal = named_ideal(ring, x.at("ideal"));
  const auto q = make_quotient(ideal);
  const auto qreport = wb.classify(q.ring);
  const bool upstairs = wb.report(spec).flags[*flag];
  Outcome o{upstairs, true, "", nullptr};
  std::ostringstream detail;
  detail << "|I| = " << ideal.size() << (ideal.is_nil() ? " (nil)" : " (not nil)") << ", |R/I| = "
         << q.ring.size() << ", R/I has " << to_string(*flag) << "="
         << (qreport.flags[*flag] ? "true" : "false");
  if (!ideal.is_nil()) o.extra_ok = false;
  if (qreport.flags[*flag] != upstairs) o.extra_ok = false;
  if (x.contains("quotient_size") && q.ring.size() != x.at("quotient_size").get<std::uint64_t>()) {
    o.extra_ok = false;
    detail << "; expected quotient size " << x.at("quotient_size");
  }
  if (x.contains("compare")) {
    const auto& cmp = wb.report(x.at("compare"));
    if (cmp.size != q.ring.size() || cmp.flags != qreport.flags || cmp.abelian != qreport.abelian) {
      o.extra_ok = false;
      detail << "; quotient verdicts differ from " << x.at("compare").get<std::string>();
    }
  }
  o.detail = detail.str();
  return o;
}

struct RadicalQuotient {
  Ideal radical;
  QuotientRing quotient;
  bool boolean;
};

RadicalQuotient radical_quotient(const FiniteRing& ring) {
  Ideal j = jacobson_radical(ring);
  auto q = make_quotient(j);
  const bool boolean = is_boolean(q.ring);
  return {std::move(j), std::move(q), boolean};
}

Outcome check_unc_characterization(Workbench& wb, const json& x) {
  const std::string spec = x.at("spec");
  const auto& ring = wb.ring(spec);
  const bool unc = wb.report(spec).flags[Flag::uniquely_nil_clean];
  const auto rq = radical_quotient(ring);
  // Unique lifting: every idempotent of R/J has exactly one idempotent preimage.
  std::vector<std::size_t> lifts(rq.quotient.ring.size(), 0);
  for (Elem e : idempotents(ring)) ++lifts[rq.quotient.projection[e]];
  bool unique = true;
  for (Elem f : idempotents(rq.quotient.ring)) unique = unique && lifts[f] == 1;
  const bool condition = rq.boolean && rq.radical.is_nil() && unique;
  Outcome o{unc, unc == condition, "", nullptr};
  o.detail = std::string("R/J Boolean=") + (rq.boolean ? "true" : "false") +
             ", J nil=" + (rq.radical.is_nil() ? "true" : "false") +
             ", unique lifting=" + (unique ? "true" : "false");
  return o;
}

Outcome check_commutative_equivalences(Workbench& wb, const json& x) {
  const std::string spec = x.at("spec");
  const auto& ring = wb.ring(spec);
  bool commutative = true;
  for (Elem a = 0; commutative && a < ring.size(); ++a) {
    for (Elem b = a + 1; b < ring.size(); ++b) {
      if (ring.mul(a, b) != ring.mul(b, a)) {
        commutative = false;
        break;
      }
    }
  }
  const auto& report = wb.report(spec);
  const bool nc = report.flags[Flag::nil_clean];
  const bool unc = report.flags[Flag::uniquely_nil_clean];
  const auto rq = radical_quotient(ring);
  const bool condition = rq.boolean && rq.radical.is_nil();
  Outcome o{nc, commutative && nc == unc && unc == condition, "", nullptr};
  o.detail = std::string("commutative=") + (commutative ? "true" : "false") +
             ", uniquely_nil_clean=" + (unc ? "true" : "false") +
             ", R/J Boolean and J nil=" + (condition ? "true" : "false");
  return o;
}

Outcome check_skew_abelian(Workbench& wb, const json& x) {
  const std::string spec = x.at("spec");
  const SpecAst ast = parse_ring_spec(spec);
  if (ast.kind != SpecAst::Kind::trunc_skew) {
    throw std::invalid_argument(spec + " is not a truncated skew polynomial ring");
  }
  const auto& t = wb.ring(spec);
  const auto& base = wb.ring(render(ast.children.front()));
  const Endomorphism sigma = ast.sigma && ast.sigma->kind == SigmaSpec::Kind::swap
                                 ? swap_endomorphism(base, ast.sigma->i - 1, ast.sigma->j - 1)
                                 : identity_endomorphism(base);
  const auto& codec = t.codec();
  std::vector<Elem> digits(codec.digits(), base.zero());
  auto constant = [&](Elem c) {
    digits[0] = c;
    return codec.encode(digits);
  };
  std::vector<Elem> constants;
  std::vector<bool> is_constant(t.size(), false);
  for (Elem c = 0; c < base.size(); ++c) {
    constants.push_back(constant(c));
    is_constant[constants.back()] = true;
  }
  std::vector<Elem> positive;  // zero constant term: the ideal T x
  for (Elem a = 0; a < t.size(); ++a) {
    if (codec.digit(a, 0) == base.zero()) positive.push_back(a);
  }
  const Ideal ideal = make_ideal(t, positive);
  const auto split = check_split(t, constants, ideal);
  const auto ann = two_sided_annihilator(t, constants, ideal.elements());

  const bool c1 = is_abelian(t).abelian;
  bool fixed = true;
  for (Elem e : idempotents(base)) fixed = fixed && sigma(e) == e;
  const bool c2 = is_abelian(base).abelian && fixed;
  bool trivial = true;
  for (Elem e : idempotents(t)) trivial = trivial && is_constant[e];
  const bool c3 = trivial && fixed;
  bool c4 = true;
  for (Elem e : idempotents(base)) {
    for (Elem s : ideal.elements()) {
      c4 = c4 && t.mul(constant(e), s) == t.mul(s, constant(e));
    }
  }
  Outcome o{c1, split.passed && ideal.is_nil() && ann.size() == 1 && c1 == c2 && c2 == c3 &&
                    c3 == c4,
            "", nullptr};
  std::ostringstream d;
  d << "split " << (split.passed ? "ok" : "fails: " + split.clause) << ", I nil="
    << (ideal.is_nil() ? "true" : "false") << ", |ann(I)|=" << ann.size()
    << "; abelian=" << c1 << ", base idempotents central and fixed=" << c2
    << ", idempotents trivial and fixed=" << c3 << ", commute with I=" << c4;
  o.detail = d.str();
  if (!fixed) {
    for (Elem e : idempotents(base)) {
      if (sigma(e) != e) {
        o.witness = {{"spec", spec},
                     {"idempotent", base.render(e)},
                     {"sigma", base.render(sigma(e))}};
        break;
      }
    }
  }
  return o;
}

Outcome check_block_witness(Workbench& wb, const json& x) {
  const std::size_t n = x.at("n");
  if (n != 4) throw std::invalid_argument("block witness is implemented for n = 4");
  using gf2::BitMatrix;
  const BitMatrix a3{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
  const BitMatrix n3{{0, 1, 1}, {0, 0, 1}, {0, 0, 0}};
  const BitMatrix j3{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  const BitMatrix l3{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}};
  const BitMatrix z1 = BitMatrix::zero(1);
  const BitMatrix a = gf2::block_diagonal(a3, z1);
  const BitMatrix e = gf2::block_diagonal(BitMatrix::identity(3), z1);
  const BitMatrix l = gf2::block_diagonal(n3, z1);
  const BitMatrix f = gf2::block_diagonal(j3, z1);
  const BitMatrix m = gf2::block_diagonal(l3, z1);

  const auto start = std::chrono::steady_clock::now();
  const auto group = gf2::general_linear_group(4);
  const auto conjugator = gf2::find_conjugator(e, f, group);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  // The same decompositions evaluated in the ring M(4,F2).
  const FiniteRing m4 = make_matrix_ring(make_zmod(2), 4, wb.limits());
  const auto ei = static_cast<Elem>(e.to_index());
  const auto fi = static_cast<Elem>(f.to_index());
  const auto li = static_cast<Elem>(l.to_index());
  const auto mi = static_cast<Elem>(m.to_index());
  const auto ai = static_cast<Elem>(a.to_index());
  const bool in_ring = m4.mul(ei, ei) == ei && m4.mul(fi, fi) == fi &&
                       nilpotency_index(m4, li) && nilpotency_index(m4, mi) &&
                       m4.add(ei, li) == ai && m4.add(fi, mi) == ai;

  const bool valid = e.idempotent() && f.idempotent() && l.nilpotent() && m.nilpotent() &&
                     e + l == a && f + m == a && in_ring;
  Outcome o{conjugator.has_value(), valid && group.size() == 20160, "", nullptr};
  std::ostringstream d;
  d << "rank(e)=" << e.rank() << ", rank(f)=" << f.rank() << ", searched " << group.size()
    << " units of GL(4,F2) in " << std::fixed << std::setprecision(1) << ms << " ms"
    << (valid ? "" : "; decompositions invalid");
  o.detail = d.str();
  o.witness = {{"spec", "M(4,F2)"},
               {"element", m4.render(ai)},
               {"decompositions",
                json::array({{{"e", m4.render(ei)}, {"t", m4.render(li)}},
                             {{"e", m4.render(fi)}, {"t", m4.render(mi)}}})},
               {"conjugate", conjugator.has_value()}};
  return o;
}

// Rings built from a finite nil algebra A: A, A*, M2(A*).
struct KotheInstruments {
  NonUnitalAlgebra algebra;
  FiniteRing adjoined;
  FiniteRing matrices;
};

KotheInstruments kothe_instruments(const std::string& name, const Limits& limits) {
  NonUnitalAlgebra a = name == "strictly_upper_3"   ? make_strictly_upper_algebra(3)
                       : name == "nil_power_3" ? make_nil_power_algebra(3)
                                               : throw std::invalid_argument("unknown algebra " + name);
  FiniteRing star = adjoin_unity(a);
  FiniteRing m2 = make_matrix_ring(star, 2, limits);
  return {std::move(a), std::move(star), std::move(m2)};
}

Outcome check_kothe(Workbench& wb, const json& x,
                    std::map<std::string, std::unique_ptr<KotheInstruments>>& cache,
                    std::map<std::string, RingReport>& reports) {
  const std::string name = x.at("algebra");
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<KotheInstruments>(kothe_instruments(name, wb.limits()));
  const auto& k = *slot;
  auto report = [&](const FiniteRing& r) -> const RingReport& {
    auto it = reports.find(r.label());
    if (it == reports.end()) it = reports.emplace(r.label(), wb.classify(r)).first;
    return it->second;
  };
  // Entries of M2(A*) lying in A are the digits with eps = 0, i.e. even indices.
  auto in_matrix_algebra = [&](Elem a) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (k.matrices.codec().digit(a, i) % 2 != 0) return false;
    }
    return true;
  };
  const std::string claim = x.at("claim");
  Outcome o;
  if (claim == "adjoined_idempotents_trivial") {
    const auto& idem = idempotents(k.adjoined);
    o.actual = idem == std::vector<Elem>{k.adjoined.zero(), k.adjoined.one()};
    o.detail = k.adjoined.label() + " has " + std::to_string(k.adjoined.size()) + " elements and " +
               std::to_string(idem.size()) + " idempotents";
  } else if (claim == "adjoined_uniquely_nil_clean") {
    o.actual = report(k.adjoined).flags[Flag::uniquely_nil_clean];
  } else if (claim == "matrix_algebra_nil") {
    const auto& nil = nilpotent_flags(k.matrices);
    std::size_t count = 0;
    bool all = true;
    for (Elem a = 0; a < k.matrices.size(); ++a) {
      if (!in_matrix_algebra(a)) continue;
      ++count;
      if (!nil[a]) {
        all = false;
        o.witness = {{"spec", k.matrices.label()}, {"element", k.matrices.render(a)}};
        break;
      }
    }
    o.actual = all;
    o.detail = std::to_string(count) + " elements of M2(" + k.algebra.label() + ") checked";
  } else if (claim == "matrix_radical_is_matrix_algebra") {
    const Ideal j = jacobson_radical(k.matrices);
    std::size_t count = 0;
    bool equal = true;
    for (Elem a = 0; a < k.matrices.size(); ++a) {
      const bool inside = in_matrix_algebra(a);
      count += inside;
      equal = equal && inside == j.contains(a);
    }
    o.actual = equal;
    o.detail = "|J(M2(A*))| = " + std::to_string(j.size()) + ", |M2(A)| = " + std::to_string(count);
  } else if (claim == "matrix_ring_nil_clean" || claim == "matrix_ring_conjugate_nil_clean") {
    const auto& r = report(k.matrices);
    const Flag f =
        claim == "matrix_ring_nil_clean" ? Flag::nil_clean : Flag::conjugate_nil_clean;
    o.actual = r.flags[f];
    std::ostringstream d;
    d << k.matrices.label() << ": " << r.size << " elements, " << r.idempotent_count
      << " idempotents, " << r.unit_count << " units, classified in " << std::fixed
      << std::setprecision(0) << r.timing.structure_ms + r.timing.classification_ms << " ms";
    o.detail = d.str();
  } else {
    throw std::invalid_argument("unknown claim " + claim);
  }
  return o;
}

Outcome check_fleet_property(Workbench& wb, const json& x) {
  const std::string property = x.at("property");
  const std::uint64_t max_size = x.value("max_size", std::uint64_t{4096});
  Outcome o{true, true, "", nullptr};
  std::size_t rings = 0;
  std::size_t instances = 0;
  auto fail = [&](json witness, std::string detail) {
    o.actual = false;
    o.witness = std::move(witness);
    o.detail = std::move(detail);
  };
  for (const auto& spec : wb.fleet) {
    const auto& ring = wb.ring(spec);
    if (ring.size() > max_size) continue;
    ++rings;
    if (property == "close_idempotents_conjugate") {
      const auto& idem = idempotents(ring);
      const auto& nil = nilpotent_flags(ring);
      const Ideal j = jacobson_radical(ring);
      for (std::size_t p = 0; p < idem.size(); ++p) {
        for (std::size_t q = p + 1; q < idem.size(); ++q) {
          const Elem d = ring.sub(idem[p], idem[q]);
          if (!nil[d] && !j.contains(d)) continue;
          ++instances;
          if (!are_conjugate(ring, idem[p], idem[q]).conjugate()) {
            fail({{"spec", spec}, {"e", ring.render(idem[p])}, {"f", ring.render(idem[q])}},
                 "close idempotents not conjugate in " + spec);
            return o;
          }
        }
      }
    } else if (property == "j_clean_implies_conjugate_clean") {
      const auto& r = wb.report(spec);
      if (!r.flags[Flag::j_clean]) continue;
      ++instances;
      if (!r.flags[Flag::conjugate_clean]) {
        fail({{"spec", spec}}, spec + " is J-clean but not conjugate clean");
        return o;
      }
    } else if (property == "j_clean_elements_are_clean" ||
               property == "nil_clean_negation_clean") {
      const auto& els = wb.elements(spec);
      for (const auto& c : els) {
        if (property == "j_clean_elements_are_clean") {
          if (!c.flags[Flag::j_clean]) continue;
          ++instances;
          if (!c.flags[Flag::clean]) {
            fail({{"spec", spec}, {"element", ring.render(c.element)}},
                 "J-clean element is not clean in " + spec);
            return o;
          }
        } else {
          if (!c.flags[Flag::nil_clean]) continue;
          ++instances;
          const Elem neg = ring.neg(c.element);
          if (!els[neg].flags[Flag::clean]) {
            fail({{"spec", spec}, {"element", ring.render(c.element)}},
                 "negation of a nil clean element is not clean in " + spec);
            return o;
          }
        }
      }
    } else if (property == "nil_clean_two_nilpotent" || property == "nil_clean_radical_nil") {
      if (!wb.report(spec).flags[Flag::nil_clean]) continue;
      ++instances;
      if (property == "nil_clean_two_nilpotent") {
        const Elem two = ring.times(2, ring.one());
        const Ideal two_r = ideal_closure(ring, std::vector<Elem>{two});
        if (!nilpotency_index(ring, two) || !two_r.is_nil()) {
          fail({{"spec", spec}}, "2 is not nilpotent in nil clean " + spec);
          return o;
        }
      } else if (!jacobson_radical(ring).is_nil()) {
        fail({{"spec", spec}}, "J(R) is not nil in nil clean " + spec);
        return o;
      }
    } else {
      throw std::invalid_argument("unknown fleet property " + property);
    }
  }
  o.detail = std::to_string(instances) + " instances over " + std::to_string(rings) + " rings";
  return o;
}

std::string describe(const json& x) {
  const std::string check = x.at("check");
  if (check == "flag") return x.at("flag").get<std::string>() + "(" + subject(x) + ")";
  if (check == "transfer") {
    return x.at("flag").get<std::string>() + "(" + subject(x) + ") = " +
           x.at("flag").get<std::string>() + "(" + x.at("base").get<std::string>() + ")";
  }
  if (check == "quotient_transfer") {
    return x.at("flag").get<std::string>() + "(" + subject(x) + ") = " +
           x.at("flag").get<std::string>() + "(" + subject(x) + " / " +
           x.at("ideal").get<std::string>() + ")";
  }
  if (check == "fleet_property") return x.at("property").get<std::string>() + " over the fleet";
  if (check == "kothe") {
    return x.at("claim").get<std::string>() + " for " + x.at("algebra").get<std::string>();
  }
  if (check == "block_witness") return "conjugate(e, f) in M(4,F2)";
  if (check == "decomposition_pair") return "conjugate(e, f) for the displayed pair in " + subject(x);
  if (check == "product_law") return "product law";
  if (check == "nilpotent") return "nilpotent(" + x.at("element").dump() + " in " + subject(x) + ")";
  return check + "(" + subject(x) + ")";
}

}  // namespace

std::vector<std::string> fleet_specs(const json& fixture) {
  return fixture.at("fleet").get<std::vector<std::string>>();
}

std::vector<CaseResult> run_verification(const json& fixture, const SuiteOptions& options) {
  Workbench wb(options);
  wb.fleet = fleet_specs(fixture);
  std::map<std::string, std::unique_ptr<KotheInstruments>> kothe_cache;
  std::map<std::string, RingReport> kothe_reports;

  std::vector<json> cases;
  for (const auto& c : fixture.at("cases")) {
    if (c.at("id").get<std::string>().find(options.filter) != std::string::npos) cases.push_back(c);
  }
  std::sort(cases.begin(), cases.end(),
            [](const json& a, const json& b) { return a.at("id") < b.at("id"); });

  std::vector<CaseResult> results;
  for (const auto& c : cases) {
    const auto start = std::chrono::steady_clock::now();
    CaseResult result;
    result.id = c.at("id");
    result.statement = c.at("statement");
    for (const auto& x : c.at("expectations")) {
      CheckResult check;
      check.description = describe(x);
      check.tag = x.at("tag");
      check.expected = x.at("expected");
      try {
        const std::string kind = x.at("check");
        Outcome o;
        if (kind == "flag") o = check_flag(wb, x);
        else if (kind == "idempotent_count") o = check_idempotent_count(wb, x);
        else if (kind == "nilpotent") o = check_nilpotent(wb, x);
        else if (kind == "decomposition_pair") o = check_decomposition_pair(wb, x);
        else if (kind == "transfer") o = check_transfer(wb, x);
        else if (kind == "product_law") o = check_product_law(wb, x);
        else if (kind == "quotient_transfer") o = check_quotient_transfer(wb, x);
        else if (kind == "uniquely_nil_clean_characterization") o = check_unc_characterization(wb, x);
        else if (kind == "commutative_equivalences") o = check_commutative_equivalences(wb, x);
        else if (kind == "skew_abelian_criterion") o = check_skew_abelian(wb, x);
        else if (kind == "block_witness") o = check_block_witness(wb, x);
        else if (kind == "kothe") o = check_kothe(wb, x, kothe_cache, kothe_reports);
        else if (kind == "fleet_property") o = check_fleet_property(wb, x);
        else throw std::invalid_argument("unknown check " + kind);
        check.actual = o.actual;
        check.passed = o.actual == check.expected && o.extra_ok;
        check.detail = o.detail;
        if (!o.witness.is_null()) result.witnesses.push_back(o.witness);
      } catch (const std::exception& e) {
        check.actual = nullptr;
        check.passed = false;
        check.detail = std::string("error: ") + e.what();
      }
      result.passed = result.passed && check.passed;
      result.checks.push_back(std::move(check));
    }
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(result));
  }
  return results;
}

json case_to_json(const CaseResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"description", c.description},
                      {"tag", c.tag},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"passed", c.passed},
                      {"detail", c.detail}});
  }
  return {{"id", r.id},
          {"statement", r.statement},
          {"passed", r.passed},
          {"checks", checks},
          {"witnesses", r.witnesses},
          {"elapsed_ms", r.elapsed_ms}};
}

std::string case_to_text(const CaseResult& r) {
  std::ostringstream out;
  std::size_t ok = 0;
  for (const auto& c : r.checks) ok += c.passed;
  out << (r.passed ? "PASS " : "FAIL ") << r.id << "  (" << ok << "/" << r.checks.size()
      << " checks, " << std::fixed << std::setprecision(0) << r.elapsed_ms << " ms)\n";
  out << "     " << r.statement << '\n';
  for (const auto& c : r.checks) {
    out << "     " << (c.passed ? "ok   " : "FAIL ") << std::left << std::setw(8) << c.tag
        << c.description << " = " << c.actual.dump();
    if (!c.passed) out << " (expected " << c.expected.dump() << ")";
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << '\n';
  }
  for (const auto& w : r.witnesses) out << "     witness " << w.dump() << '\n';
  return out.str();
}

}  // namespace cleanring::cli
