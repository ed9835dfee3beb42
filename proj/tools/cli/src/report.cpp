#include "cleanring_cli/report.hpp"

#include <iomanip>
#include <sstream>

namespace cleanring::cli {

namespace {

std::string plural(std::uint64_t n, const char* one, const char* many) {
  return std::to_string(n) + " " + (n == 1 ? one : many);
}

std::string decomposition_text(const FiniteRing& ring, const Decomposition& d) {
  return ring.render(d.a) + " = " + ring.render(d.e) + " + " + ring.render(d.t);
}

std::string ms(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(1) << v << " ms";
  return out.str();
}

}  // namespace

nlohmann::json decomposition_to_json(const FiniteRing& ring, const Decomposition& d) {
  return {{"e", ring.render(d.e)}, {"e_index", d.e}, {"t", ring.render(d.t)}, {"t_index", d.t}};
}

nlohmann::json report_to_json(const FiniteRing& ring, const RingReport& report,
                              double construction_ms) {
  nlohmann::json flags = nlohmann::json::object();
  for (Flag f : kAllFlags) flags[std::string(to_string(f))] = report.flags[f];
  flags["abelian"] = report.abelian;

  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : report.witnesses) {
    nlohmann::json item = {{"flag", std::string(to_string(w.flag))},
                           {"element", ring.render(w.element)},
                           {"element_index", w.element},
                           {"decompositions", nlohmann::json::array()}};
    if (w.pair) {
      item["decompositions"].push_back(decomposition_to_json(ring, w.pair->first));
      item["decompositions"].push_back(decomposition_to_json(ring, w.pair->second));
    }
    witnesses.push_back(std::move(item));
  }
  if (report.abelian_witness) {
    const auto [e, r] = *report.abelian_witness;
    witnesses.push_back({{"flag", "abelian"},
                         {"element", ring.render(e)},
                         {"element_index", e},
                         {"decompositions", nlohmann::json::array()},
                         {"noncommuting", {{"element", ring.render(r)}, {"element_index", r}}}});
  }

  nlohmann::json radical = {{"size", report.radical.size}, {"nil", report.radical.nil}};
  radical["class"] = report.radical.nilpotency_class
                         ? nlohmann::json(*report.radical.nilpotency_class)
                         : nlohmann::json(nullptr);

  return {{"spec", report.label},
          {"size", report.size},
          {"flags", flags},
          {"radical", radical},
          {"witnesses", witnesses},
          {"counts",
           {{"idempotents", report.idempotent_count},
            {"units", report.unit_count},
            {"conjugacy_classes", report.conjugacy_class_count}}},
          {"consistent", report.uniqueness_consistent},
          {"timing",
           {{"construction_ms", construction_ms},
            {"structure_ms", report.timing.structure_ms},
            {"classification_ms", report.timing.classification_ms}}}};
}

std::string report_to_text(const FiniteRing& ring, const RingReport& report,
                           double construction_ms) {
  std::ostringstream out;
  out << "ring " << report.label << " (" << plural(report.size, "element", "elements") << ")\n";
  for (Flag f : kAllFlags) {
    out << "  " << std::left << std::setw(20) << to_string(f) << std::setw(6)
        << (report.flags[f] ? "true" : "false");
    if (const auto* w = report.witness(f)) {
      out << " at " << ring.render(w->element);
      if (w->pair) {
        out << ": " << decomposition_text(ring, w->pair->first) << " and "
            << ring.render(w->pair->second.e) << " + " << ring.render(w->pair->second.t);
      }
    }
    out << '\n';
  }
  out << "  " << std::left << std::setw(20) << "abelian" << std::setw(6)
      << (report.abelian ? "true" : "false");
  if (report.abelian_witness) {
    out << " at " << ring.render(report.abelian_witness->first) << " vs "
        << ring.render(report.abelian_witness->second);
  }
  out << '\n';
  out << "J: " << plural(report.radical.size, "element", "elements");
  if (!report.radical.nil) {
    out << ", not nil";
  } else if (report.radical.nilpotency_class) {
    out << ", nilpotent of class " << *report.radical.nilpotency_class;
  } else {
    out << ", nil";
  }
  out << '\n';
  out << plural(report.idempotent_count, "idempotent", "idempotents") << " in "
      << plural(report.conjugacy_class_count, "conjugacy class", "conjugacy classes") << ", "
      << plural(report.unit_count, "unit", "units") << '\n';
  if (!report.uniqueness_consistent) {
    out << "warning: uniquely flags disagree with conjugate and abelian\n";
  }
  out << "timing: construction " << ms(construction_ms) << ", structure "
      << ms(report.timing.structure_ms) << ", classification "
      << ms(report.timing.classification_ms) << '\n';
  return out.str();
}

std::string radical_line(const Ideal& radical) {
  std::string line = "J: " + plural(radical.size(), "element", "elements");
  if (!radical.is_nil()) return line + ", not nil";
  if (auto k = radical.nilpotency_class()) return line + ", nilpotent of class " + std::to_string(*k);
  return line + ", nil";
}

}  // namespace cleanring::cli
