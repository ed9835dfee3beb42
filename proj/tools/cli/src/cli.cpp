#include "cleanring_cli/cli.hpp"

#include <charconv>
#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cleanring/cleanness.hpp"
#include "cleanring/spec_dsl.hpp"
#include "cleanring/structure.hpp"
#include "cleanring_cli/element_literal.hpp"
#include "cleanring_cli/report.hpp"
#include "cleanring_cli/verification.hpp"

namespace cleanring::cli {

using nlohmann::json;

std::optional<std::uint64_t> parse_cap(std::string_view text) {
  auto number = [](std::string_view s) -> std::optional<std::uint64_t> {
    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
  };
  std::optional<std::uint64_t> cap;
  if (const auto caret = text.find('^'); caret != std::string_view::npos) {
    if (number(text.substr(0, caret)) != std::uint64_t{2}) return std::nullopt;
    const auto k = number(text.substr(caret + 1));
    if (!k || *k > 32) return std::nullopt;
    cap = std::uint64_t{1} << *k;
  } else {
    cap = number(text);
  }
  if (!cap || *cap < 1 || *cap > kMaxSizeCap) return std::nullopt;
  return cap;
}

namespace {

struct Globals {
  bool json = false;
  std::string cap;
  unsigned threads = 0;
};

double since_ms(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}

std::string plural(std::uint64_t n, const char* one, const char* many) {
  return std::to_string(n) + " " + (n == 1 ? one : many);
}

// Prints the caret diagnostic for a spec error.
void spec_error(std::ostream& err, const std::string& spec, const std::string& message,
                std::size_t begin, std::size_t end, const std::string& expected = {}) {
  err << "error: " << message << '\n' << "  " << spec << '\n' << "  " << std::string(begin, ' ')
      << std::string(std::max<std::size_t>(1, end > begin ? end - begin : 1), '^') << '\n';
  if (!expected.empty()) err << "  expected " << expected << '\n';
}

constexpr std::size_t kListLimit = 64;

class Runner {
 public:
  Runner(const Globals& g, std::ostream& out, std::ostream& err, Limits limits)
      : g_(g), out_(out), err_(err), limits_(limits) {}

  int classify(const std::string& spec) {
    return guarded(spec, [&] {
      const auto start = std::chrono::steady_clock::now();
      const FiniteRing ring = build_ring(spec, limits_);
      const double build_ms = since_ms(start);
      const auto report = classify_ring(ring, classify_options());
      if (g_.json) {
        out_ << report_to_json(ring, report, build_ms).dump(2) << '\n';
      } else {
        out_ << report_to_text(ring, report, build_ms);
      }
      return kExitOk;
    });
  }

  int decompose(const std::string& spec, const std::string& literal, const std::string& kind) {
    return guarded(spec, [&] {
      const FiniteRing ring = build_ring(spec, limits_);
      Elem a = 0;
      try {
        a = parse_element(ring, literal);
      } catch (const LiteralError& e) {
        err_ << "error: " << e.what() << '\n';
        return kExitUsage;
      }
      std::vector<DecompositionKind> kinds;
      if (kind == "clean" || kind == "all") kinds.push_back(DecompositionKind::clean);
      if (kind == "nil" || kind == "all") kinds.push_back(DecompositionKind::nil_clean);
      if (kind == "j" || kind == "all") kinds.push_back(DecompositionKind::j_clean);
      const auto& cc = conjugacy_classes(ring);
      json doc = {{"spec", ring.label()},
                  {"element", ring.render(a)},
                  {"element_index", a},
                  {"decompositions", json::object()}};
      for (DecompositionKind k : kinds) {
        const auto ds = decompositions(ring, a, k);
        json list = json::array();
        if (!g_.json) out_ << to_string(k) << ": " << plural(ds.size(), "decomposition", "decompositions") << '\n';
        for (const auto& d : ds) {
          const auto cls = cc.class_of[d.e];
          json item = decomposition_to_json(ring, d);
          item["class"] = cls;
          list.push_back(std::move(item));
          if (!g_.json) {
            out_ << "  " << ring.render(d.a) << " = " << ring.render(d.e) << " + "
                 << ring.render(d.t) << "    [e in class " << cls << "]\n";
          }
        }
        doc["decompositions"][std::string(to_string(k))] = std::move(list);
      }
      if (g_.json) out_ << doc.dump(2) << '\n';
      return kExitOk;
    });
  }

  int inspect(const std::string& spec, bool idem, bool units_flag, bool radical, bool classes) {
    if (!idem && !units_flag && !radical && !classes) idem = units_flag = radical = classes = true;
    return guarded(spec, [&] {
      const FiniteRing ring = build_ring(spec, limits_);
      json doc = {{"spec", ring.label()}, {"size", ring.size()}};
      const auto& cc = conjugacy_classes(ring);
      if (idem) {
        const auto& es = idempotents(ring);
        json list = json::array();
        for (Elem e : es) list.push_back(ring.render(e));
        doc["idempotents"] = {{"count", es.size()}, {"classes", cc.classes.size()}, {"elements", list}};
        if (!g_.json) {
          out_ << plural(es.size(), "idempotent", "idempotents") << " in "
               << plural(cc.classes.size(), "conjugacy class", "conjugacy classes") << '\n';
          if (es.size() <= kListLimit) {
            for (Elem e : es) out_ << "  " << ring.render(e) << '\n';
          }
        }
      }
      if (units_flag) {
        const auto& us = units(ring);
        json list = json::array();
        for (Elem u : us.units) list.push_back(ring.render(u));
        doc["units"] = {{"count", us.size()}, {"elements", list}};
        if (!g_.json) {
          out_ << plural(us.size(), "unit", "units") << '\n';
          if (us.size() <= kListLimit) {
            for (Elem u : us.units) out_ << "  " << ring.render(u) << '\n';
          }
        }
      }
      if (radical) {
        const Ideal j = jacobson_radical(ring);
        json list = json::array();
        for (Elem x : j.elements()) list.push_back(ring.render(x));
        doc["radical"] = {{"size", j.size()},
                          {"nil", j.is_nil()},
                          {"class", j.nilpotency_class() ? json(*j.nilpotency_class()) : json(nullptr)},
                          {"elements", list}};
        if (!g_.json) {
          out_ << radical_line(j) << '\n';
          if (j.size() <= kListLimit) {
            for (Elem x : j.elements()) out_ << "  " << ring.render(x) << '\n';
          }
        }
      }
      if (classes) {
        json list = json::array();
        for (const auto& c : cc.classes) {
          json members = json::array();
          for (Elem e : c) members.push_back(ring.render(e));
          list.push_back(members);
        }
        doc["conjugacy_classes"] = list;
        if (!g_.json) {
          out_ << plural(cc.classes.size(), "conjugacy class", "conjugacy classes")
               << " of idempotents\n";
          for (std::size_t i = 0; i < cc.classes.size(); ++i) {
            out_ << "  class " << i << ": " << plural(cc.classes[i].size(), "idempotent", "idempotents");
            if (cc.classes[i].size() <= 8) {
              out_ << " {";
              for (std::size_t k = 0; k < cc.classes[i].size(); ++k) {
                out_ << (k ? ", " : "") << ring.render(cc.classes[i][k]);
              }
              out_ << "}";
            }
            out_ << '\n';
          }
        }
      }
      if (g_.json) out_ << doc.dump(2) << '\n';
      return kExitOk;
    });
  }

  int verify(const std::string& filter) {
    SuiteOptions options;
    options.filter = filter;
    options.limits = limits_;
    options.classify = classify_options();
    std::vector<CaseResult> results;
    try {
      results = run_verification(json::parse(embedded_fixture()), options);
    } catch (const SizeCapError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitCap;
    }
    if (results.empty()) {
      if (g_.json) {
        out_ << "[]\n";
      } else {
        out_ << "no verification cases match \"" << filter << "\"\n";
      }
      err_ << "notice: empty suite for filter \"" << filter << "\"\n";
      return kExitOk;
    }
    std::size_t passed = 0;
    json all = json::array();
    for (const auto& r : results) {
      passed += r.passed;
      if (g_.json) {
        all.push_back(case_to_json(r));
      } else {
        out_ << case_to_text(r);
      }
    }
    if (g_.json) {
      out_ << all.dump(2) << '\n';
    } else {
      out_ << passed << "/" << results.size() << " cases passed\n";
    }
    return passed == results.size() ? kExitOk : kExitVerificationFailed;
  }

 private:
  ClassifyOptions classify_options() const {
    ClassifyOptions o;
    o.size_cap = limits_.size_cap;
    o.threads = g_.threads;
    return o;
  }

  template <class F>
  int guarded(const std::string& spec, F&& body) {
    try {
      return body();
    } catch (const ParseError& e) {
      spec_error(err_, spec, e.what(), e.offset(), e.offset() + 1, e.expected());
      return kExitUsage;
    } catch (const BuildError& e) {
      spec_error(err_, spec, e.what(), e.span().begin, e.span().end);
      return e.kind() == ErrorKind::size_cap ? kExitCap : kExitUsage;
    } catch (const SizeCapError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitCap;
    } catch (const RingError& e) {
      err_ << "error: " << e.what() << '\n';
      return e.kind() == ErrorKind::size_cap ? kExitCap : kExitUsage;
    }
  }

  const Globals& g_;
  std::ostream& out_;
  std::ostream& err_;
  Limits limits_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const char* env_cap) {
  CLI::App app{"Finite ring cleanness classifier", "cleanring"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_option("--cap", g.cap, "Size cap: an element count or 2^k")->type_name("N");
  app.add_option("--threads", g.threads, "Worker threads for classification (0 = all cores)")
      ->type_name("N");

  std::string spec;
  std::string element;
  std::string kind = "all";
  bool idem = false, unit = false, radical = false, classes = false;
  std::string filter;

  auto* classify = app.add_subcommand("classify", "Decide all cleanness flags of a ring");
  classify->add_option("spec", spec, "Ring expression, e.g. \"M(2,F2)\"")->required();
  auto* decompose = app.add_subcommand("decompose", "List decompositions of one element");
  decompose->add_option("spec", spec, "Ring expression")->required();
  decompose->add_option("element", element, "Index, digit list or matrix literal")->required();
  decompose->add_option("--kind", kind, "clean, nil, j or all")
      ->check(CLI::IsMember({"clean", "nil", "j", "all"}));
  auto* inspect = app.add_subcommand("inspect", "Show structural sets of a ring");
  inspect->add_option("spec", spec, "Ring expression")->required();
  inspect->add_flag("--idempotents", idem, "Idempotents and their conjugacy classes");
  inspect->add_flag("--units", unit, "Unit group");
  inspect->add_flag("--radical", radical, "Jacobson radical");
  inspect->add_flag("--conjugacy-classes", classes, "Idempotent conjugacy classes");
  auto* verify = app.add_subcommand("verify-paper", "Run the pinned verification suite");
  verify->add_option("--filter", filter, "Substring of case ids to run");
  for (auto* sub : {classify, decompose, inspect, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Limits limits;
  if (!g.cap.empty() || (env_cap && *env_cap)) {
    const std::string source = g.cap.empty() ? std::string(env_cap) : g.cap;
    const auto cap = parse_cap(source);
    if (!cap) {
      err << "error: invalid size cap \"" << source << "\" (expected N or 2^k, at most 2^32)\n";
      return kExitUsage;
    }
    limits.size_cap = *cap;
  }

  Runner runner(g, out, err, limits);
  if (*classify) return runner.classify(spec);
  if (*decompose) return runner.decompose(spec, element, kind);
  if (*inspect) return runner.inspect(spec, idem, unit, radical, classes);
  return runner.verify(filter);
}

}  // namespace cleanring::cli
