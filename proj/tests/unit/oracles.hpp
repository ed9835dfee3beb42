#pragma once

// Brute-force reference implementations. They share nothing with the
// library beyond the ring operations themselves.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cleanring/ring.hpp"

namespace oracle {

using cleanring::Elem;
using cleanring::FiniteRing;

inline std::vector<Elem> idempotents(const FiniteRing& r) {
  std::vector<Elem> out;
  for (Elem a = 0; a < r.size(); ++a) {
    if (r.mul(a, a) == a) out.push_back(a);
  }
  return out;
}

inline std::vector<bool> units(const FiniteRing& r) {
  std::vector<bool> out(r.size(), false);
  for (Elem a = 0; a < r.size(); ++a) {
    for (Elem b = 0; b < r.size(); ++b) {
      if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) {
        out[a] = true;
        break;
      }
    }
  }
  return out;
}

inline bool nilpotent(const FiniteRing& r, Elem a) {
  Elem p = a;
  for (std::uint64_t k = 0; k <= r.size(); ++k) {
    if (p == r.zero()) return true;
    p = r.mul(p, a);
  }
  return false;
}

inline std::vector<bool> nilpotents(const FiniteRing& r) {
  std::vector<bool> out(r.size());
  for (Elem a = 0; a < r.size(); ++a) out[a] = nilpotent(r, a);
  return out;
}

// { x : 1 - r x is a unit for every r }
inline std::vector<bool> radical(const FiniteRing& r, const std::vector<bool>& unit) {
  std::vector<bool> out(r.size(), false);
  for (Elem x = 0; x < r.size(); ++x) {
    bool in = true;
    for (Elem y = 0; in && y < r.size(); ++y) in = unit[r.sub(r.one(), r.mul(y, x))];
    out[x] = in;
  }
  return out;
}

// Counts pairs (e, t) with e idempotent, t in `accept`, e + t = a.
inline std::size_t pair_count(const FiniteRing& r, Elem a, const std::vector<Elem>& idem,
                              const std::vector<bool>& accept) {
  std::size_t n = 0;
  for (Elem e : idem) {
    for (Elem t = 0; t < r.size(); ++t) {
      if (accept[t] && r.add(e, t) == a) ++n;
    }
  }
  return n;
}

inline bool conjugate(const FiniteRing& r, Elem e, Elem f, const std::vector<bool>& unit) {
  for (Elem u = 0; u < r.size(); ++u) {
    if (unit[u] && r.mul(u, f) == r.mul(e, u)) return true;
  }
  return false;
}

inline nlohmann::json fixture() {
  std::ifstream in(CLEANRING_FIXTURE_PATH);
  std::stringstream s;
  s << in.rdbuf();
  return nlohmann::json::parse(s.str());
}

inline std::vector<std::string> fleet() {
  return fixture().at("fleet").get<std::vector<std::string>>();
}

}  // namespace oracle
