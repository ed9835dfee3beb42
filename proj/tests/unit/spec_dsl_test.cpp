#include <functional>
#include <string>
#include <vector>

#include "doctest.h"

#include "cleanring/spec_dsl.hpp"
#include "oracles.hpp"

using namespace cleanring;

TEST_CASE("parse shapes") {
  const auto m = parse_ring_spec("M(2,F2)");
  CHECK(m.kind == SpecAst::Kind::matrix);
  CHECK(m.n == 2);
  REQUIRE(m.children.size() == 1);
  CHECK(m.children[0].kind == SpecAst::Kind::f2);

  const auto t = parse_ring_spec("T(F2 x F2, swap(1,2), 2)");
  CHECK(t.kind == SpecAst::Kind::trunc_skew);
  CHECK(t.n == 2);
  REQUIRE(t.sigma);
  CHECK(t.sigma->kind == SigmaSpec::Kind::swap);
  CHECK(t.sigma->i == 1);
  CHECK(t.sigma->j == 2);
  CHECK(t.children[0].kind == SpecAst::Kind::product);
  CHECK(t.children[0].children.size() == 2);

  const auto p = parse_ring_spec("Z4 x F2 x B3");
  CHECK(p.kind == SpecAst::Kind::product);
  CHECK(p.children.size() == 3);
  CHECK(p.span.begin == 0);
  CHECK(p.span.end == 12);
  CHECK(p.children[2].span.begin == 10);

  CHECK(same_shape(parse_ring_spec("  UT( 3 ,Z4 ) "), parse_ring_spec("UT(3,Z4)")));
  CHECK(same_shape(parse_ring_spec("((F2))"), parse_ring_spec("F2")));
  CHECK_FALSE(same_shape(parse_ring_spec("Z4"), parse_ring_spec("Z8")));
}

TEST_CASE("render round trip over the fleet") {
  for (const auto& spec : oracle::fleet()) {
    CAPTURE(spec);
    const auto ast = parse_ring_spec(spec);
    const auto text = render(ast);
    CHECK(same_shape(parse_ring_spec(text), ast));
    CHECK(render(parse_ring_spec(text)) == text);
    CHECK(build_ring(ast).label() == text);
    CHECK(build_ring(ast).size() == spec_size(ast));
  }
}

TEST_CASE("every production is reachable from the fleet") {
  std::vector<bool> kinds(7, false);
  bool id = false, swap = false, parens = false;
  std::function<void(const SpecAst&)> walk = [&](const SpecAst& a) {
    kinds[static_cast<std::size_t>(a.kind)] = true;
    if (a.sigma) (a.sigma->kind == SigmaSpec::Kind::id ? id : swap) = true;
    for (const auto& c : a.children) walk(c);
  };
  for (const auto& spec : oracle::fleet()) {
    walk(parse_ring_spec(spec));
    parens = parens || spec.find("(F2 x F2)") != std::string::npos;
  }
  for (bool k : kinds) CHECK(k);
  CHECK(id);
  CHECK(swap);
  CHECK(parens);
}

TEST_CASE("nested products keep their grouping") {
  const auto ast = parse_ring_spec("(F2 x F2) x Z3");
  CHECK(render(ast) == "(F2 x F2) x Z3");
  const auto r = build_ring(ast);
  CHECK(r.size() == 12);
  CHECK(r.components().size() == 2);
}

TEST_CASE("sizes and caps") {
  CHECK(build_ring("M(2,F2)").size() == 16);
  CHECK(build_ring("UT(2,Z4)").size() == 64);
  CHECK(build_ring("M(3,Z4)").size() == 262144);
  CHECK(spec_size(parse_ring_spec("M(9,F2)")) == UINT64_MAX);
  try {
    build_ring("M(4,Z4)");
    FAIL("expected a cap error");
  } catch (const BuildError& e) {
    CHECK(e.kind() == ErrorKind::size_cap);
    CHECK(e.span().begin == 0);
  }
  CHECK(spec_size(parse_ring_spec("M(4,Z4)")) == std::uint64_t{1} << 32);
}

TEST_CASE("parse errors carry offsets") {
  struct Case {
    const char* text;
    const char* message;
    std::size_t offset;
  };
  const std::vector<Case> cases = {
      {"M(0,F2)", "matrix dimension must be >= 1", 2},
      {"UT(1,F2)", "upper-triangular dimension must be >= 2", 3},
      {"T(F2,id,1)", "truncation length must be >= 2", 8},
      {"Z1", "modulus must be >= 2", 1},
      {"B0", "Boolean rank must be >= 1", 1},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    try {
      parse_ring_spec(c.text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(c.message) != std::string::npos);
      CHECK(e.offset() == c.offset);
    }
  }
  for (const char* bad : {"", "M(2,F2", "F3", "Z", "M(2,F2) x", "T(F2,sigma,2)", "F2 F2", "Z-4",
                          "M(99999999999,F2)"}) {
    CAPTURE(bad);
    try {
      parse_ring_spec(bad);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.offset() <= std::string(bad).size() + 1);
    }
  }
}

TEST_CASE("swap validation") {
  auto message = [](const char* text) {
    try {
      build_ring(text);
    } catch (const std::exception& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("T(F2,swap(1,2),2)").find("swap needs a product ring") != std::string::npos);
  CHECK(message("T(F2 x F2,swap(1,3),2)").find("swap factor index out of range") !=
        std::string::npos);
  CHECK(message("T(F2 x Z3,swap(1,2),2)").find("swapped factors must have equal sizes") !=
        std::string::npos);
  // Swapping the factors of Z4 x F2 x Z4 is a ring automorphism.
  CHECK(build_ring("T(Z4 x F2 x Z4,swap(1,3),2)").size() == 1024);
}
