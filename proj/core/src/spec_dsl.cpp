#include "cleanring/spec_dsl.hpp"

#include <cctype>

#include "cleanring/constructors.hpp"
#include "cleanring/mixed_radix.hpp"

namespace cleanring {

namespace {

constexpr std::uint64_t kIntLimit = std::uint64_t{1} << 32;
constexpr const char* kTermStart = "F2, Z<int>, B<int>, M(, UT(, T( or (";

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SpecAst parse() {
    SpecAst ast = expr();
    skip();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "' after ring expression", pos_,
           "'x' or end of input");
    }
    return ast;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t at, std::string expected) const {
    throw ParseError(message, at, std::move(expected));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(std::string_view word) {
    skip();
    return text_.substr(pos_, word.size()) == word;
  }

  bool accept(std::string_view word) {
    if (!peek(word)) return false;
    pos_ += word.size();
    return true;
  }

  void expect(std::string_view word) {
    if (!accept(word)) {
      fail("expected '" + std::string(word) + "'", pos_, "'" + std::string(word) + "'");
    }
  }

  std::pair<std::uint64_t, std::size_t> integer() {
    skip();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > kIntLimit) fail("integer too large", start, "an integer <= 2^32");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer", start, "decimal digits");
    return {value, start};
  }

  // "Z4" and "Z(4)" are both accepted.
  std::pair<std::uint64_t, std::size_t> suffix_integer() {
    if (accept("(")) {
      auto v = integer();
      expect(")");
      return v;
    }
    return integer();
  }

  SpecAst expr() {
    skip();
    const std::size_t start = pos_;
    SpecAst first = term();
    if (!peek("x")) return first;
    SpecAst product;
    product.kind = SpecAst::Kind::product;
    product.children.push_back(std::move(first));
    while (accept("x")) product.children.push_back(term());
    product.span = {start, pos_};
    return product;
  }

  SpecAst term() {
    skip();
    const std::size_t start = pos_;
    SpecAst node;
    if (accept("F2")) {
      node.kind = SpecAst::Kind::f2;
      node.n = 2;
    } else if (accept("Z")) {
      node.kind = SpecAst::Kind::zmod;
      auto [n, at] = suffix_integer();
      if (n < 2) fail("modulus must be >= 2", at, "an integer >= 2");
      node.n = n;
    } else if (accept("B")) {
      node.kind = SpecAst::Kind::boolean;
      auto [k, at] = suffix_integer();
      if (k < 1) fail("Boolean rank must be >= 1", at, "an integer >= 1");
      node.n = k;
    } else if (accept("UT")) {
      node.kind = SpecAst::Kind::upper_triangular;
      expect("(");
      auto [n, at] = integer();
      if (n < 2) fail("upper-triangular dimension must be >= 2", at, "an integer >= 2");
      node.n = n;
      expect(",");
      node.children.push_back(expr());
      expect(")");
    } else if (accept("M")) {
      node.kind = SpecAst::Kind::matrix;
      expect("(");
      auto [n, at] = integer();
      if (n < 1) fail("matrix dimension must be >= 1", at, "an integer >= 1");
      node.n = n;
      expect(",");
      node.children.push_back(expr());
      expect(")");
    } else if (accept("T")) {
      node.kind = SpecAst::Kind::trunc_skew;
      expect("(");
      node.children.push_back(expr());
      expect(",");
      node.sigma = sigma(node.children.front());
      expect(",");
      auto [n, at] = integer();
      if (n < 2) fail("truncation length must be >= 2", at, "an integer >= 2");
      node.n = n;
      expect(")");
    } else if (accept("(")) {
      node = expr();
      expect(")");
      return node;
    } else {
      if (pos_ == text_.size()) fail("unexpected end of input", pos_, kTermStart);
      fail("unexpected '" + std::string(1, text_[pos_]) + "'", pos_, kTermStart);
    }
    node.span = {start, pos_};
    return node;
  }

  SigmaSpec sigma(const SpecAst& child) {
    skip();
    SigmaSpec s;
    const std::size_t start = pos_;
    if (accept("id")) {
      s.kind = SigmaSpec::Kind::id;
    } else if (accept("swap")) {
      s.kind = SigmaSpec::Kind::swap;
      expect("(");
      auto [i, at_i] = integer();
      expect(",");
      auto [j, at_j] = integer();
      expect(")");
      if (child.kind != SpecAst::Kind::product) {
        fail("swap needs a product ring", start, "id");
      }
      const std::size_t k = child.children.size();
      if (i < 1 || i > k) fail("swap factor index out of range", at_i, "1.." + std::to_string(k));
      if (j < 1 || j > k) fail("swap factor index out of range", at_j, "1.." + std::to_string(k));
      if (spec_size(child.children[i - 1]) != spec_size(child.children[j - 1])) {
        fail("swapped factors must have equal sizes", start, "factors of equal size");
      }
      s.i = i;
      s.j = j;
    } else {
      fail("expected a sigma", start, "id or swap(i,j)");
    }
    s.span = {start, pos_};
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_factor(const SpecAst& ast) {
  return ast.kind == SpecAst::Kind::product ? "(" + render(ast) + ")" : render(ast);
}

FiniteRing build(const SpecAst& ast, const Limits& limits) {
  try {
    FiniteRing ring = [&] {
      switch (ast.kind) {
        case SpecAst::Kind::f2: return make_zmod(2, limits);
        case SpecAst::Kind::zmod: return make_zmod(ast.n, limits);
        case SpecAst::Kind::boolean: return make_boolean(ast.n, limits);
        case SpecAst::Kind::matrix:
          return make_matrix_ring(build(ast.children.front(), limits), ast.n, limits);
        case SpecAst::Kind::upper_triangular:
          return make_ut_ring(build(ast.children.front(), limits), ast.n, limits);
        case SpecAst::Kind::product: {
          std::vector<FiniteRing> factors;
          for (const auto& c : ast.children) factors.push_back(build(c, limits));
          return make_product(factors, limits);
        }
        case SpecAst::Kind::trunc_skew: {
          const FiniteRing base = build(ast.children.front(), limits);
          const Endomorphism sigma =
              ast.sigma && ast.sigma->kind == SigmaSpec::Kind::swap
                  ? swap_endomorphism(base, ast.sigma->i - 1, ast.sigma->j - 1)
                  : identity_endomorphism(base);
          return make_trunc_skew_poly(base, sigma, ast.n, limits);
        }
      }
      throw RingError(ErrorKind::invalid_argument, "unknown ring expression");
    }();
    return ring.relabeled(render(ast));
  } catch (const BuildError&) {
    throw;
  } catch (const RingError& e) {
    throw BuildError(e.kind(),
                     std::string(e.what()) + " (at " + std::to_string(ast.span.begin) + ".." +
                         std::to_string(ast.span.end) + ")",
                     ast.span);
  }
}

}  // namespace

bool same_shape(const SpecAst& a, const SpecAst& b) {
  if (a.kind != b.kind || a.n != b.n || a.children.size() != b.children.size()) return false;
  if (a.sigma.has_value() != b.sigma.has_value()) return false;
  if (a.sigma && (a.sigma->kind != b.sigma->kind || a.sigma->i != b.sigma->i ||
                  a.sigma->j != b.sigma->j)) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!same_shape(a.children[i], b.children[i])) return false;
  }
  return true;
}

SpecAst parse_ring_spec(std::string_view text) { return Parser(text).parse(); }

std::string render(const SpecAst& ast) {
  switch (ast.kind) {
    case SpecAst::Kind::f2: return "F2";
    case SpecAst::Kind::zmod: return "Z" + std::to_string(ast.n);
    case SpecAst::Kind::boolean: return "B" + std::to_string(ast.n);
    case SpecAst::Kind::matrix:
      return "M(" + std::to_string(ast.n) + "," + render(ast.children.front()) + ")";
    case SpecAst::Kind::upper_triangular:
      return "UT(" + std::to_string(ast.n) + "," + render(ast.children.front()) + ")";
    case SpecAst::Kind::product: {
      std::string out;
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        if (i) out += " x ";
        out += render_factor(ast.children[i]);
      }
      return out;
    }
    case SpecAst::Kind::trunc_skew: {
      std::string sigma = "id";
      if (ast.sigma && ast.sigma->kind == SigmaSpec::Kind::swap) {
        sigma = "swap(" + std::to_string(ast.sigma->i) + "," + std::to_string(ast.sigma->j) + ")";
      }
      return "T(" + render(ast.children.front()) + "," + sigma + "," + std::to_string(ast.n) +
             ")";
    }
  }
  return "?";
}

std::uint64_t spec_size(const SpecAst& ast) noexcept {
  switch (ast.kind) {
    case SpecAst::Kind::f2: return 2;
    case SpecAst::Kind::zmod: return ast.n;
    case SpecAst::Kind::boolean: return saturating_pow(2, ast.n);
    case SpecAst::Kind::matrix:
      return saturating_pow(spec_size(ast.children.front()), saturating_mul(ast.n, ast.n));
    case SpecAst::Kind::upper_triangular:
      return saturating_pow(spec_size(ast.children.front()),
                            saturating_mul(ast.n, ast.n + 1) / 2);
    case SpecAst::Kind::product: {
      std::uint64_t size = 1;
      for (const auto& c : ast.children) size = saturating_mul(size, spec_size(c));
      return size;
    }
    case SpecAst::Kind::trunc_skew: return saturating_pow(spec_size(ast.children.front()), ast.n);
  }
  return 0;
}

FiniteRing build_ring(const SpecAst& ast, const Limits& limits) { return build(ast, limits); }

FiniteRing build_ring(std::string_view text, const Limits& limits) {
  return build(parse_ring_spec(text), limits);
}

}  // namespace cleanring
