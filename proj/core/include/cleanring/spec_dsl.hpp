#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cleanring/error.hpp"
#include "cleanring/ring.hpp"

namespace cleanring {

// Half-open byte range [begin, end) in the source text.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct SigmaSpec {
  enum class Kind { id, swap };
  Kind kind = Kind::id;
  std::size_t i = 0;  // 1-based factor indices for swap
  std::size_t j = 0;
  SourceSpan span;
};

// Ring-expression tree. `n` is the modulus, Boolean rank, matrix dimension
// or truncation length depending on the kind.
struct SpecAst {
  enum class Kind { f2, zmod, boolean, matrix, upper_triangular, product, trunc_skew };
  Kind kind = Kind::f2;
  std::uint64_t n = 0;
  std::vector<SpecAst> children;
  std::optional<SigmaSpec> sigma;
  SourceSpan span;
};

// Structural equality; spans are ignored.
bool same_shape(const SpecAst& a, const SpecAst& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset, std::string expected)
      : std::runtime_error(message), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  // Summary of what the parser would have accepted at offset; may be empty.
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Grammar (whitespace-insensitive, 'x' is the left-associative product):
///   expr  := term { "x" term }
///   term  := "F2" | "Z" int | "B" int | "M(" int "," expr ")"
///          | "UT(" int "," expr ")" | "T(" expr "," sigma "," int ")" | "(" expr ")"
///   sigma := "id" | "swap(" int "," int ")"
SpecAst parse_ring_spec(std::string_view text);

// Canonical text; parse_ring_spec(render(ast)) has the same shape as ast.
std::string render(const SpecAst& ast);

// Element count of the described ring, saturating at UINT64_MAX.
std::uint64_t spec_size(const SpecAst& ast) noexcept;

// A construction error annotated with the span of the node that failed.
class BuildError : public RingError {
 public:
  BuildError(ErrorKind kind, const std::string& message, SourceSpan span)
      : RingError(kind, message), span_(span) {}

  SourceSpan span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

/// Builds the ring through the ring-core constructors. The ring's label is
/// render(ast). Constructor errors are rethrown as BuildError.
FiniteRing build_ring(const SpecAst& ast, const Limits& limits = {});

FiniteRing build_ring(std::string_view text, const Limits& limits = {});

}  // namespace cleanring
