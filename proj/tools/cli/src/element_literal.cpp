#include "cleanring_cli/element_literal.hpp"

#include <vector>

namespace cleanring::cli {

namespace {

Elem digit_value(const nlohmann::json& v, std::uint64_t radix, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw LiteralError(where + ": entries must be non-negative integers");
  }
  const auto d = v.get<std::uint64_t>();
  if (d >= radix) {
    throw LiteralError(where + ": entry " + std::to_string(d) + " is out of range (base has " +
                       std::to_string(radix) + " elements)");
  }
  return static_cast<Elem>(d);
}

Elem matrix_literal(const FiniteRing& ring, const nlohmann::json& rows) {
  const std::size_t n = ring.layout_dim();
  const bool upper = ring.layout_kind() == LayoutKind::upper_triangular;
  const FiniteRing& base = ring.components().front();
  if (rows.size() != n) {
    throw LiteralError("expected " + std::to_string(n) + " rows for " + ring.label());
  }
  std::vector<Elem> digits;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      throw LiteralError("row " + std::to_string(i) + " must have " + std::to_string(n) +
                         " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Elem d = digit_value(row[j], base.size(), "matrix literal");
      if (upper && j < i) {
        if (d != base.zero()) {
          throw LiteralError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") below the diagonal must be " + std::to_string(base.zero()));
        }
        continue;
      }
      digits.push_back(d);
    }
  }
  return ring.codec().encode(digits);
}

}  // namespace

Elem element_from_json(const FiniteRing& ring, const nlohmann::json& value) {
  if (value.is_number_integer() || value.is_number_unsigned()) {
    if (value.is_number_integer() && value.get<std::int64_t>() < 0) {
      throw LiteralError("element index must be non-negative");
    }
    const auto index = value.get<std::uint64_t>();
    if (!ring.contains(index)) {
      throw LiteralError("element " + std::to_string(index) + " is out of range for " +
                         ring.label() + " (size " + std::to_string(ring.size()) + ")");
    }
    return static_cast<Elem>(index);
  }
  if (!value.is_array()) throw LiteralError("element literal must be an index or a list");
  const auto kind = ring.layout_kind();
  const bool matrix = kind == LayoutKind::matrix || kind == LayoutKind::upper_triangular;
  if (!value.empty() && value.front().is_array()) {
    if (!matrix) throw LiteralError(ring.label() + " is not a matrix ring");
    return matrix_literal(ring, value);
  }
  const auto& codec = ring.codec();
  if (codec.digits() == 0 || kind == LayoutKind::quotient) {
    throw LiteralError(ring.label() + " takes plain element indices");
  }
  if (value.size() != codec.digits()) {
    throw LiteralError("expected " + std::to_string(codec.digits()) + " digits for " +
                       ring.label());
  }
  std::vector<Elem> digits;
  for (std::size_t i = 0; i < value.size(); ++i) {
    digits.push_back(digit_value(value[i], codec.radix(i), "digit list"));
  }
  return codec.encode(digits);
}

Elem parse_element(const FiniteRing& ring, std::string_view text) {
  nlohmann::json value;
  try {
    value = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw LiteralError("cannot read element literal '" + std::string(text) + "'");
  }
  return element_from_json(ring, value);
}

}  // namespace cleanring::cli
