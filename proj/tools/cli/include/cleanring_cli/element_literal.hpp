#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cleanring/ring.hpp"

namespace cleanring::cli {

class LiteralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Element literals: a bare index ("7"), a flat digit list ("[1,0,1]") for
// composite rings, or a row-major matrix ("[[0,1],[1,0]]") with base-ring
// indices as entries. Upper-triangular literals must carry the base zero
// below the diagonal.
Elem parse_element(const FiniteRing& ring, std::string_view text);
Elem element_from_json(const FiniteRing& ring, const nlohmann::json& value);

}  // namespace cleanring::cli
