#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cleanring/error.hpp"

namespace cleanring {

// Mixed-radix codec. Digit 0 is the least significant:
//   index = d0 + r0 * (d1 + r1 * (d2 + ...)).
// Matrices are encoded with entries in row-major order, so entry (0,0) is
// digit 0; polynomial coefficients are stored degree 0 first.
class MixedRadix {
 public:
  MixedRadix() = default;
  explicit MixedRadix(std::vector<std::uint64_t> radices);

  // Uniform radix repeated `count` times.
  static MixedRadix uniform(std::uint64_t radix, std::size_t count);

  std::size_t digits() const noexcept { return radices_.size(); }
  std::uint64_t radix(std::size_t i) const { return radices_[i]; }
  std::span<const std::uint64_t> radices() const noexcept { return radices_; }
  std::uint64_t weight(std::size_t i) const { return weights_[i]; }

  // Product of all radices; only meaningful when it did not overflow.
  std::uint64_t size() const noexcept { return size_; }

  Elem encode(std::span<const Elem> digits) const;
  void decode(Elem index, std::span<Elem> out) const;
  std::vector<Elem> decode(Elem index) const;

  Elem digit(Elem index, std::size_t i) const {
    return static_cast<Elem>((index / weights_[i]) % radices_[i]);
  }

 private:
  std::vector<std::uint64_t> radices_;
  std::vector<std::uint64_t> weights_;
  std::uint64_t size_ = 1;
};

// Saturating product used for size-cap arithmetic; returns UINT64_MAX on
// overflow.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) noexcept;

}  // namespace cleanring
