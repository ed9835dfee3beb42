#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace cleanring::gf2 {

// Products of n x n matrices over F2 in the ring-index packing: entry (r, c)
// is bit r*n + c, so row r occupies bits [r*n, r*n + n). Requires n*n <= 64.
std::uint64_t mul_packed(std::uint64_t a, std::uint64_t b, std::size_t n) noexcept;

// Square matrix over F2 with n <= 8. Row r is byte r of the word, column c
// is bit c of that byte.
class BitMatrix {
 public:
  static constexpr std::size_t kMaxDim = 8;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);
  BitMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static BitMatrix identity(std::size_t n);
  static BitMatrix zero(std::size_t n) { return BitMatrix(n); }
  // Decodes the packed ring index used by M(n,F2).
  static BitMatrix from_index(std::uint64_t index, std::size_t n);
  std::uint64_t to_index() const noexcept;

  std::size_t dim() const noexcept { return n_; }
  bool get(std::size_t r, std::size_t c) const noexcept { return (bits_ >> (8 * r + c)) & 1U; }
  void set(std::size_t r, std::size_t c, bool v) noexcept;
  std::uint8_t row(std::size_t r) const noexcept {
    return static_cast<std::uint8_t>(bits_ >> (8 * r));
  }

  BitMatrix operator+(const BitMatrix& o) const noexcept;
  BitMatrix operator*(const BitMatrix& o) const noexcept;
  bool operator==(const BitMatrix& o) const noexcept = default;

  std::size_t rank() const noexcept;
  bool invertible() const noexcept { return rank() == n_; }
  bool idempotent() const noexcept { return *this * *this == *this; }
  // A^n == 0 decides nilpotency for an n x n matrix.
  bool nilpotent() const noexcept;

 private:
  std::uint64_t bits_ = 0;
  std::uint8_t n_ = 0;
};

BitMatrix block_diagonal(const BitMatrix& a, const BitMatrix& b);

// All invertible n x n matrices, in increasing packed-index order.
std::vector<BitMatrix> general_linear_group(std::size_t n);

// Exhaustive search for u in `group` with u f u^-1 = e, tested as u f = e u.
std::optional<BitMatrix> find_conjugator(const BitMatrix& e, const BitMatrix& f,
                                         std::span<const BitMatrix> group);

}  // namespace cleanring::gf2
