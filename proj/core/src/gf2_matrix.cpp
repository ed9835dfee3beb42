#include "cleanring/gf2_matrix.hpp"

#include <stdexcept>

namespace cleanring::gf2 {

std::uint64_t mul_packed(std::uint64_t a, std::uint64_t b, std::size_t n) noexcept {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  std::uint64_t brows[BitMatrix::kMaxDim];
  for (std::size_t r = 0; r < n; ++r) brows[r] = (b >> (r * n)) & mask;
  std::uint64_t out = 0;
  for (std::size_t r = 0; r < n; ++r) {
    std::uint64_t arow = (a >> (r * n)) & mask;
    std::uint64_t acc = 0;
    while (arow != 0) {
      const auto c = static_cast<std::size_t>(__builtin_ctzll(arow));
      acc ^= brows[c];
      arow &= arow - 1;
    }
    out |= acc << (r * n);
  }
  return out;
}

BitMatrix::BitMatrix(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
  if (n == 0 || n > kMaxDim) throw std::invalid_argument("BitMatrix dimension must be in [1, 8]");
}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : BitMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw std::invalid_argument("BitMatrix rows must be square");
    std::size_t c = 0;
    for (int v : row) set(r, c++, (v & 1) != 0);
    ++r;
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_index(std::uint64_t index, std::size_t n) {
  BitMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, (index >> (r * n + c)) & 1U);
  }
  return m;
}

std::uint64_t BitMatrix::to_index() const noexcept {
  std::uint64_t index = 0;
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (get(r, c)) index |= std::uint64_t{1} << (r * n_ + c);
    }
  }
  return index;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) noexcept {
  const std::uint64_t bit = std::uint64_t{1} << (8 * r + c);
  bits_ = v ? (bits_ | bit) : (bits_ & ~bit);
}

BitMatrix BitMatrix::operator+(const BitMatrix& o) const noexcept {
  BitMatrix m = *this;
  m.bits_ ^= o.bits_;
  return m;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const noexcept {
  BitMatrix m = *this;
  m.bits_ = 0;
  for (std::size_t r = 0; r < n_; ++r) {
    unsigned arow = row(r);
    std::uint64_t acc = 0;
    while (arow != 0) {
      const auto c = static_cast<std::size_t>(__builtin_ctz(arow));
      acc ^= o.row(c);
      arow &= arow - 1;
    }
    m.bits_ |= acc << (8 * r);
  }
  return m;
}

std::size_t BitMatrix::rank() const noexcept {
  std::uint8_t rows[kMaxDim];
  for (std::size_t r = 0; r < n_; ++r) rows[r] = row(r);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n_ && rank < n_; ++c) {
    const std::uint8_t bit = static_cast<std::uint8_t>(1U << c);
    std::size_t pivot = rank;
    while (pivot < n_ && !(rows[pivot] & bit)) ++pivot;
    if (pivot == n_) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < n_; ++r) {
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

bool BitMatrix::nilpotent() const noexcept {
  BitMatrix p = *this;
  for (std::size_t i = 1; i < n_; ++i) p = p * *this;
  return p.bits_ == 0;
}

BitMatrix block_diagonal(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix m(a.dim() + b.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) m.set(r, c, a.get(r, c));
  }
  for (std::size_t r = 0; r < b.dim(); ++r) {
    for (std::size_t c = 0; c < b.dim(); ++c) m.set(a.dim() + r, a.dim() + c, b.get(r, c));
  }
  return m;
}

std::vector<BitMatrix> general_linear_group(std::size_t n) {
  if (n == 0 || n * n > 25) throw std::invalid_argument("general_linear_group supports n <= 5");
  std::vector<BitMatrix> group;
  const std::uint64_t count = std::uint64_t{1} << (n * n);
  for (std::uint64_t i = 0; i < count; ++i) {
    auto m = BitMatrix::from_index(i, n);
    if (m.invertible()) group.push_back(m);
  }
  return group;
}

std::optional<BitMatrix> find_conjugator(const BitMatrix& e, const BitMatrix& f,
                                         std::span<const BitMatrix> group) {
  for (const auto& u : group) {
    if (u * f == e * u) return u;
  }
  return std::nullopt;
}

}  // namespace cleanring::gf2
