#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cleanring/error.hpp"
#include "cleanring/mixed_radix.hpp"

namespace cleanring {

inline constexpr std::uint64_t kDefaultSizeCap = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kMaxSizeCap = std::uint64_t{1} << 32;
// Rings with size^2 at most this many entries get memoized operation tables.
inline constexpr std::uint64_t kTableEntryLimit = std::uint64_t{1} << 24;

struct Limits {
  std::uint64_t size_cap = kDefaultSizeCap;
};

// Pure operation evaluators on element indices. Implementations must be
// deterministic and thread-safe.
class RingBackend {
 public:
  virtual ~RingBackend() = default;
  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
};

enum class LayoutKind {
  table,             // opaque index
  scalar,            // Z/n
  boolean,           // F2^k, one bit per digit
  product,           // one digit per factor
  matrix,            // n*n digits, row-major
  upper_triangular,  // n(n+1)/2 digits, row-major over the upper triangle
  truncated_skew,    // n coefficient digits, degree 0 first
  quotient,          // coset index; component 0 is the parent ring
  adjoined_unity,    // digits (eps, a)
};

enum class CacheSlot : std::size_t {
  idempotents,
  units,
  nilpotents,
  radical,
  conjugacy,
  count_,
};

class FiniteRing;

namespace detail {
struct RingData;
}

// An immutable finite unital ring. Copies are cheap handles that share the
// operation evaluators and the frozen structural caches.
class FiniteRing {
 public:
  // Builds a ring around `backend`. Operation tables are memoized when
  // size^2 <= kTableEntryLimit. Throws invalid-size when one == zero.
  static FiniteRing create(std::uint64_t size, Elem zero, Elem one,
                           std::shared_ptr<const RingBackend> backend,
                           std::string label);
  static FiniteRing create(std::uint64_t size, Elem zero, Elem one,
                           std::shared_ptr<const RingBackend> backend,
                           std::string label, LayoutKind kind, std::size_t dim,
                           MixedRadix codec, std::vector<FiniteRing> components);

  std::uint64_t size() const noexcept;
  Elem zero() const noexcept;
  Elem one() const noexcept;

  Elem add(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::uint64_t k) const;
  // n * a as repeated addition.
  Elem times(std::uint64_t n, Elem a) const;

  const std::string& label() const noexcept { return label_; }
  FiniteRing relabeled(std::string label) const;

  LayoutKind layout_kind() const noexcept;
  std::size_t layout_dim() const noexcept;
  const MixedRadix& codec() const noexcept;
  const std::vector<FiniteRing>& components() const noexcept;

  bool tabulated() const noexcept;
  bool contains(std::uint64_t index) const noexcept { return index < size(); }

  // Structured rendering: matrices as [[..],[..]] of base indices, other
  // composite rings as a flat digit list, scalars as the bare index.
  std::string render(Elem a) const;

  bool same_ring(const FiniteRing& other) const noexcept { return data_ == other.data_; }

  // Freeze-once cache. Concurrent callers block on the first computation
  // and all observe the same value.
  template <class T, class F>
  const T& frozen(CacheSlot slot, F&& compute) const;

 private:
  FiniteRing(std::shared_ptr<const detail::RingData> data, std::string label)
      : data_(std::move(data)), label_(std::move(label)) {}

  std::shared_ptr<const detail::RingData> data_;
  std::string label_;
};

namespace detail {

struct FrozenSlot {
  std::once_flag once;
  std::shared_ptr<const void> value;
};

struct RingData {
  std::uint64_t size = 0;
  Elem zero = 0;
  Elem one = 0;
  std::shared_ptr<const RingBackend> backend;
  LayoutKind kind = LayoutKind::table;
  std::size_t dim = 0;
  MixedRadix codec;
  std::vector<FiniteRing> components;
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;
  std::vector<std::uint16_t> neg_table;
  mutable std::array<FrozenSlot, static_cast<std::size_t>(CacheSlot::count_)> caches;
};

}  // namespace detail

inline std::uint64_t FiniteRing::size() const noexcept { return data_->size; }
inline Elem FiniteRing::zero() const noexcept { return data_->zero; }
inline Elem FiniteRing::one() const noexcept { return data_->one; }

inline Elem FiniteRing::add(Elem a, Elem b) const {
  if (!data_->add_table.empty()) return data_->add_table[std::uint64_t{a} * data_->size + b];
  return data_->backend->add(a, b);
}

inline Elem FiniteRing::mul(Elem a, Elem b) const {
  if (!data_->mul_table.empty()) return data_->mul_table[std::uint64_t{a} * data_->size + b];
  return data_->backend->mul(a, b);
}

inline Elem FiniteRing::neg(Elem a) const {
  if (!data_->neg_table.empty()) return data_->neg_table[a];
  return data_->backend->neg(a);
}

inline LayoutKind FiniteRing::layout_kind() const noexcept { return data_->kind; }
inline std::size_t FiniteRing::layout_dim() const noexcept { return data_->dim; }
inline const MixedRadix& FiniteRing::codec() const noexcept { return data_->codec; }
inline const std::vector<FiniteRing>& FiniteRing::components() const noexcept {
  return data_->components;
}
inline bool FiniteRing::tabulated() const noexcept { return !data_->mul_table.empty(); }

template <class T, class F>
const T& FiniteRing::frozen(CacheSlot slot, F&& compute) const {
  auto& s = data_->caches[static_cast<std::size_t>(slot)];
  std::call_once(s.once, [&] { s.value = std::make_shared<const T>(compute()); });
  return *static_cast<const T*>(s.value.get());
}

}  // namespace cleanring
