#include "cleanring/ring.hpp"

#include <sstream>

namespace cleanring {

FiniteRing FiniteRing::create(std::uint64_t size, Elem zero, Elem one,
                              std::shared_ptr<const RingBackend> backend,
                              std::string label) {
  return create(size, zero, one, std::move(backend), std::move(label), LayoutKind::table, 0,
                MixedRadix({size}), {});
}

FiniteRing FiniteRing::create(std::uint64_t size, Elem zero, Elem one,
                              std::shared_ptr<const RingBackend> backend, std::string label,
                              LayoutKind kind, std::size_t dim, MixedRadix codec,
                              std::vector<FiniteRing> components) {
  if (size < 2 || size > kMaxSizeCap) {
    throw RingError(ErrorKind::invalid_size, "ring size must be in [2, 2^32]");
  }
  if (zero >= size || one >= size) {
    throw RingError(ErrorKind::invalid_argument, "zero/one index out of range");
  }
  if (zero == one) {
    throw RingError(ErrorKind::invalid_size, "trivial ring (one == zero) is not supported");
  }
  auto data = std::make_shared<detail::RingData>();
  data->size = size;
  data->zero = zero;
  data->one = one;
  data->backend = std::move(backend);
  data->kind = kind;
  data->dim = dim;
  data->codec = std::move(codec);
  data->components = std::move(components);

  if (size * size <= kTableEntryLimit) {
    const auto n = static_cast<Elem>(size);
    data->add_table.resize(size * size);
    data->mul_table.resize(size * size);
    data->neg_table.resize(size);
    for (Elem a = 0; a < n; ++a) {
      data->neg_table[a] = static_cast<std::uint16_t>(data->backend->neg(a));
      for (Elem b = 0; b < n; ++b) {
        data->add_table[std::uint64_t{a} * size + b] =
            static_cast<std::uint16_t>(data->backend->add(a, b));
        data->mul_table[std::uint64_t{a} * size + b] =
            static_cast<std::uint16_t>(data->backend->mul(a, b));
      }
    }
  }
  return FiniteRing(std::move(data), std::move(label));
}

Elem FiniteRing::pow(Elem a, std::uint64_t k) const {
  Elem result = one();
  Elem base = a;
  while (k != 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k != 0) base = mul(base, base);
  }
  return result;
}

Elem FiniteRing::times(std::uint64_t n, Elem a) const {
  Elem result = zero();
  Elem base = a;
  while (n != 0) {
    if (n & 1) result = add(result, base);
    n >>= 1;
    if (n != 0) base = add(base, base);
  }
  return result;
}

FiniteRing FiniteRing::relabeled(std::string label) const {
  return FiniteRing(data_, std::move(label));
}

std::string FiniteRing::render(Elem a) const {
  std::ostringstream out;
  const auto& d = *data_;
  switch (d.kind) {
    case LayoutKind::matrix:
    case LayoutKind::upper_triangular: {
      const std::size_t n = d.dim;
      const auto digits = d.codec.decode(a);
      const Elem base_zero = d.components.front().zero();
      std::size_t k = 0;
      out << '[';
      for (std::size_t i = 0; i < n; ++i) {
        out << (i ? ",[" : "[");
        for (std::size_t j = 0; j < n; ++j) {
          if (j) out << ',';
          if (d.kind == LayoutKind::matrix || j >= i) {
            out << digits[k++];
          } else {
            out << base_zero;
          }
        }
        out << ']';
      }
      out << ']';
      break;
    }
    case LayoutKind::boolean:
    case LayoutKind::product:
    case LayoutKind::truncated_skew:
    case LayoutKind::adjoined_unity: {
      const auto digits = d.codec.decode(a);
      out << '[';
      for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out << ',';
        out << digits[i];
      }
      out << ']';
      break;
    }
    case LayoutKind::table:
    case LayoutKind::scalar:
    case LayoutKind::quotient:
      out << a;
      break;
  }
  return out.str();
}

}  // namespace cleanring
