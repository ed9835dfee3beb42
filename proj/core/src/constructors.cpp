#include "cleanring/constructors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "cleanring/axioms.hpp"
#include "cleanring/gf2_matrix.hpp"

namespace cleanring {

namespace {

// Rings are capped at 2^32 elements, so no codec has more than 32 digits.
using Digits = std::array<Elem, 64>;

std::string size_text(std::uint64_t size, double log2_size) {
  if (size == std::numeric_limits<std::uint64_t>::max()) {
    std::ostringstream out;
    out << "2^" << std::llround(log2_size);
    return out.str();
  }
  return std::to_string(size);
}

// Throws a size-cap error unless base^digits fits under the cap.
std::uint64_t require_cap(const std::string& label, std::uint64_t base, std::uint64_t digits,
                          const Limits& limits) {
  const std::uint64_t size = saturating_pow(base, digits);
  const std::uint64_t cap = std::min(limits.size_cap, kMaxSizeCap);
  if (size > cap) {
    const double log2_size = static_cast<double>(digits) * std::log2(static_cast<double>(base));
    throw SizeCapError(label + " has " + size_text(size, log2_size) +
                           " elements; it needs a size cap of at least " +
                           size_text(size, log2_size) + " (current cap " + std::to_string(cap) +
                           ")",
                       size, log2_size, cap);
  }
  return size;
}

std::string wrap_product_label(const std::string& label) {
  return label.find(" x ") == std::string::npos ? label : "(" + label + ")";
}

class ZmodBackend final : public RingBackend {
 public:
  explicit ZmodBackend(std::uint64_t n) : n_(n) {}
  Elem add(Elem a, Elem b) const override {
    return static_cast<Elem>((std::uint64_t{a} + b) % n_);
  }
  Elem mul(Elem a, Elem b) const override {
    return static_cast<Elem>((std::uint64_t{a} * b) % n_);
  }
  Elem neg(Elem a) const override { return a == 0 ? 0 : static_cast<Elem>(n_ - a); }

 private:
  std::uint64_t n_;
};

class BooleanBackend final : public RingBackend {
 public:
  Elem add(Elem a, Elem b) const override { return a ^ b; }
  Elem mul(Elem a, Elem b) const override { return a & b; }
  Elem neg(Elem a) const override { return a; }
};

class ProductBackend final : public RingBackend {
 public:
  ProductBackend(std::vector<FiniteRing> factors, MixedRadix codec)
      : factors_(std::move(factors)), codec_(std::move(codec)) {}

  Elem add(Elem a, Elem b) const override {
    return combine(a, b, [](const FiniteRing& r, Elem x, Elem y) { return r.add(x, y); });
  }
  Elem mul(Elem a, Elem b) const override {
    return combine(a, b, [](const FiniteRing& r, Elem x, Elem y) { return r.mul(x, y); });
  }
  Elem neg(Elem a) const override {
    Digits da;
    const std::size_t k = factors_.size();
    codec_.decode(a, std::span(da.data(), k));
    for (std::size_t i = 0; i < k; ++i) da[i] = factors_[i].neg(da[i]);
    return codec_.encode(std::span<const Elem>(da.data(), k));
  }

 private:
  template <class Op>
  Elem combine(Elem a, Elem b, Op op) const {
    Digits da, db;
    const std::size_t k = factors_.size();
    codec_.decode(a, std::span(da.data(), k));
    codec_.decode(b, std::span(db.data(), k));
    for (std::size_t i = 0; i < k; ++i) da[i] = op(factors_[i], da[i], db[i]);
    return codec_.encode(std::span<const Elem>(da.data(), k));
  }

  std::vector<FiniteRing> factors_;
  MixedRadix codec_;
};

class MatrixBackend final : public RingBackend {
 public:
  MatrixBackend(FiniteRing base, std::size_t n)
      : base_(std::move(base)), n_(n), codec_(MixedRadix::uniform(base_.size(), n * n)) {}

  Elem add(Elem a, Elem b) const override {
    Digits da, db;
    decode(a, da);
    decode(b, db);
    for (std::size_t i = 0; i < n_ * n_; ++i) da[i] = base_.add(da[i], db[i]);
    return encode(da);
  }
  Elem mul(Elem a, Elem b) const override {
    Digits da, db, dc;
    decode(a, da);
    decode(b, db);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        Elem acc = base_.zero();
        for (std::size_t k = 0; k < n_; ++k) {
          acc = base_.add(acc, base_.mul(da[i * n_ + k], db[k * n_ + j]));
        }
        dc[i * n_ + j] = acc;
      }
    }
    return encode(dc);
  }
  Elem neg(Elem a) const override {
    Digits da;
    decode(a, da);
    for (std::size_t i = 0; i < n_ * n_; ++i) da[i] = base_.neg(da[i]);
    return encode(da);
  }

 private:
  void decode(Elem a, Digits& d) const { codec_.decode(a, std::span(d.data(), n_ * n_)); }
  Elem encode(const Digits& d) const {
    return codec_.encode(std::span<const Elem>(d.data(), n_ * n_));
  }

  FiniteRing base_;
  std::size_t n_;
  MixedRadix codec_;
};

// M(n, F2) on the packed index: entry (r,c) is bit r*n + c.
class Gf2MatrixBackend final : public RingBackend {
 public:
  explicit Gf2MatrixBackend(std::size_t n) : n_(n) {}
  Elem add(Elem a, Elem b) const override { return a ^ b; }
  Elem mul(Elem a, Elem b) const override {
    return static_cast<Elem>(gf2::mul_packed(a, b, n_));
  }
  Elem neg(Elem a) const override { return a; }

 private:
  std::size_t n_;
};

class UpperTriangularBackend final : public RingBackend {
 public:
  UpperTriangularBackend(FiniteRing base, std::size_t n)
      : base_(std::move(base)),
        n_(n),
        m_(n * (n + 1) / 2),
        codec_(MixedRadix::uniform(base_.size(), m_)) {}

  Elem add(Elem a, Elem b) const override {
    Digits da, db;
    codec_.decode(a, std::span(da.data(), m_));
    codec_.decode(b, std::span(db.data(), m_));
    for (std::size_t i = 0; i < m_; ++i) da[i] = base_.add(da[i], db[i]);
    return codec_.encode(std::span<const Elem>(da.data(), m_));
  }
  Elem mul(Elem a, Elem b) const override {
    Digits da, db, dc;
    codec_.decode(a, std::span(da.data(), m_));
    codec_.decode(b, std::span(db.data(), m_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) {
        Elem acc = base_.zero();
        for (std::size_t k = i; k <= j; ++k) {
          acc = base_.add(acc, base_.mul(da[pos(i, k)], db[pos(k, j)]));
        }
        dc[pos(i, j)] = acc;
      }
    }
    return codec_.encode(std::span<const Elem>(dc.data(), m_));
  }
  Elem neg(Elem a) const override {
    Digits da;
    codec_.decode(a, std::span(da.data(), m_));
    for (std::size_t i = 0; i < m_; ++i) da[i] = base_.neg(da[i]);
    return codec_.encode(std::span<const Elem>(da.data(), m_));
  }

 private:
  // Row-major position of (i, j), j >= i, within the upper triangle.
  std::size_t pos(std::size_t i, std::size_t j) const { return i * n_ - i * (i - 1) / 2 + (j - i); }

  FiniteRing base_;
  std::size_t n_;
  std::size_t m_;
  MixedRadix codec_;
};

class TruncSkewBackend final : public RingBackend {
 public:
  TruncSkewBackend(FiniteRing base, std::vector<std::vector<Elem>> sigma_powers, std::size_t n)
      : base_(std::move(base)),
        sigma_powers_(std::move(sigma_powers)),
        n_(n),
        codec_(MixedRadix::uniform(base_.size(), n)) {}

  Elem add(Elem a, Elem b) const override {
    Digits da, db;
    codec_.decode(a, std::span(da.data(), n_));
    codec_.decode(b, std::span(db.data(), n_));
    for (std::size_t i = 0; i < n_; ++i) da[i] = base_.add(da[i], db[i]);
    return codec_.encode(std::span<const Elem>(da.data(), n_));
  }
  Elem mul(Elem a, Elem b) const override {
    Digits da, db, dc;
    codec_.decode(a, std::span(da.data(), n_));
    codec_.decode(b, std::span(db.data(), n_));
    for (std::size_t k = 0; k < n_; ++k) dc[k] = base_.zero();
    for (std::size_t i = 0; i < n_; ++i) {
      const auto& twist = sigma_powers_[i];
      for (std::size_t j = 0; i + j < n_; ++j) {
        dc[i + j] = base_.add(dc[i + j], base_.mul(da[i], twist[db[j]]));
      }
    }
    return codec_.encode(std::span<const Elem>(dc.data(), n_));
  }
  Elem neg(Elem a) const override {
    Digits da;
    codec_.decode(a, std::span(da.data(), n_));
    for (std::size_t i = 0; i < n_; ++i) da[i] = base_.neg(da[i]);
    return codec_.encode(std::span<const Elem>(da.data(), n_));
  }

 private:
  FiniteRing base_;
  std::vector<std::vector<Elem>> sigma_powers_;
  std::size_t n_;
  MixedRadix codec_;
};

class QuotientBackend final : public RingBackend {
 public:
  QuotientBackend(FiniteRing parent, std::vector<Elem> projection, std::vector<Elem> reps)
      : parent_(std::move(parent)), projection_(std::move(projection)), reps_(std::move(reps)) {}

  Elem add(Elem a, Elem b) const override { return projection_[parent_.add(reps_[a], reps_[b])]; }
  Elem mul(Elem a, Elem b) const override { return projection_[parent_.mul(reps_[a], reps_[b])]; }
  Elem neg(Elem a) const override { return projection_[parent_.neg(reps_[a])]; }

 private:
  FiniteRing parent_;
  std::vector<Elem> projection_;
  std::vector<Elem> reps_;
};

class AdjoinedUnityBackend final : public RingBackend {
 public:
  explicit AdjoinedUnityBackend(NonUnitalAlgebra algebra) : a_(std::move(algebra)) {}

  Elem add(Elem x, Elem y) const override {
    return pack((x & 1U) ^ (y & 1U), a_.add(x >> 1, y >> 1));
  }
  Elem mul(Elem x, Elem y) const override {
    const Elem ex = x & 1U, ey = y & 1U, ax = x >> 1, ay = y >> 1;
    Elem part = a_.mul(ax, ay);
    if (ex) part = a_.add(part, ay);
    if (ey) part = a_.add(part, ax);
    return pack(ex & ey, part);
  }
  Elem neg(Elem x) const override { return pack(x & 1U, a_.neg(x >> 1)); }

 private:
  static Elem pack(Elem eps, Elem a) { return eps | (a << 1); }

  NonUnitalAlgebra a_;
};

class TableBackend final : public RingBackend {
 public:
  TableBackend(std::uint64_t size, std::vector<Elem> add, std::vector<Elem> mul,
               std::vector<Elem> neg)
      : size_(size), add_(std::move(add)), mul_(std::move(mul)), neg_(std::move(neg)) {}

  Elem add(Elem a, Elem b) const override { return add_[a * size_ + b]; }
  Elem mul(Elem a, Elem b) const override { return mul_[a * size_ + b]; }
  Elem neg(Elem a) const override { return neg_[a]; }

 private:
  std::uint64_t size_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
};

Elem identity_matrix_index(const FiniteRing& base, std::size_t n, const MixedRadix& codec,
                           bool upper_only) {
  std::vector<Elem> digits;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = upper_only ? i : 0; j < n; ++j) {
      digits.push_back(i == j ? base.one() : base.zero());
    }
  }
  return codec.encode(digits);
}

Elem zero_index(const FiniteRing& base, const MixedRadix& codec) {
  return codec.encode(std::vector<Elem>(codec.digits(), base.zero()));
}

}  // namespace

FiniteRing make_zmod(std::uint64_t n, const Limits& limits) {
  if (n < 2) throw RingError(ErrorKind::invalid_size, "Z/n needs n >= 2 (one must differ from zero)");
  const std::string label = "Z" + std::to_string(n);
  require_cap(label, n, 1, limits);
  return FiniteRing::create(n, 0, 1, std::make_shared<ZmodBackend>(n), label, LayoutKind::scalar, 0,
                            MixedRadix({n}), {});
}

FiniteRing make_boolean(std::uint64_t k, const Limits& limits) {
  if (k < 1) throw RingError(ErrorKind::invalid_size, "B(k) needs k >= 1");
  const std::string label = "B" + std::to_string(k);
  const std::uint64_t size = require_cap(label, 2, k, limits);
  return FiniteRing::create(size, 0, static_cast<Elem>(size - 1),
                            std::make_shared<BooleanBackend>(), label, LayoutKind::boolean, k,
                            MixedRadix::uniform(2, k), {});
}

FiniteRing make_product(std::span<const FiniteRing> factors, const Limits& limits) {
  if (factors.empty()) throw RingError(ErrorKind::invalid_argument, "product of no factors");
  std::vector<std::uint64_t> radices;
  std::string label;
  std::uint64_t size = 1;
  double log2_size = 0;
  for (const auto& f : factors) {
    radices.push_back(f.size());
    size = saturating_mul(size, f.size());
    log2_size += std::log2(static_cast<double>(f.size()));
    if (!label.empty()) label += " x ";
    label += wrap_product_label(f.label());
  }
  const std::uint64_t cap = std::min(limits.size_cap, kMaxSizeCap);
  if (size > cap) {
    throw SizeCapError(label + " has " + size_text(size, log2_size) +
                           " elements; it needs a size cap of at least " +
                           size_text(size, log2_size) + " (current cap " + std::to_string(cap) +
                           ")",
                       size, log2_size, cap);
  }
  MixedRadix codec(radices);
  std::vector<FiniteRing> parts(factors.begin(), factors.end());
  std::vector<Elem> zero_digits, one_digits;
  for (const auto& f : parts) {
    zero_digits.push_back(f.zero());
    one_digits.push_back(f.one());
  }
  const Elem zero = codec.encode(zero_digits);
  const Elem one = codec.encode(one_digits);
  auto backend = std::make_shared<ProductBackend>(parts, codec);
  return FiniteRing::create(size, zero, one, std::move(backend), label, LayoutKind::product,
                            parts.size(), codec, std::move(parts));
}

FiniteRing make_matrix_ring(const FiniteRing& base, std::size_t n, const Limits& limits) {
  if (n < 1) throw RingError(ErrorKind::invalid_size, "matrix dimension must be >= 1");
  const std::string label = "M(" + std::to_string(n) + "," + base.label() + ")";
  const std::uint64_t size = require_cap(label, base.size(), n * n, limits);
  auto codec = MixedRadix::uniform(base.size(), n * n);
  std::shared_ptr<const RingBackend> backend;
  if (base.size() == 2 && base.zero() == 0 && base.one() == 1 && n * n <= 32) {
    backend = std::make_shared<Gf2MatrixBackend>(n);
  } else {
    backend = std::make_shared<MatrixBackend>(base, n);
  }
  return FiniteRing::create(size, zero_index(base, codec),
                            identity_matrix_index(base, n, codec, false), std::move(backend), label,
                            LayoutKind::matrix, n, codec, {base});
}

FiniteRing make_ut_ring(const FiniteRing& base, std::size_t n, const Limits& limits) {
  if (n < 2) throw RingError(ErrorKind::invalid_size, "UT dimension must be >= 2");
  const std::string label = "UT(" + std::to_string(n) + "," + base.label() + ")";
  const std::size_t m = n * (n + 1) / 2;
  const std::uint64_t size = require_cap(label, base.size(), m, limits);
  auto codec = MixedRadix::uniform(base.size(), m);
  return FiniteRing::create(size, zero_index(base, codec),
                            identity_matrix_index(base, n, codec, true),
                            std::make_shared<UpperTriangularBackend>(base, n), label,
                            LayoutKind::upper_triangular, n, codec, {base});
}

Endomorphism identity_endomorphism(const FiniteRing& ring) {
  std::vector<Elem> map(ring.size());
  for (Elem a = 0; a < ring.size(); ++a) map[a] = a;
  return {ring, std::move(map), "id"};
}

Endomorphism swap_endomorphism(const FiniteRing& product, std::size_t i, std::size_t j) {
  if (product.layout_kind() != LayoutKind::product) {
    throw RingError(ErrorKind::invalid_argument, "swap needs a product ring, got " + product.label());
  }
  const auto& factors = product.components();
  if (i >= factors.size() || j >= factors.size()) {
    throw RingError(ErrorKind::invalid_argument,
                    "swap factor index out of range for " + product.label());
  }
  if (factors[i].size() != factors[j].size()) {
    throw RingError(ErrorKind::invalid_argument, "swap needs factors of equal size");
  }
  const auto& codec = product.codec();
  std::vector<Elem> map(product.size());
  std::vector<Elem> digits(codec.digits());
  for (Elem a = 0; a < product.size(); ++a) {
    codec.decode(a, digits);
    std::swap(digits[i], digits[j]);
    map[a] = codec.encode(digits);
  }
  return {product, std::move(map),
          "swap(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"};
}

FiniteRing make_trunc_skew_poly(const FiniteRing& base, const Endomorphism& sigma, std::size_t n,
                                const Limits& limits) {
  if (n < 2) throw RingError(ErrorKind::invalid_size, "truncation degree must be >= 2");
  const std::string label =
      "T(" + base.label() + "," + sigma.name + "," + std::to_string(n) + ")";
  const std::uint64_t size = require_cap(label, base.size(), n, limits);
  if (!sigma.ring.same_ring(base)) {
    throw RingError(ErrorKind::invalid_endomorphism, "sigma is defined on a different ring");
  }
  if (auto check = check_endomorphism(base, sigma.map); !check) {
    throw RingError(ErrorKind::invalid_endomorphism,
                    "sigma '" + sigma.name + "' is not an endomorphism of " + base.label() + ": " +
                        check.reason + " at (" + std::to_string(check.a) + "," +
                        std::to_string(check.b) + ")");
  }
  std::vector<std::vector<Elem>> powers(n);
  powers[0] = identity_endomorphism(base).map;
  for (std::size_t i = 1; i < n; ++i) {
    powers[i].resize(base.size());
    for (Elem a = 0; a < base.size(); ++a) powers[i][a] = sigma.map[powers[i - 1][a]];
  }
  auto codec = MixedRadix::uniform(base.size(), n);
  std::vector<Elem> one_digits(n, base.zero());
  one_digits[0] = base.one();
  return FiniteRing::create(size, zero_index(base, codec), codec.encode(one_digits),
                            std::make_shared<TruncSkewBackend>(base, std::move(powers), n), label,
                            LayoutKind::truncated_skew, n, codec, {base});
}

QuotientRing make_quotient(const FiniteRing& ring, std::span<const Elem> ideal) {
  if (auto check = check_ideal(ring, ideal); !check) {
    throw RingError(ErrorKind::invalid_ideal, "subset is not an ideal of " + ring.label() + ": " +
                                                  check.reason + " (" + std::to_string(check.a) +
                                                  ", " + std::to_string(check.b) + ")");
  }
  for (Elem x : ideal) {
    if (x == ring.one()) {
      throw RingError(ErrorKind::improper_ideal, "ideal contains one; quotient would be trivial");
    }
  }
  constexpr Elem unassigned = std::numeric_limits<Elem>::max();
  std::vector<Elem> projection(ring.size(), unassigned);
  std::vector<Elem> reps;
  for (Elem a = 0; a < ring.size(); ++a) {
    if (projection[a] != unassigned) continue;
    const auto q = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for (Elem x : ideal) projection[ring.add(a, x)] = q;
  }
  const std::uint64_t size = reps.size();
  std::string label = ring.label() + "/I" + std::to_string(ideal.size());
  auto backend = std::make_shared<QuotientBackend>(ring, projection, reps);
  auto q = FiniteRing::create(size, projection[ring.zero()], projection[ring.one()],
                              std::move(backend), label, LayoutKind::quotient, 0,
                              MixedRadix({size}), {ring});
  return {std::move(q), std::move(projection), std::move(reps)};
}

NonUnitalAlgebra::NonUnitalAlgebra(std::uint64_t size, std::vector<Elem> add,
                                   std::vector<Elem> mul, std::vector<Elem> neg,
                                   std::string label)
    : size_(size),
      add_(std::move(add)),
      mul_(std::move(mul)),
      neg_(std::move(neg)),
      label_(std::move(label)) {
  if (size_ == 0 || size_ * size_ > kTableEntryLimit) {
    throw RingError(ErrorKind::invalid_size, "algebra size must be in [1, 4096]");
  }
  if (add_.size() != size_ * size_ || mul_.size() != size_ * size_ || neg_.size() != size_) {
    throw RingError(ErrorKind::invalid_argument, "algebra tables have the wrong shape");
  }
  char2_ = true;
  for (Elem a = 0; a < size_; ++a) {
    if (add_[a * size_ + a] != 0) {
      char2_ = false;
      break;
    }
  }
}

namespace {

template <class Mul>
NonUnitalAlgebra f2_algebra_from_mul(std::size_t bits, Mul mul, std::string label) {
  const std::uint64_t size = std::uint64_t{1} << bits;
  std::vector<Elem> add(size * size), prod(size * size), neg(size);
  for (Elem a = 0; a < size; ++a) {
    neg[a] = a;
    for (Elem b = 0; b < size; ++b) {
      add[a * size + b] = a ^ b;
      prod[a * size + b] = mul(a, b);
    }
  }
  return NonUnitalAlgebra(size, std::move(add), std::move(prod), std::move(neg), std::move(label));
}

}  // namespace

NonUnitalAlgebra make_strictly_upper_algebra(std::size_t n) {
  if (n < 2 || n * (n - 1) / 2 > 12) {
    throw RingError(ErrorKind::invalid_size, "strictly upper algebra supports 2 <= n <= 5");
  }
  // Bit positions of (i, j), i < j, in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) cells.emplace_back(i, j);
  }
  auto to_packed = [&](Elem a) {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if ((a >> k) & 1U) m |= std::uint64_t{1} << (cells[k].first * n + cells[k].second);
    }
    return m;
  };
  auto from_packed = [&](std::uint64_t m) {
    Elem a = 0;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if ((m >> (cells[k].first * n + cells[k].second)) & 1U) a |= Elem{1} << k;
    }
    return a;
  };
  return f2_algebra_from_mul(
      cells.size(),
      [&](Elem a, Elem b) { return from_packed(gf2::mul_packed(to_packed(a), to_packed(b), n)); },
      "SU(" + std::to_string(n) + ",F2)");
}

NonUnitalAlgebra make_nil_power_algebra(std::size_t n) {
  if (n < 2 || n > 13) throw RingError(ErrorKind::invalid_size, "nil power algebra supports 2 <= n <= 13");
  // Bit i-1 is the coefficient of x^i.
  return f2_algebra_from_mul(
      n - 1,
      [n](Elem a, Elem b) {
        Elem out = 0;
        for (std::size_t i = 1; i < n; ++i) {
          if (!((a >> (i - 1)) & 1U)) continue;
          for (std::size_t j = 1; i + j < n; ++j) {
            if ((b >> (j - 1)) & 1U) out ^= Elem{1} << (i + j - 1);
          }
        }
        return out;
      },
      "xF2[x]/(x^" + std::to_string(n) + ")");
}

FiniteRing adjoin_unity(const NonUnitalAlgebra& algebra) {
  if (!algebra.characteristic_two()) {
    throw RingError(ErrorKind::unsupported_characteristic,
                    "unity can only be adjoined over F2 to an algebra of characteristic 2");
  }
  const std::uint64_t size = 2 * algebra.size();
  return FiniteRing::create(size, 0, 1, std::make_shared<AdjoinedUnityBackend>(algebra),
                            algebra.label() + "*", LayoutKind::adjoined_unity, 0,
                            MixedRadix({2, algebra.size()}), {});
}

FiniteRing make_table_ring(std::uint64_t size, Elem zero, Elem one, std::vector<Elem> add,
                           std::vector<Elem> mul, std::vector<Elem> neg, std::string label) {
  if (size < 2 || size * size > kTableEntryLimit) {
    throw RingError(ErrorKind::invalid_size, "table ring size must be in [2, 4096]");
  }
  if (add.size() != size * size || mul.size() != size * size || neg.size() != size) {
    throw RingError(ErrorKind::invalid_argument, "ring tables have the wrong shape");
  }
  auto in_range = [size](const std::vector<Elem>& t) {
    for (Elem x : t) {
      if (x >= size) return false;
    }
    return true;
  };
  if (!in_range(add) || !in_range(mul) || !in_range(neg)) {
    throw RingError(ErrorKind::invalid_argument, "ring table entry out of range");
  }
  return FiniteRing::create(size, zero, one,
                            std::make_shared<TableBackend>(size, std::move(add), std::move(mul),
                                                           std::move(neg)),
                            std::move(label));
}

}  // namespace cleanring
