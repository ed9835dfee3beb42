#include "cleanring/mixed_radix.hpp"

#include <limits>

namespace cleanring {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_size: return "invalid-size";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::size_cap: return "size-cap";
    case ErrorKind::invalid_endomorphism: return "invalid-endomorphism";
    case ErrorKind::improper_ideal: return "improper-ideal";
    case ErrorKind::invalid_ideal: return "invalid-ideal";
    case ErrorKind::unsupported_characteristic: return "unsupported-characteristic";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::not_clean: return "not-clean";
  }
  return "unknown";
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > max / a) return max;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) noexcept {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    r = saturating_mul(r, base);
    if (r == std::numeric_limits<std::uint64_t>::max()) break;
  }
  return r;
}

MixedRadix::MixedRadix(std::vector<std::uint64_t> radices)
    : radices_(std::move(radices)) {
  weights_.reserve(radices_.size());
  for (auto r : radices_) {
    if (r == 0) throw RingError(ErrorKind::invalid_size, "mixed radix digit with radix 0");
    weights_.push_back(size_);
    size_ = saturating_mul(size_, r);
  }
}

MixedRadix MixedRadix::uniform(std::uint64_t radix, std::size_t count) {
  return MixedRadix(std::vector<std::uint64_t>(count, radix));
}

Elem MixedRadix::encode(std::span<const Elem> digits) const {
  std::uint64_t index = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    index = index * radices_[i] + digits[i];
  }
  return static_cast<Elem>(index);
}

void MixedRadix::decode(Elem index, std::span<Elem> out) const {
  std::uint64_t rest = index;
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    out[i] = static_cast<Elem>(rest % radices_[i]);
    rest /= radices_[i];
  }
}

std::vector<Elem> MixedRadix::decode(Elem index) const {
  std::vector<Elem> out(radices_.size());
  decode(index, out);
  return out;
}

}  // namespace cleanring
