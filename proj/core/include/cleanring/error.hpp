#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cleanring {

// Element index into a finite ring, always in [0, size).
using Elem = std::uint32_t;

enum class ErrorKind {
  invalid_size,
  invalid_argument,
  size_cap,
  invalid_endomorphism,
  improper_ideal,
  invalid_ideal,
  unsupported_characteristic,
  precondition,
  not_clean,
};

std::string_view to_string(ErrorKind kind) noexcept;

class RingError : public std::runtime_error {
 public:
  RingError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Thrown by constructors when the requested ring would exceed the size cap.
// `required` saturates at UINT64_MAX; `required_log2` is exact enough for
// messages about rings like M(9,F2).
class SizeCapError : public RingError {
 public:
  SizeCapError(const std::string& what, std::uint64_t required,
               double required_log2, std::uint64_t cap)
      : RingError(ErrorKind::size_cap, what),
        required_(required),
        required_log2_(required_log2),
        cap_(cap) {}

  std::uint64_t required() const noexcept { return required_; }
  double required_log2() const noexcept { return required_log2_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t required_;
  double required_log2_;
  std::uint64_t cap_;
};

}  // namespace cleanring
