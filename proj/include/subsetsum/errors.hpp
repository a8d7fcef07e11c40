#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subsetsum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or empty input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A 64-bit or memory bound would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Rank outside [1, size of the virtual sorted list].
class RankError : public Error {
 public:
  using Error::Error;
};

/// Subset order outside [1, N].
class OrderError : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition does not hold (e.g. non-positive input to the
/// all-positive fast path).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw CapacityError(std::string("64-bit overflow computing ") + what);
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw CapacityError(std::string("64-bit overflow computing ") + what);
  }
  return r;
}

}  // namespace detail
}  // namespace subsetsum
