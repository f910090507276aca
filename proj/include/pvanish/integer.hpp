#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pvanish {

/// Exact unbounded integer used for degrees, centralizer orders and any
/// character value that does not fit a 64-bit word.
using Integer = boost::multiprecision::cpp_int;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("int64 addition overflow");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("int64 subtraction overflow");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("int64 multiplication overflow");
  return out;
}

/// base^exp, throwing on overflow.
inline std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace pvanish
