#pragma once

#include <cstdint>
#include <stdexcept>

namespace cyclo {

// All coefficient arithmetic goes through these. Coefficients of every
// polynomial in scope stay far below 2^63; if that assumption ever breaks
// we abort loudly instead of wrapping.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in coefficient addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in coefficient subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in coefficient multiplication");
  return r;
}

}  // namespace cyclo
