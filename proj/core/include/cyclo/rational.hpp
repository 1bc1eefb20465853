#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclo {

/// Exact fraction in lowest terms, denominator always positive.
/// Intermediates run through 128-bit arithmetic; a result outside the
/// 64-bit range throws.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n) {}
  Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  static Rational make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 g = gcd128(a, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi || d > hi)
      throw std::overflow_error("rational out of 64-bit range");
    Rational r;
    r.num = static_cast<std::int64_t>(n);
    r.den = static_cast<std::int64_t>(d);
    return r;
  }

  bool is_integer() const { return den == 1; }

  std::int64_t to_integer() const {
    if (den != 1)
      throw std::logic_error("rational did not cancel to an integer");
    return num;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num) * b.den +
                    static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num) * b.num,
                static_cast<__int128>(a.den) * b.den);
  }
  Rational operator-() const {
    Rational r;
    r.num = -num;
    r.den = den;
    return r;
  }
  friend bool operator==(const Rational&, const Rational&) = default;

  std::string to_string() const {
    std::string s = std::to_string(num);
    if (den != 1) s += "/" + std::to_string(den);
    return s;
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
};

}  // namespace cyclo
