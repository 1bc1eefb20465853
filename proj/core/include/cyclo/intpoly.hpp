#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cyclo {

/// Exact dense polynomial over the signed 64-bit integers.
///
/// Index = exponent, value = coefficient. The representation is always
/// normalized: no trailing zero is stored, and the zero polynomial is the
/// empty sequence. Every operation returns a normalized value; all
/// coefficient arithmetic is overflow-checked.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> coeffs)
      : coeffs_(coeffs) {
    normalize();
  }
  explicit IntPolynomial(std::vector<std::int64_t> coeffs)
      : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static IntPolynomial zero() { return {}; }
  static IntPolynomial one() { return {1}; }
  /// c * x^e
  static IntPolynomial monomial(std::int64_t c, std::size_t e);
  /// x^n - 1
  static IntPolynomial x_power_minus_one(std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  /// Coefficient at `exponent`; zero beyond the stored range.
  std::int64_t coeff(std::size_t exponent) const {
    return exponent < coeffs_.size() ? coeffs_[exponent] : 0;
  }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  std::int64_t leading() const { return coeffs_.back(); }

  /// Number of nonzero coefficients.
  std::size_t hamming_weight() const;

  /// True iff the coefficient sequence reads the same in both directions.
  bool is_palindromic() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& f,
                                 const IntPolynomial& g);
  friend IntPolynomial operator-(const IntPolynomial& f,
                                 const IntPolynomial& g);
  friend IntPolynomial operator*(const IntPolynomial& f,
                                 const IntPolynomial& g);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "1 - x + x^3" style rendering, "0" for the zero polynomial.
  std::string to_string() const;

 private:
  std::vector<std::int64_t> coeffs_;
  void normalize();
};

/// Exact quotient f/g. Requires g monic up to sign and g | f in Z[x];
/// throws std::domain_error("inexact division") otherwise.
IntPolynomial quot_exact(const IntPolynomial& f, const IntPolynomial& g);

/// T_s: keep the terms of exponent < s.
IntPolynomial truncate(const IntPolynomial& f, std::size_t s);

/// F: reverse the coefficient sequence of length m. Requires deg f < m.
IntPolynomial flip(const IntPolynomial& f, std::size_t m);

/// R_s: cyclic rotation modulo x^m - 1; new coefficient at k is the old
/// coefficient at rem(k + s, m). Negative s is reduced mod m first.
/// Requires deg f < m.
IntPolynomial rotate(const IntPolynomial& f, std::int64_t s, std::size_t m);

/// E_s: substitute x -> x^{rem(s, m)}. rem(s, m) = 0 is rejected
/// (the substitution would collapse f to a constant).
IntPolynomial expand(const IntPolynomial& f, std::int64_t s, std::size_t m);

/// Remainder modulo x^m - 1: exponents folded mod m, coefficients summed.
IntPolynomial rem_cyclic(const IntPolynomial& f, std::size_t m);

/// Overflow-checked Horner evaluation; used by sampled homomorphism checks.
std::int64_t evaluate_checked(const IntPolynomial& f, std::int64_t x);

}  // namespace cyclo
