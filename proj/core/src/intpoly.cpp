#include "cyclo/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cyclo/checked.hpp"

namespace cyclo {

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(std::int64_t c, std::size_t e) {
  if (c == 0) return {};
  std::vector<std::int64_t> v(e + 1, 0);
  v[e] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_power_minus_one(std::size_t n) {
  if (n == 0) return {};
  std::vector<std::int64_t> v(n + 1, 0);
  v[0] = -1;
  v[n] = 1;
  return IntPolynomial(std::move(v));
}

std::size_t IntPolynomial::hamming_weight() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(),
                    [](std::int64_t c) { return c != 0; }));
}

bool IntPolynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(),
                    coeffs_.begin() + coeffs_.size() / 2, coeffs_.rbegin());
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<std::int64_t> v(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    v[k] = checked_sub(0, coeffs_[k]);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& f, const IntPolynomial& g) {
  std::vector<std::int64_t> v(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
  for (std::size_t k = 0; k < v.size(); ++k)
    v[k] = checked_add(f.coeff(k), g.coeff(k));
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& f, const IntPolynomial& g) {
  std::vector<std::int64_t> v(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
  for (std::size_t k = 0; k < v.size(); ++k)
    v[k] = checked_sub(f.coeff(k), g.coeff(k));
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<std::int64_t> v(f.coeffs_.size() + g.coeffs_.size() - 1, 0);
  for (std::size_t a = 0; a < f.coeffs_.size(); ++a) {
    if (f.coeffs_[a] == 0) continue;
    for (std::size_t b = 0; b < g.coeffs_.size(); ++b)
      v[a + b] = checked_add(v[a + b], checked_mul(f.coeffs_[a], g.coeffs_[b]));
  }
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || k == 0) out << a;
    if (k > 0) {
      out << "x";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

IntPolynomial quot_exact(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  std::int64_t lead = g.leading();
  if (lead != 1 && lead != -1)
    throw std::domain_error("divisor is not monic up to sign");
  if (f.is_zero()) return {};
  auto df = *f.degree(), dg = *g.degree();
  if (df < dg) throw std::domain_error("inexact division");

  std::vector<std::int64_t> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<std::int64_t> quot(df - dg + 1, 0);
  auto gc = g.coeffs();
  for (std::size_t k = df + 1; k-- > dg;) {
    std::int64_t c = rem[k];
    if (c == 0) continue;
    c = lead == 1 ? c : checked_sub(0, c);
    quot[k - dg] = c;
    for (std::size_t t = 0; t <= dg; ++t)
      rem[k - dg + t] = checked_sub(rem[k - dg + t], checked_mul(c, gc[t]));
  }
  if (std::any_of(rem.begin(), rem.end(),
                  [](std::int64_t c) { return c != 0; }))
    throw std::domain_error("inexact division");
  return IntPolynomial(std::move(quot));
}

IntPolynomial truncate(const IntPolynomial& f, std::size_t s) {
  auto c = f.coeffs();
  std::vector<std::int64_t> v(c.begin(),
                              c.begin() + std::min(s, c.size()));
  return IntPolynomial(std::move(v));
}

IntPolynomial flip(const IntPolynomial& f, std::size_t m) {
  if (!f.is_zero() && *f.degree() >= m)
    throw std::domain_error("degree exceeds modulus");
  std::vector<std::int64_t> v(m);
  for (std::size_t k = 0; k < m; ++k) v[k] = f.coeff(m - 1 - k);
  return IntPolynomial(std::move(v));
}

IntPolynomial rotate(const IntPolynomial& f, std::int64_t s, std::size_t m) {
  if (!f.is_zero() && *f.degree() >= m)
    throw std::domain_error("degree exceeds modulus");
  std::int64_t mm = static_cast<std::int64_t>(m);
  std::int64_t shift = ((s % mm) + mm) % mm;
  std::vector<std::int64_t> v(m);
  for (std::size_t k = 0; k < m; ++k)
    v[k] = f.coeff((k + shift) % m);
  return IntPolynomial(std::move(v));
}

IntPolynomial expand(const IntPolynomial& f, std::int64_t s, std::size_t m) {
  std::int64_t mm = static_cast<std::int64_t>(m);
  std::int64_t e = ((s % mm) + mm) % mm;
  if (e == 0)
    throw std::domain_error(
        "expand with rem(s, m) = 0 would collapse to a constant");
  if (f.is_zero()) return {};
  std::vector<std::int64_t> v(*f.degree() * e + 1, 0);
  auto c = f.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) v[k * e] = c[k];
  return IntPolynomial(std::move(v));
}

IntPolynomial rem_cyclic(const IntPolynomial& f, std::size_t m) {
  if (m == 0) throw std::domain_error("zero modulus");
  std::vector<std::int64_t> v(m, 0);
  auto c = f.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    v[k % m] = checked_add(v[k % m], c[k]);
  return IntPolynomial(std::move(v));
}

std::int64_t evaluate_checked(const IntPolynomial& f, std::int64_t x) {
  std::int64_t acc = 0;
  auto c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;)
    acc = checked_add(checked_mul(acc, x), c[k]);
  return acc;
}

}  // namespace cyclo
