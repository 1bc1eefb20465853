#include "cyclo/closedform.hpp"

#include <numeric>
#include <sstream>

#include "cyclo/blocks.hpp"

namespace cyclo {

TernaryParams TernaryParams::create(std::int64_t p2, std::int64_t p3) {
  if (!is_prime(p2) || p2 <= 3)
    throw std::domain_error("p2 must be a prime > 3");
  if (!is_prime(p3) || p3 <= 3 * p2)
    throw std::domain_error("p3 must be a prime > 3*p2");
  TernaryParams t;
  t.p2 = p2;
  t.p3 = p3;
  t.r2 = p2 % 3;
  t.q2 = p2 / 3;
  t.r3 = p3 % (3 * p2);
  t.q3 = p3 / (3 * p2);
  // p2 odd forces the parity pairing of (r2, q2); the lemmas' q2/2 and
  // (q2 +- 1)/2 bounds are integral exactly because of it.
  if ((t.r2 == 1) != (t.q2 % 2 == 0))
    throw std::logic_error("parity law violated for (r2, q2)");
  return t;
}

Rational slope_N(std::int64_t p2) {
  if (!is_prime(p2) || p2 <= 3)
    throw std::domain_error("slope_N requires a prime p2 > 3");
  if (p2 % 3 == 1)
    return Rational(7 * (p2 * p2 - 1), 9 * p2);
  return Rational((p2 + 1) * (7 * p2 - 2), 9 * p2);
}

std::int64_t ternary_constant(std::int64_t p2) {
  std::int64_t numer = p2 % 3 == 1 ? 4 * p2 - 1 : 4 * p2 + 1;
  return Rational(numer, 3).to_integer();
}

namespace {

std::int64_t hw_ternary_with_constant(const TernaryParams& t, Rational c) {
  if (!t.formula_applicable())
    throw FormulaNotApplicable("formula not applicable: r3 not in {2, 3*p2-2}");
  Rational n = slope_N(t.p2);
  Rational value = t.r3 == 2 ? n * Rational(t.p3 - 2) + c
                             : n * Rational(t.p3 + 2) - c;
  return value.to_integer();
}

}  // namespace

std::int64_t hw_ternary(const TernaryParams& t) {
  return hw_ternary_with_constant(t, Rational(ternary_constant(t.p2)));
}

std::int64_t hw_ternary_misprint_constant(const TernaryParams& t) {
  return hw_ternary_with_constant(t, Rational(4 * (t.p2 + 1), 3));
}

std::int64_t hw_block_full(std::int64_t p2, std::int64_t i) {
  if (!is_prime(p2) || p2 <= 3)
    throw std::domain_error("hw_block_full requires a prime p2 > 3");
  std::int64_t phi = 2 * (p2 - 1);
  if (i < 0 || i >= phi) throw std::domain_error("block row out of range");
  if (i > p2 - 1) i = phi - 1 - i;  // palindromic symmetry
  std::int64_t r2 = p2 % 3, q2 = p2 / 3;
  if (i == p2 - 1) return r2 == 1 ? 2 * (p2 - 1) : 2 * p2 + 1;
  std::int64_t u = i / 3, v = i % 3;
  if (r2 == 1) {
    if (v == 0) return u <= q2 / 2 - 1 ? 8 * u + 6 : 4 * u + 2 * q2 + 2;
    return u <= q2 / 2 - 1 ? 8 * (u + 1) : 4 * (u + 1 + q2 / 2);
  }
  // r2 = 2, q2 odd. The v = 0 branch is extended to u = q2 (i = 3*q2),
  // which the stated range leaves uncovered; block tables confirm it.
  if (v == 0) return u <= (q2 - 1) / 2 ? 8 * u + 6 : 4 * u + 5 + 2 * q2;
  return u <= (q2 - 1) / 2 ? 8 * (u + 1) : 4 * (u + 1 + (q2 + 1) / 2);
}

std::int64_t hw_block_trunc(std::int64_t p2, std::int64_t i) {
  if (!is_prime(p2) || p2 <= 3)
    throw std::domain_error("hw_block_trunc requires a prime p2 > 3");
  std::int64_t phi = 2 * (p2 - 1);
  if (i < 0 || i >= phi) throw std::domain_error("block row out of range");
  if (i >= p2) return 0;
  std::int64_t r2 = p2 % 3, q2 = p2 / 3;
  std::int64_t u = i / 3, v = i % 3;
  if (r2 == 1) {
    if (v == 0) return u <= q2 / 2 - 1 ? 2 : 1;
    return u <= q2 / 2 - 1 ? 1 : 3 - v;
  }
  if (v == 0) return u <= (q2 - 1) / 2 ? 2 : 1;
  return u <= (q2 - 3) / 2 ? 1 : v;
}

std::pair<Rational, Rational> hw_linear_coeffs(std::int64_t m, std::int64_t r,
                                               std::int64_t witness_bound) {
  if (std::gcd(m, r) != 1)
    throw std::domain_error("residue not coprime to modulus");
  std::int64_t witness = 0;
  for (std::int64_t p = m + 1; p <= witness_bound; ++p) {
    if (p % m == ((r % m) + m) % m && is_prime(p)) {
      witness = p;
      break;
    }
  }
  if (witness == 0)
    throw std::domain_error("no witness prime found under search bound");

  BlockTable table = partition_sliced(m, witness);
  std::int64_t s = 0, t = 0;
  for (std::int64_t w : table.hw_full()) s += w;
  for (std::int64_t w : table.hw_trunc()) t += w;
  Rational a(s, m);
  Rational b = Rational(t) - Rational(r % m, m) * Rational(s);

  std::int64_t actual =
      static_cast<std::int64_t>(binary_expand(m, witness).hamming_weight());
  if ((a * Rational(witness) + b).to_integer() != actual)
    throw std::logic_error("linear law failed on its own witness");
  return {a, b};
}

ValidationEntry hw_general_thm11(std::int64_t p1, std::int64_t p2,
                                 std::int64_t p3,
                                 std::int64_t oracle_degree_cap) {
  if (!(is_prime(p1) && is_prime(p2) && is_prime(p3)) ||
      !(p1 < p2 && p2 < p3) || p1 == 2)
    throw std::domain_error("requires odd primes p1 < p2 < p3");
  if (p3 <= p1 * p2) throw std::domain_error("requires p3 > p1*p2");
  std::int64_t r2 = p2 % p1;
  if (r2 != 1 && r2 != p1 - 1)
    throw std::domain_error("r2 not in {1, p1-1}");
  std::int64_t r3 = p3 % (p1 * p2);
  if (r3 != 1 && r3 != p1 * p2 - 1)
    throw FormulaNotApplicable("r3 not in {1, p1*p2-1}");

  Rational n = Rational(2, 3) *
               Rational((p1 - 1) * ((p1 + 4) * (p2 - 1) - (r2 - 1)), p1 * p2);
  Rational value = r3 == 1 ? n * Rational(p3 - 1) + Rational(1)
                           : n * Rational(p3 + 1) - Rational(1);

  ValidationEntry entry;
  entry.formula = "hw_general_thm11";
  {
    std::ostringstream params;
    params << "p1=" << p1 << " p2=" << p2 << " p3=" << p3;
    entry.params = params.str();
  }
  entry.formula_value = value.to_string();
  entry.gating = false;  // imported from prior work; validated, not trusted
  try {
    std::int64_t oracle = hw_oracle(p1, p2, p3, oracle_degree_cap);
    entry.oracle_value = std::to_string(oracle);
    entry.verdict = value.is_integer() && value.to_integer() == oracle
                        ? Verdict::agree
                        : Verdict::disagree;
  } catch (const OracleInfeasible& e) {
    entry.verdict = Verdict::unchecked;
    entry.note = e.what();
  }
  return entry;
}

std::int64_t phi3p2_coeff_law(std::int64_t p2, std::int64_t i) {
  std::int64_t phi = 2 * (p2 - 1);
  if (i < 0 || i > phi)
    throw std::domain_error("coefficient index out of range");
  if (i <= p2 - 1) {
    switch (i % 3) {
      case 0: return 1;
      case 1: return -1;
      default: return 0;
    }
  }
  switch (i % 3) {
    case 0: return 0;
    case 1: return -1;
    default: return 1;
  }
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return a % b != 0 && (a < 0) != (b < 0) ? q - 1 : q;
}

// (1 - x^step_gap) * sum_{j=0}^{count-1} x^{step*j}, assembled termwise.
IntPolynomial comb(std::int64_t upper, std::int64_t step,
                   std::int64_t minus_offset) {
  IntPolynomial acc;
  for (std::int64_t j = 0; j <= upper; ++j) {
    acc = acc + IntPolynomial::monomial(1, static_cast<std::size_t>(j * step));
    acc = acc - IntPolynomial::monomial(
                    1, static_cast<std::size_t>(j * step + minus_offset));
  }
  return acc;
}

}  // namespace

IntPolynomial truncation_law(std::int64_t p2, std::int64_t i) {
  if (!is_prime(p2) || p2 <= 3)
    throw std::domain_error("truncation_law requires a prime p2 > 3");
  std::int64_t q2 = p2 / 3, r2 = p2 % 3;
  std::int64_t phi = 2 * (p2 - 1);

  if (i >= 1 && i <= p2 - 2) {
    if (i % 3 == 0)
      return comb(floor_div(i - 1, 3), 3, 1) +
             IntPolynomial::monomial(1, static_cast<std::size_t>(i));
    return comb(i / 3, 3, 1);
  }
  if (i >= p2 - 1 && i <= phi - 2) {
    if (r2 != 1)
      throw std::domain_error("upper truncation lemma requires p2 = 1 mod 3");
    IntPolynomial base = comb(q2 - 1, 3, 1);
    std::int64_t upper = floor_div(i - p2 - 1, 3);
    IntPolynomial mid;
    if (upper >= 0)
      mid = comb(upper, 3, 2) *
            IntPolynomial::monomial(1, static_cast<std::size_t>(p2 - 1));
    IntPolynomial tail =
        i % 3 == 0
            ? IntPolynomial::monomial(1, static_cast<std::size_t>(i))
            : IntPolynomial::monomial(1, static_cast<std::size_t>(i - 1));
    return base + mid + tail;
  }
  throw std::domain_error("i out of lemma range");
}

}  // namespace cyclo
