#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/intpoly.hpp"
#include "cyclo/rational.hpp"
#include "cyclo/report.hpp"

namespace cyclo {

/// Validated parameter triple (3, p2, p3) with the derived residues and
/// quotients. The closed-form weight theorems additionally require
/// r3 in {2, 3*p2 - 2}; construction does not, so the oracle path can run
/// on any valid triple.
struct TernaryParams {
  std::int64_t p2 = 0, p3 = 0;
  std::int64_t r2 = 0, q2 = 0;  // p2 = 3*q2 + r2, r2 in {1, 2}
  std::int64_t r3 = 0, q3 = 0;  // p3 = 3*p2*q3 + r3

  /// Throws std::domain_error unless p2, p3 are primes > 3 with p3 > 3*p2.
  static TernaryParams create(std::int64_t p2, std::int64_t p3);

  bool formula_applicable() const { return r3 == 2 || r3 == 3 * p2 - 2; }
};

struct FormulaNotApplicable : std::domain_error {
  using std::domain_error::domain_error;
};

/// Slope of the linear weight law for Phi_{3 p2 p3}:
///   r2 = 1:  N = 7 (p2^2 - 1) / (9 p2)
///   r2 = 2:  N = (p2 + 1)(7 p2 - 2) / (9 p2)
Rational slope_N(std::int64_t p2);

/// Constant term C of the weight law: (4 p2 - 1)/3 for r2 = 1,
/// (4 p2 + 1)/3 for r2 = 2. Always an exact integer.
std::int64_t ternary_constant(std::int64_t p2);

/// Closed-form hw(Phi_{3 p2 p3}):
///   r3 = 2:         N (p3 - 2) + C
///   r3 = 3 p2 - 2:  N (p3 + 2) - C
/// The rational arithmetic must cancel exactly to an integer; anything
/// else is a hard internal error. Throws FormulaNotApplicable for other r3.
std::int64_t hw_ternary(const TernaryParams& params);

/// Negative-control variant using the constant 4(p2+1)/3 as printed in one
/// of the paper's restatements; exists so the harness can demonstrate that
/// a one-off constant error is caught by the oracle.
std::int64_t hw_ternary_misprint_constant(const TernaryParams& params);

/// Predicted hw(f_{3p2, p3, i, 0}) for 0 <= i <= phi(3 p2) - 1.
/// Case dispatch on (r2, i mod 3, u-range); the upper half of the range is
/// covered by the palindromic symmetry hw(i) = hw(phi(3p2) - 1 - i).
/// Independent of p3 within a residue class.
std::int64_t hw_block_full(std::int64_t p2, std::int64_t i);

/// Predicted hw(f_{3p2, p3, i, q}) for the r3 = 2 residue class
/// (the truncated column there is T_2 of the repeat block). Zero for i >= p2.
std::int64_t hw_block_trunc(std::int64_t p2, std::int64_t i);

/// (A, B) of the linear/parallel law hw(Phi_{mp}) = A p + B for primes
/// p = r (mod m): A = S/m, B = T - (r/m) S where S, T are the repeat/trunc
/// weight sums of one witness block table. Verified against the witness
/// before returning. Throws if no witness prime is found under the bound.
std::pair<Rational, Rational> hw_linear_coeffs(
    std::int64_t m, std::int64_t r, std::int64_t witness_bound = 100000);

/// The general-case weight formula imported from prior work, validated
/// (never trusted): computes both the formula value and the oracle value
/// and returns the ledger entry. Requires p3 = +-1 (mod p1 p2).
ValidationEntry hw_general_thm11(
    std::int64_t p1, std::int64_t p2, std::int64_t p3,
    std::int64_t oracle_degree_cap = kDefaultOracleDegreeCap);

/// Coefficient of x^i in Phi_{3 p2} as printed (pattern on i mod 3 in two
/// ranges). Known to disagree with the true Phi_{3 p2} in the second range
/// for p2 = 1 (mod 3); callers compare against cyclotomic(3 p2) and record
/// the verdict.
std::int64_t phi3p2_coeff_law(std::int64_t p2, std::int64_t i);

/// Predicted T_{i+1} Phi_{3 p2} from the truncation lemmas as printed
/// (valid i ranges: 1..p2-2 for any p2, and p2-1..phi(3p2)-2 when
/// p2 = 1 mod 3). Callers validate against the truncated Phi_{3 p2}.
IntPolynomial truncation_law(std::int64_t p2, std::int64_t i);

}  // namespace cyclo
