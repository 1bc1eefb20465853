#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclo/intpoly.hpp"

namespace cyclo {

/// n as a product of prime powers, primes strictly increasing.
struct Factorization {
  std::int64_t n = 1;
  std::vector<std::pair<std::int64_t, int>> prime_powers;

  bool is_squarefree() const;
  bool is_odd() const { return n % 2 != 0; }
};

Factorization factorize(std::int64_t n);
bool is_prime(std::int64_t n);
int mobius(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

/// Phi_n, computed by iterated exact division of x^n - 1 by Phi_d over the
/// proper divisors d | n. Results are memoized in a process-wide cache that
/// is safe for concurrent use.
IntPolynomial cyclotomic(std::int64_t n);
void clear_cyclotomic_cache();

/// Psi_m = (x^m - 1) / Phi_m.
IntPolynomial inverse_cyclotomic(std::int64_t m);

/// Phi_{mp} = Phi_m(x^p) / Phi_m(x) for prime p with p coprime to m.
IntPolynomial binary_expand(std::int64_t m, std::int64_t p);

/// Thrown when the brute-force expansion would exceed the degree cap.
struct OracleInfeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultOracleDegreeCap = 50'000'000;

/// Degree of the intermediate Phi_{p1 p2}(x^{p3}) the oracle must hold.
std::int64_t oracle_working_degree(std::int64_t p1, std::int64_t p2,
                                   std::int64_t p3);

/// Ground-truth Hamming weight of Phi_{p1 p2 p3} by full expansion.
/// Requires p1 < p2 < p3 distinct odd primes. Throws OracleInfeasible when
/// the working degree exceeds `degree_cap`.
std::int64_t hw_oracle(std::int64_t p1, std::int64_t p2, std::int64_t p3,
                       std::int64_t degree_cap = kDefaultOracleDegreeCap);

}  // namespace cyclo
