#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/report.hpp"

namespace cyclo {

/// Configuration of one validation sweep.
struct SweepConfig {
  std::vector<std::int64_t> p2_set;
  std::int64_t p3_bound = 0;
  bool r3_case_plus2 = true;   // p3 =  2 (mod 3 p2)
  bool r3_case_minus2 = true;  // p3 = -2 (mod 3 p2)
  std::int64_t oracle_degree_cap = kDefaultOracleDegreeCap;
  int worker_count = 1;

  /// Throws std::domain_error on invalid members.
  void validate() const;
  std::string to_json() const;
};

/// All primes p in (modulus, bound] with p = residue (mod modulus),
/// ascending; trial-division primality. Throws std::domain_error when
/// gcd(residue, modulus) != 1.
std::vector<std::int64_t> primes_in_class(std::int64_t modulus,
                                          std::int64_t residue,
                                          std::int64_t bound);

/// Runs every formula check in scope over the configured (p2, p3) grid and
/// returns the merged ledger, deterministically ordered regardless of
/// worker count. Oracle infeasibility yields "unchecked" entries, never an
/// abort.
ValidationReport run_sweep(const SweepConfig& cfg);

}  // namespace cyclo
