#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclo/intpoly.hpp"

namespace cyclo {

/// Identifies one block f_{m,p,i,j} of Phi_{mp}.
///
/// Block (i, j) occupies the exponent window [i*p + j*m, i*p + j*m + m)
/// of Phi_{mp} (the last column j = q is cut short to length r).
struct BlockKey {
  std::int64_t m = 0;  // squarefree odd, > 1
  std::int64_t p = 0;  // prime, p > m, gcd(m, p) = 1
  std::int64_t i = 0;  // 0 <= i <= phi(m) - 1
  std::int64_t j = 0;  // 0 <= j <= q

  std::int64_t r() const { return p % m; }
  std::int64_t q() const { return p / m; }

  /// Throws std::domain_error on any violated range constraint.
  void validate() const;
};

/// The block polynomial, degree < m, by the operator formula:
///   j < q:  -R_{ir}( rem(Psi_m * E_r T_{i+1} Phi_m, x^m - 1) )
///   j = q:  T_r of the j = 0 block.
IntPolynomial block(const BlockKey& key);

/// Single coefficient c_k of f_{m,p,i,0} without building the whole block:
///   c_k = -sum_{s=0}^{i} a_s * b_{rem(k + (i-s) r, m)}.
/// Also meaningful for p < m (r = p mod m), which check_inter relies on.
std::int64_t block_coeff(std::int64_t m, std::int64_t p, std::int64_t i,
                         std::int64_t k);

/// Whole repeat block via block_coeff; valid for any p coprime to m.
IntPolynomial repeat_block_formula(std::int64_t m, std::int64_t p,
                                   std::int64_t i);

struct PartitionMismatch : std::logic_error {
  PartitionMismatch(std::int64_t i, std::int64_t j, std::string what)
      : std::logic_error(std::move(what)), i(i), j(j) {}
  std::int64_t i, j;
};

/// All blocks of one Phi_{mp}, built by slicing the expanded polynomial.
struct BlockTable {
  std::int64_t m = 0, p = 0;
  std::vector<IntPolynomial> repeat_blocks;  // f_{m,p,i,0}, one per row i
  std::vector<IntPolynomial> trunc_blocks;   // f_{m,p,i,q}

  std::vector<std::int64_t> hw_full() const;
  std::vector<std::int64_t> hw_trunc() const;
};

/// Builds the table two ways -- slicing Phi_{mp} (definitional) and the
/// block() formula (the claim under test) -- and reconciles them exactly.
/// Throws PartitionMismatch on the first differing (i, j).
BlockTable partition(std::int64_t m, std::int64_t p);

/// Slicing path only; no formula reconciliation. Used where the caller
/// wants the definitional table as ground truth.
BlockTable partition_sliced(std::int64_t m, std::int64_t p);

struct ClauseResult {
  std::string clause;
  bool pass = false;
  std::string witness;  // first failing index, empty on pass
};

struct StructureReport {
  std::vector<ClauseResult> clauses;
  bool all_pass() const;
};

/// Repetition, Truncation and Symmetry checks against the sliced Phi_{mp}.
/// Failures are data, not errors.
StructureReport check_intra(std::int64_t m, std::int64_t p);

enum class InterRelation { invariant, semi_invariant, not_comparable };

struct InterReport {
  InterRelation relation = InterRelation::not_comparable;
  std::vector<ClauseResult> clauses;
  bool all_pass() const;
};

/// Invariance (ptilde = p mod m) / Semi-Invariance (ptilde = -p mod m)
/// of the repeat blocks. A ptilde below m is handled through the
/// coefficient-formula route.
InterReport check_inter(std::int64_t m, std::int64_t p, std::int64_t ptilde);

}  // namespace cyclo
