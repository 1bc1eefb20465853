#include "cyclo/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cyclo/checked.hpp"
#include "cyclo/cyclotomic.hpp"

namespace cyclo {

void BlockKey::validate() const {
  if (m < 2 || !factorize(m).is_squarefree() || m % 2 == 0)
    throw std::domain_error("m must be squarefree odd and > 1");
  if (!is_prime(p) || p <= m)
    throw std::domain_error("p must be a prime > m");
  if (i < 0 || i >= euler_phi(m))
    throw std::domain_error("block row out of range");
  if (j < 0 || j > q()) throw std::domain_error("block column out of range");
}

IntPolynomial block(const BlockKey& key) {
  key.validate();
  std::size_t m = static_cast<std::size_t>(key.m);
  std::int64_t r = key.r();
  if (key.j == key.q()) {
    BlockKey head = key;
    head.j = 0;
    return truncate(block(head), static_cast<std::size_t>(r));
  }
  // -R_{ir} of the cyclically reduced product Psi_m * E_r T_{i+1} Phi_m.
  IntPolynomial product =
      inverse_cyclotomic(key.m) *
      expand(truncate(cyclotomic(key.m), static_cast<std::size_t>(key.i + 1)),
             r, m);
  return -rotate(rem_cyclic(product, m), key.i * r, m);
}

std::int64_t block_coeff(std::int64_t m, std::int64_t p, std::int64_t i,
                         std::int64_t k) {
  if (k < 0 || k >= m) throw std::domain_error("coefficient index out of range");
  IntPolynomial phi_m = cyclotomic(m);
  IntPolynomial psi_m = inverse_cyclotomic(m);
  std::int64_t r = p % m;
  std::int64_t acc = 0;
  for (std::int64_t s = 0; s <= i; ++s) {
    std::int64_t idx = (k + (i - s) * r) % m;
    acc = checked_add(acc, checked_mul(phi_m.coeff(s), psi_m.coeff(idx)));
  }
  return checked_sub(0, acc);
}

IntPolynomial repeat_block_formula(std::int64_t m, std::int64_t p,
                                   std::int64_t i) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k)
    v[static_cast<std::size_t>(k)] = block_coeff(m, p, i, k);
  return IntPolynomial(std::move(v));
}

std::vector<std::int64_t> BlockTable::hw_full() const {
  std::vector<std::int64_t> out;
  out.reserve(repeat_blocks.size());
  for (const auto& b : repeat_blocks)
    out.push_back(static_cast<std::int64_t>(b.hamming_weight()));
  return out;
}

std::vector<std::int64_t> BlockTable::hw_trunc() const {
  std::vector<std::int64_t> out;
  out.reserve(trunc_blocks.size());
  for (const auto& b : trunc_blocks)
    out.push_back(static_cast<std::int64_t>(b.hamming_weight()));
  return out;
}

namespace {

IntPolynomial slice(const IntPolynomial& f, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v;
  v.reserve(static_cast<std::size_t>(hi - lo));
  for (std::int64_t e = lo; e < hi; ++e)
    v.push_back(f.coeff(static_cast<std::size_t>(e)));
  return IntPolynomial(std::move(v));
}

}  // namespace

BlockTable partition_sliced(std::int64_t m, std::int64_t p) {
  BlockKey probe{m, p, 0, 0};
  probe.validate();
  IntPolynomial phi_mp = binary_expand(m, p);
  std::int64_t rows = euler_phi(m);
  std::int64_t q = p / m;
  BlockTable table;
  table.m = m;
  table.p = p;
  table.repeat_blocks.reserve(static_cast<std::size_t>(rows));
  table.trunc_blocks.reserve(static_cast<std::size_t>(rows));
  for (std::int64_t i = 0; i < rows; ++i) {
    table.repeat_blocks.push_back(slice(phi_mp, i * p, i * p + m));
    table.trunc_blocks.push_back(slice(phi_mp, i * p + q * m, (i + 1) * p));
  }
  return table;
}

BlockTable partition(std::int64_t m, std::int64_t p) {
  BlockTable table = partition_sliced(m, p);
  IntPolynomial phi_mp = binary_expand(m, p);
  std::int64_t rows = euler_phi(m);
  std::int64_t q = p / m;
  // The slicing path is definitional; the block() formula is the claim
  // under test. Any disagreement must fail loudly.
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::int64_t j = 0; j <= q; ++j) {
      IntPolynomial predicted = block({m, p, i, j});
      IntPolynomial actual =
          j == q ? table.trunc_blocks[static_cast<std::size_t>(i)]
                 : slice(phi_mp, i * p + j * m, i * p + (j + 1) * m);
      if (predicted != actual) {
        std::ostringstream msg;
        msg << "partition mismatch at m=" << m << " p=" << p << " i=" << i
            << " j=" << j;
        throw PartitionMismatch(i, j, msg.str());
      }
    }
  }
  return table;
}

bool StructureReport::all_pass() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const ClauseResult& c) { return c.pass; });
}

bool InterReport::all_pass() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const ClauseResult& c) { return c.pass; });
}

StructureReport check_intra(std::int64_t m, std::int64_t p) {
  BlockKey probe{m, p, 0, 0};
  probe.validate();
  IntPolynomial phi_mp = binary_expand(m, p);
  std::int64_t rows = euler_phi(m);
  std::int64_t q = p / m;
  std::int64_t r = p % m;

  StructureReport report;
  auto fail_witness = [](std::int64_t i, std::int64_t j) {
    std::ostringstream w;
    w << "i=" << i;
    if (j >= 0) w << " j=" << j;
    return w.str();
  };

  ClauseResult repetition{"repetition", true, ""};
  for (std::int64_t i = 0; i < rows && repetition.pass; ++i) {
    IntPolynomial first = slice(phi_mp, i * p, i * p + m);
    for (std::int64_t j = 1; j < q; ++j) {
      if (slice(phi_mp, i * p + j * m, i * p + (j + 1) * m) != first) {
        repetition.pass = false;
        repetition.witness = fail_witness(i, j);
        break;
      }
    }
  }
  report.clauses.push_back(std::move(repetition));

  ClauseResult truncation{"truncation", true, ""};
  for (std::int64_t i = 0; i < rows; ++i) {
    IntPolynomial head = slice(phi_mp, i * p, i * p + m);
    IntPolynomial tail = slice(phi_mp, i * p + q * m, (i + 1) * p);
    if (tail != truncate(head, static_cast<std::size_t>(r))) {
      truncation.pass = false;
      truncation.witness = fail_witness(i, -1);
      break;
    }
  }
  report.clauses.push_back(std::move(truncation));

  ClauseResult symmetry{"symmetry", true, ""};
  for (std::int64_t i = 0; i < rows; ++i) {
    std::int64_t ip = rows - 1 - i;
    IntPolynomial lhs = slice(phi_mp, ip * p, ip * p + m);
    IntPolynomial rhs =
        rotate(flip(slice(phi_mp, i * p, i * p + m),
                    static_cast<std::size_t>(m)),
               rows - 1 - r, static_cast<std::size_t>(m));
    if (lhs != rhs) {
      symmetry.pass = false;
      symmetry.witness = fail_witness(i, -1);
      break;
    }
  }
  report.clauses.push_back(std::move(symmetry));

  return report;
}

InterReport check_inter(std::int64_t m, std::int64_t p, std::int64_t ptilde) {
  if (!is_prime(p) || !is_prime(ptilde) || p % m == 0 || ptilde % m == 0)
    throw std::domain_error("check_inter requires primes coprime to m");
  std::int64_t rows = euler_phi(m);

  // Slicing is definitional but needs prime > m; the coefficient formula
  // covers sub-m primes and agrees with slicing whenever both apply.
  auto rows_for = [&](std::int64_t prime) {
    if (prime > m) return partition_sliced(m, prime).repeat_blocks;
    std::vector<IntPolynomial> out;
    for (std::int64_t i = 0; i < rows; ++i)
      out.push_back(repeat_block_formula(m, prime, i));
    return out;
  };

  InterReport report;
  if ((ptilde - p) % m == 0) {
    report.relation = InterRelation::invariant;
    auto lhs = rows_for(ptilde), rhs = rows_for(p);
    ClauseResult clause{"invariance", true, ""};
    for (std::int64_t i = 0; i < rows; ++i) {
      if (lhs[static_cast<std::size_t>(i)] != rhs[static_cast<std::size_t>(i)]) {
        clause.pass = false;
        clause.witness = "i=" + std::to_string(i);
        break;
      }
    }
    report.clauses.push_back(std::move(clause));
  } else if ((ptilde + p) % m == 0) {
    report.relation = InterRelation::semi_invariant;
    auto lhs = rows_for(ptilde), base = rows_for(p);
    ClauseResult clause{"semi_invariance", true, ""};
    for (std::int64_t i = 0; i < rows; ++i) {
      IntPolynomial rhs =
          -rotate(flip(base[static_cast<std::size_t>(i)],
                       static_cast<std::size_t>(m)),
                  rows - 1, static_cast<std::size_t>(m));
      if (lhs[static_cast<std::size_t>(i)] != rhs) {
        clause.pass = false;
        clause.witness = "i=" + std::to_string(i);
        break;
      }
    }
    report.clauses.push_back(std::move(clause));
  } else {
    report.relation = InterRelation::not_comparable;
  }
  return report;
}

}  // namespace cyclo
