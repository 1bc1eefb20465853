#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "cyclo/blocks.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/intpoly.hpp"

using cyclo::BlockKey;
using cyclo::IntPolynomial;

TEST_CASE("block key validation") {
  CHECK_NOTHROW((BlockKey{21, 23, 0, 0}.validate()));
  CHECK_NOTHROW((BlockKey{21, 23, 11, 1}.validate()));
  CHECK_THROWS_AS((BlockKey{4, 7, 0, 0}.validate()), std::domain_error);
  CHECK_THROWS_AS((BlockKey{9, 11, 0, 0}.validate()), std::domain_error);
  CHECK_THROWS_AS((BlockKey{21, 19, 0, 0}.validate()), std::domain_error);
  CHECK_THROWS_AS((BlockKey{21, 25, 0, 0}.validate()), std::domain_error);
  CHECK_THROWS_AS((BlockKey{21, 23, 12, 0}.validate()), std::domain_error);
  CHECK_THROWS_AS((BlockKey{21, 23, 0, 2}.validate()), std::domain_error);
}

TEST_CASE("operator-formula blocks equal definitional slices") {
  for (auto [m, p] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {15, 17}, {15, 43}, {21, 23}, {21, 61}, {33, 101}, {35, 37}}) {
    IntPolynomial phi_mp = cyclo::binary_expand(m, p);
    std::int64_t q = p / m;
    for (std::int64_t i = 0; i < cyclo::euler_phi(m); ++i) {
      for (std::int64_t j : {std::int64_t{0}, q}) {
        IntPolynomial b = cyclo::block({m, p, i, j});
        std::int64_t lo = i * p + j * m;
        std::int64_t hi = j == q ? (i + 1) * p : lo + m;
        std::vector<std::int64_t> window;
        for (std::int64_t e = lo; e < hi; ++e)
          window.push_back(phi_mp.coeff(static_cast<std::size_t>(e)));
        CHECK(b == IntPolynomial(std::move(window)));
      }
    }
  }
}

TEST_CASE("coefficient formula matches block()") {
  for (std::int64_t i = 0; i < 12; ++i) {
    IntPolynomial via_block = cyclo::block({21, 23, i, 0});
    IntPolynomial via_coeff = cyclo::repeat_block_formula(21, 23, i);
    CHECK(via_block == via_coeff);
    for (std::int64_t k = 0; k < 21; ++k)
      CHECK(cyclo::block_coeff(21, 23, i, k) ==
            via_block.coeff(static_cast<std::size_t>(k)));
  }
}

TEST_CASE("partition reconciles and reproduces the (21, 23) table") {
  cyclo::BlockTable table = cyclo::partition(21, 23);
  CHECK(table.hw_full() ==
        std::vector<std::int64_t>{6, 8, 8, 10, 12, 12, 12, 12, 10, 8, 8, 6});
  CHECK(table.hw_trunc() ==
        std::vector<std::int64_t>{2, 1, 1, 1, 2, 1, 1, 0, 0, 0, 0, 0});
  // the concatenated blocks are exactly Phi_{483}
  IntPolynomial phi = cyclo::binary_expand(21, 23);
  std::int64_t total = 0;
  for (std::int64_t w : table.hw_full()) total += w;
  std::int64_t q = 23 / 21;
  std::int64_t trunc_total = 0;
  for (std::int64_t w : table.hw_trunc()) trunc_total += w;
  CHECK(q * total + trunc_total ==
        static_cast<std::int64_t>(phi.hamming_weight()));
  CHECK_THROWS_AS(cyclo::partition(4, 7), std::domain_error);
}

TEST_CASE("partition reproduces the (33, 101) full row") {
  cyclo::BlockTable table = cyclo::partition(33, 101);
  CHECK(table.hw_full() ==
        std::vector<std::int64_t>{6, 8, 8, 14, 16, 16, 19, 20, 20, 23,
                                  23, 20, 20, 19, 16, 16, 14, 8, 8, 6});
  // trunc row totals 4*q2 + 3 = 15 (q2 = 3 for p2 = 11)
  std::int64_t trunc_total = 0;
  for (std::int64_t w : table.hw_trunc()) trunc_total += w;
  CHECK(trunc_total == 15);
}

TEST_CASE("intra-polynomial structure: repetition, truncation, symmetry") {
  for (auto [m, p] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {15, 17}, {21, 23}, {21, 107}, {33, 101}, {35, 37}, {105, 107}}) {
    cyclo::StructureReport report = cyclo::check_intra(m, p);
    CHECK(report.clauses.size() == 3);
    for (const auto& clause : report.clauses) {
      INFO("m=", m, " p=", p, " clause=", clause.clause,
           " witness=", clause.witness);
      CHECK(clause.pass);
    }
  }
}

TEST_CASE("inter-polynomial structure: invariance and semi-invariance") {
  // 23 = 107 = 2 (mod 21): invariant
  cyclo::InterReport inv = cyclo::check_inter(21, 23, 107);
  CHECK(inv.relation == cyclo::InterRelation::invariant);
  CHECK(inv.all_pass());

  // 61 = -23 (mod 21): semi-invariant
  cyclo::InterReport semi = cyclo::check_inter(21, 23, 61);
  CHECK(semi.relation == cyclo::InterRelation::semi_invariant);
  CHECK(semi.all_pass());

  // ptilde = 19 < m exercises the coefficient-formula route
  cyclo::InterReport sub = cyclo::check_inter(21, 23, 19);
  CHECK(sub.relation == cyclo::InterRelation::semi_invariant);
  CHECK(sub.all_pass());

  CHECK(cyclo::check_inter(21, 23, 37).relation ==
        cyclo::InterRelation::not_comparable);
  CHECK_THROWS_AS(cyclo::check_inter(21, 25, 23), std::domain_error);
}
