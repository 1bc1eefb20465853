#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "cyclo/blocks.hpp"
#include "cyclo/closedform.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/rational.hpp"

using cyclo::Rational;
using cyclo::TernaryParams;

TEST_CASE("rational arithmetic") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(22, 5) * Rational(15)) == Rational(66));
  CHECK(Rational(16, 3).to_string() == "16/3");
  CHECK(Rational(7).to_string() == "7");
  CHECK(Rational(14, 2).is_integer());
  CHECK(Rational(14, 2).to_integer() == 7);
  CHECK_THROWS_AS(Rational(1, 3).to_integer(), std::logic_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parameter validation") {
  TernaryParams t = TernaryParams::create(7, 23);
  CHECK(t.r2 == 1);
  CHECK(t.q2 == 2);
  CHECK(t.r3 == 2);
  CHECK(t.q3 == 1);
  CHECK(t.formula_applicable());

  CHECK(TernaryParams::create(7, 61).r3 == 19);  // 3*7 - 2
  CHECK(TernaryParams::create(7, 61).formula_applicable());
  CHECK(!TernaryParams::create(7, 29).formula_applicable());

  CHECK_THROWS_AS(TernaryParams::create(9, 29), std::domain_error);
  CHECK_THROWS_AS(TernaryParams::create(3, 29), std::domain_error);
  CHECK_THROWS_AS(TernaryParams::create(7, 21), std::domain_error);
  CHECK_THROWS_AS(TernaryParams::create(7, 20), std::domain_error);
}

TEST_CASE("slope and constant") {
  CHECK(cyclo::slope_N(7) == Rational(16, 3));      // 7*48/63
  CHECK(cyclo::slope_N(5) == Rational(22, 5));      // 6*33/45
  CHECK(cyclo::slope_N(13) == Rational(392, 39));
  CHECK(cyclo::slope_N(283) == Rational(186872, 849));
  CHECK(cyclo::ternary_constant(7) == 9);
  CHECK(cyclo::ternary_constant(5) == 7);
  CHECK(cyclo::ternary_constant(283) == 377);
  CHECK_THROWS_AS(cyclo::slope_N(9), std::domain_error);
}

TEST_CASE("closed-form weights") {
  CHECK(cyclo::hw_ternary(TernaryParams::create(7, 23)) == 121);
  CHECK(cyclo::hw_ternary(TernaryParams::create(7, 61)) == 327);
  CHECK(cyclo::hw_ternary(TernaryParams::create(5, 17)) == 73);
  CHECK(cyclo::hw_ternary(TernaryParams::create(5, 43)) == 191);
  CHECK(cyclo::hw_ternary(TernaryParams::create(283, 84916133)) ==
        18690750945LL);
  CHECK_THROWS_AS(cyclo::hw_ternary(TernaryParams::create(7, 29)),
                  cyclo::FormulaNotApplicable);

  // negative control: one-off constant shifts every r3 = 2 value by +1
  CHECK(cyclo::hw_ternary_misprint_constant(TernaryParams::create(5, 17)) ==
        74);
  CHECK(cyclo::hw_ternary_misprint_constant(TernaryParams::create(5, 17)) !=
        cyclo::hw_oracle(3, 5, 17));
}

TEST_CASE("per-block weight predictions") {
  std::vector<std::int64_t> full7, trunc7;
  for (std::int64_t i = 0; i < 12; ++i) {
    full7.push_back(cyclo::hw_block_full(7, i));
    trunc7.push_back(cyclo::hw_block_trunc(7, i));
  }
  CHECK(full7 ==
        std::vector<std::int64_t>{6, 8, 8, 10, 12, 12, 12, 12, 10, 8, 8, 6});
  CHECK(trunc7 ==
        std::vector<std::int64_t>{2, 1, 1, 1, 2, 1, 1, 0, 0, 0, 0, 0});

  std::vector<std::int64_t> full11;
  for (std::int64_t i = 0; i < 20; ++i)
    full11.push_back(cyclo::hw_block_full(11, i));
  CHECK(full11 ==
        std::vector<std::int64_t>{6, 8, 8, 14, 16, 16, 19, 20, 20, 23,
                                  23, 20, 20, 19, 16, 16, 14, 8, 8, 6});

  // against sliced tables for a fresh pair in each residue class
  for (auto [p2, p3] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {5, 17}, {5, 43}, {13, 41}, {13, 193}}) {
    cyclo::BlockTable table = cyclo::partition_sliced(3 * p2, p3);
    auto full = table.hw_full();
    for (std::int64_t i = 0; i < cyclo::euler_phi(3 * p2); ++i) {
      INFO("p2=", p2, " p3=", p3, " i=", i);
      CHECK(cyclo::hw_block_full(p2, i) == full[static_cast<std::size_t>(i)]);
      if (p3 % (3 * p2) == 2)
        CHECK(cyclo::hw_block_trunc(p2, i) ==
              table.hw_trunc()[static_cast<std::size_t>(i)]);
    }
  }
  CHECK_THROWS_AS(cyclo::hw_block_full(7, 12), std::domain_error);
  CHECK_THROWS_AS(cyclo::hw_block_trunc(7, -1), std::domain_error);
}

TEST_CASE("linear law coefficients") {
  auto [a, b] = cyclo::hw_linear_coeffs(21, 2);
  CHECK((a * Rational(23) + b).to_integer() == 121);
  CHECK((a * Rational(107) + b).to_integer() == 569);
  CHECK((a * Rational(149) + b).to_integer() == 793);

  auto [a2, b2] = cyclo::hw_linear_coeffs(21, 19);
  CHECK((a2 * Rational(61) + b2).to_integer() == 327);

  CHECK_THROWS_AS(cyclo::hw_linear_coeffs(21, 14), std::domain_error);
  CHECK_THROWS_AS(cyclo::hw_linear_coeffs(21, 2, /*witness_bound=*/22),
                  std::domain_error);
}

TEST_CASE("imported general formula is validated, not trusted") {
  cyclo::ValidationEntry e43 = cyclo::hw_general_thm11(3, 7, 43);
  CHECK(e43.formula_value == "113");
  CHECK(e43.oracle_value == "113");
  CHECK(e43.verdict == cyclo::Verdict::agree);
  CHECK(!e43.gating);

  cyclo::ValidationEntry e41 = cyclo::hw_general_thm11(3, 7, 41);
  CHECK(e41.formula_value == "111");
  CHECK(e41.verdict == cyclo::Verdict::agree);

  cyclo::ValidationEntry capped =
      cyclo::hw_general_thm11(3, 7, 41, /*oracle_degree_cap=*/100);
  CHECK(capped.verdict == cyclo::Verdict::unchecked);
  CHECK(!capped.oracle_value.has_value());

  CHECK_THROWS_AS(cyclo::hw_general_thm11(3, 7, 23),
                  cyclo::FormulaNotApplicable);
  CHECK_THROWS_AS(cyclo::hw_general_thm11(2, 3, 7), std::domain_error);
}

TEST_CASE("printed coefficient pattern of Phi_{3 p2}") {
  // exact for p2 = 2 (mod 3)
  for (std::int64_t p2 : {5, 11}) {
    cyclo::IntPolynomial phi = cyclo::cyclotomic(3 * p2);
    for (std::int64_t i = 0; i <= 2 * (p2 - 1); ++i)
      CHECK(cyclo::phi3p2_coeff_law(p2, i) ==
            phi.coeff(static_cast<std::size_t>(i)));
  }
  // the second-range pattern as printed misses Phi_21 (p2 = 1 mod 3)
  {
    cyclo::IntPolynomial phi = cyclo::cyclotomic(21);
    bool mismatch = false;
    for (std::int64_t i = 7; i <= 12; ++i)
      if (cyclo::phi3p2_coeff_law(7, i) !=
          phi.coeff(static_cast<std::size_t>(i)))
        mismatch = true;
    CHECK(mismatch);
  }
  CHECK_THROWS_AS(cyclo::phi3p2_coeff_law(7, 13), std::domain_error);
}

TEST_CASE("printed truncation lemmas") {
  // lower range holds for both residue classes
  for (std::int64_t p2 : {5, 7, 11, 13}) {
    cyclo::IntPolynomial phi = cyclo::cyclotomic(3 * p2);
    for (std::int64_t i = 1; i <= p2 - 2; ++i) {
      INFO("p2=", p2, " i=", i);
      CHECK(cyclo::truncation_law(p2, i) ==
            truncate(phi, static_cast<std::size_t>(i + 1)));
    }
  }
  // upper range (p2 = 1 mod 3 only): the i = 2 (mod 3) addend as printed
  // produces at least one mismatch against the true truncation
  {
    cyclo::IntPolynomial phi = cyclo::cyclotomic(21);
    int mismatches = 0;
    for (std::int64_t i = 6; i <= 10; ++i)
      if (cyclo::truncation_law(7, i) !=
          truncate(phi, static_cast<std::size_t>(i + 1)))
        ++mismatches;
    CHECK(mismatches >= 1);
  }
  CHECK_THROWS_AS(cyclo::truncation_law(5, 4), std::domain_error);
  CHECK_THROWS_AS(cyclo::truncation_law(7, 0), std::domain_error);
}
