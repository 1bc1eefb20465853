#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "cyclo/harness.hpp"
#include "cyclo/report.hpp"

using cyclo::SweepConfig;

TEST_CASE("primes in a residue class") {
  CHECK(cyclo::primes_in_class(21, 2, 110) ==
        std::vector<std::int64_t>{23, 107});
  CHECK(cyclo::primes_in_class(15, 13, 60) == std::vector<std::int64_t>{43});
  CHECK(cyclo::primes_in_class(21, 23, 110) ==
        std::vector<std::int64_t>{23, 107});  // residue reduced mod 21
  CHECK(cyclo::primes_in_class(15, 2, 16).empty());
  CHECK_THROWS_AS(cyclo::primes_in_class(21, 14, 100), std::domain_error);
  CHECK_THROWS_AS(cyclo::primes_in_class(21, 2, 21), std::domain_error);
}

TEST_CASE("config validation") {
  SweepConfig cfg;
  cfg.p2_set = {5, 7};
  cfg.p3_bound = 200;
  CHECK_NOTHROW(cfg.validate());

  SweepConfig bad = cfg;
  bad.p2_set = {5, 9};
  CHECK_THROWS_AS(bad.validate(), std::domain_error);

  bad = cfg;
  bad.p3_bound = 21;
  CHECK_THROWS_AS(bad.validate(), std::domain_error);

  bad = cfg;
  bad.r3_case_plus2 = bad.r3_case_minus2 = false;
  CHECK_THROWS_AS(bad.validate(), std::domain_error);

  bad = cfg;
  bad.worker_count = 0;
  CHECK_THROWS_AS(bad.validate(), std::domain_error);

  CHECK(cfg.to_json() ==
        "{\"p2_set\":[5,7],\"p3_bound\":200,\"r3_cases\":[\"2\",\"minus2\"],"
        "\"oracle_degree_cap\":50000000,\"worker_count\":1}");
}

TEST_CASE("sweep over a desk-scale grid") {
  SweepConfig cfg;
  cfg.p2_set = {5, 7};
  cfg.p3_bound = 300;
  cyclo::ValidationReport report = cyclo::run_sweep(cfg);

  CHECK(!report.entries.empty());
  CHECK(report.gating_disagreements() == 0);
  std::size_t hw_entries = 0;
  for (const auto& e : report.entries)
    if (e.formula == "hw_ternary") {
      ++hw_entries;
      CHECK(e.verdict == cyclo::Verdict::agree);
    }
  // four residue classes with a handful of primes each below 300
  CHECK(hw_entries >= 20);

  bool found_block_rows = false, found_structure = false;
  for (const auto& e : report.entries) {
    if (e.formula == "hw_block_full") found_block_rows = true;
    if (e.formula == "intra_symmetry") found_structure = true;
  }
  CHECK(found_block_rows);
  CHECK(found_structure);
}

TEST_CASE("sweep is deterministic across worker counts") {
  SweepConfig cfg;
  cfg.p2_set = {5};
  cfg.p3_bound = 200;

  cfg.worker_count = 1;
  std::string serial = cyclo::report_to_csv(cyclo::run_sweep(cfg));
  cfg.worker_count = 4;
  std::string parallel = cyclo::report_to_csv(cyclo::run_sweep(cfg));
  cfg.worker_count = 7;
  std::string odd = cyclo::report_to_csv(cyclo::run_sweep(cfg));
  CHECK(serial == parallel);
  CHECK(serial == odd);
}

TEST_CASE("oracle infeasibility is recorded, never fatal") {
  SweepConfig cfg;
  cfg.p2_set = {5};
  cfg.p3_bound = 200;
  cfg.oracle_degree_cap = 100;  // below phi(15) * 17: every pair infeasible
  cyclo::ValidationReport report = cyclo::run_sweep(cfg);
  CHECK(report.gating_disagreements() == 0);
  for (const auto& e : report.entries)
    if (e.formula == "hw_ternary") {
      CHECK(e.verdict == cyclo::Verdict::unchecked);
      CHECK(!e.oracle_value.has_value());
      CHECK(e.note.find("infeasible") != std::string::npos);
    }
}

TEST_CASE("empty p2 set yields an empty ledger") {
  SweepConfig cfg;
  cfg.p3_bound = 100;
  CHECK(cyclo::run_sweep(cfg).entries.empty());
}
