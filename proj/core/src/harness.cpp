#include "cyclo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "cyclo/blocks.hpp"
#include "cyclo/closedform.hpp"

namespace cyclo {

void SweepConfig::validate() const {
  for (std::int64_t p2 : p2_set)
    if (!is_prime(p2) || p2 <= 3)
      throw std::domain_error("p2_set entries must be primes > 3");
  if (!p2_set.empty()) {
    std::int64_t max_p2 = *std::max_element(p2_set.begin(), p2_set.end());
    if (p3_bound <= 3 * max_p2)
      throw std::domain_error("p3_bound must exceed 3*max(p2_set)");
  }
  if (!r3_case_plus2 && !r3_case_minus2)
    throw std::domain_error("at least one r3 case must be enabled");
  if (oracle_degree_cap < 1)
    throw std::domain_error("oracle_degree_cap must be positive");
  if (worker_count < 1)
    throw std::domain_error("worker_count must be positive");
}

std::string SweepConfig::to_json() const {
  std::ostringstream out;
  out << "{\"p2_set\":[";
  for (std::size_t k = 0; k < p2_set.size(); ++k)
    out << (k ? "," : "") << p2_set[k];
  out << "],\"p3_bound\":" << p3_bound << ",\"r3_cases\":[";
  bool first = true;
  if (r3_case_plus2) {
    out << "\"2\"";
    first = false;
  }
  if (r3_case_minus2) out << (first ? "" : ",") << "\"minus2\"";
  out << "],\"oracle_degree_cap\":" << oracle_degree_cap
      << ",\"worker_count\":" << worker_count << "}";
  return out.str();
}

std::vector<std::int64_t> primes_in_class(std::int64_t modulus,
                                          std::int64_t residue,
                                          std::int64_t bound) {
  if (modulus < 1 || bound <= modulus)
    throw std::domain_error("bound must exceed modulus");
  std::int64_t res = ((residue % modulus) + modulus) % modulus;
  if (std::gcd(res, modulus) != 1)
    throw std::domain_error("empty class: residue shares a factor with modulus");
  std::vector<std::int64_t> out;
  std::int64_t p = modulus + 1;
  while (p % modulus != res) ++p;
  for (; p <= bound; p += modulus)
    if (is_prime(p)) out.push_back(p);
  return out;
}

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << v[k];
  return out.str();
}

ValidationEntry predicate_entry(std::string formula, std::string params,
                                bool pass, std::string lhs, std::string rhs,
                                std::string note, bool gating = true) {
  ValidationEntry e;
  e.formula = std::move(formula);
  e.params = std::move(params);
  e.formula_value = std::move(lhs);
  e.oracle_value = std::move(rhs);
  e.verdict = pass ? Verdict::agree : Verdict::disagree;
  e.note = std::move(note);
  e.gating = gating;
  return e;
}

// One hw_ternary-vs-oracle comparison.
ValidationEntry hw_entry(std::int64_t p2, std::int64_t p3, std::int64_t cap) {
  TernaryParams params = TernaryParams::create(p2, p3);
  ValidationEntry e;
  e.formula = "hw_ternary";
  std::ostringstream ps;
  ps << "p2=" << p2 << " p3=" << p3;
  e.params = ps.str();
  e.formula_value = std::to_string(hw_ternary(params));
  try {
    std::int64_t oracle = hw_oracle(3, p2, p3, cap);
    e.oracle_value = std::to_string(oracle);
    e.verdict = e.formula_value == std::to_string(oracle) ? Verdict::agree
                                                          : Verdict::disagree;
  } catch (const OracleInfeasible& ex) {
    e.verdict = Verdict::unchecked;
    e.note = ex.what();
  }
  return e;
}

std::vector<ValidationEntry> class_checks(std::int64_t p2, std::int64_t residue,
                                          std::int64_t witness_p3) {
  std::int64_t m = 3 * p2;
  std::vector<ValidationEntry> out;
  std::ostringstream ps;
  ps << "p2=" << p2 << " r3=" << residue << " p3=" << witness_p3;
  std::string params = ps.str();

  // Explicit block formula against the definitional slicing.
  try {
    partition(m, witness_p3);
    out.push_back(predicate_entry("partition", params, true,
                                  "explicit-formula blocks", "sliced blocks",
                                  ""));
  } catch (const PartitionMismatch& ex) {
    out.push_back(predicate_entry("partition", params, false,
                                  "explicit-formula blocks", "sliced blocks",
                                  ex.what()));
  }

  StructureReport intra = check_intra(m, witness_p3);
  for (const auto& clause : intra.clauses)
    out.push_back(predicate_entry("intra_" + clause.clause, params,
                                  clause.pass, "structure theorem",
                                  "sliced blocks", clause.witness));

  BlockTable table = partition_sliced(m, witness_p3);
  std::int64_t rows = euler_phi(m);

  std::vector<std::int64_t> predicted_full, actual_full = table.hw_full();
  for (std::int64_t i = 0; i < rows; ++i)
    predicted_full.push_back(hw_block_full(p2, i));
  out.push_back(predicate_entry("hw_block_full", params,
                                predicted_full == actual_full,
                                join(predicted_full), join(actual_full), ""));

  if (residue == 2) {
    std::vector<std::int64_t> predicted_trunc,
        actual_trunc = table.hw_trunc();
    for (std::int64_t i = 0; i < rows; ++i)
      predicted_trunc.push_back(hw_block_trunc(p2, i));
    out.push_back(predicate_entry(
        "hw_block_trunc", params, predicted_trunc == actual_trunc,
        join(predicted_trunc), join(actual_trunc), ""));

    // c0 = c1 = 0 of the repeat block for i >= p2 (its T_2 column vanishes).
    bool pass = true;
    std::string witness;
    for (std::int64_t i = p2; i < rows; ++i) {
      const auto& b = table.repeat_blocks[static_cast<std::size_t>(i)];
      if (b.coeff(0) != 0 || b.coeff(1) != 0) {
        pass = false;
        witness = "i=" + std::to_string(i);
        break;
      }
    }
    out.push_back(predicate_entry("trunc_vanishes", params, pass,
                                  "c0=c1=0 for i>=p2", "sliced blocks",
                                  witness));
  }
  return out;
}

ValidationEntry inter_entry(std::int64_t p2, std::int64_t pa, std::int64_t pb) {
  std::int64_t m = 3 * p2;
  InterReport report = check_inter(m, pa, pb);
  std::ostringstream ps;
  ps << "p2=" << p2 << " p=" << pa << " ptilde=" << pb;
  std::string name = report.relation == InterRelation::invariant
                         ? "inter_invariance"
                         : "inter_semi_invariance";
  const auto& clause = report.clauses.front();
  return predicate_entry(name, ps.str(), clause.pass, "structure theorem",
                         "block tables", clause.witness);
}

ValidationEntry phi3p2_entry(std::int64_t p2) {
  IntPolynomial phi = cyclotomic(3 * p2);
  std::int64_t range = 2 * (p2 - 1);
  std::vector<std::int64_t> mismatches;
  for (std::int64_t i = 0; i <= range; ++i)
    if (phi3p2_coeff_law(p2, i) != phi.coeff(static_cast<std::size_t>(i)))
      mismatches.push_back(i);
  return predicate_entry(
      "phi3p2_coeff_law", "p2=" + std::to_string(p2), mismatches.empty(),
      "coefficient pattern as printed", "cyclotomic(3*p2)",
      mismatches.empty() ? ""
                         : "mismatch at i = " + join(mismatches),
      /*gating=*/false);
}

ValidationEntry truncation_entry(std::int64_t p2) {
  IntPolynomial phi = cyclotomic(3 * p2);
  std::int64_t upper = p2 % 3 == 1 ? 2 * (p2 - 1) - 2 : p2 - 2;
  std::vector<std::int64_t> mismatches;
  for (std::int64_t i = 1; i <= upper; ++i)
    if (truncation_law(p2, i) != truncate(phi, static_cast<std::size_t>(i + 1)))
      mismatches.push_back(i);
  return predicate_entry(
      "truncation_law", "p2=" + std::to_string(p2), mismatches.empty(),
      "truncation lemmas as printed", "truncated cyclotomic(3*p2)",
      mismatches.empty() ? "" : "mismatch at i = " + join(mismatches),
      /*gating=*/false);
}

}  // namespace

ValidationReport run_sweep(const SweepConfig& cfg) {
  cfg.validate();

  std::vector<std::function<std::vector<ValidationEntry>()>> tasks;
  std::vector<std::int64_t> p2_sorted = cfg.p2_set;
  std::sort(p2_sorted.begin(), p2_sorted.end());
  p2_sorted.erase(std::unique(p2_sorted.begin(), p2_sorted.end()),
                  p2_sorted.end());

  auto feasible = [&](std::int64_t p2, std::int64_t p3) {
    return oracle_working_degree(3, p2, p3) <= cfg.oracle_degree_cap;
  };

  for (std::int64_t p2 : p2_sorted) {
    std::int64_t m = 3 * p2;
    std::vector<std::int64_t> residues;
    if (cfg.r3_case_plus2) residues.push_back(2);
    if (cfg.r3_case_minus2) residues.push_back(m - 2);

    std::vector<std::int64_t> class_witnesses;
    for (std::int64_t residue : residues) {
      std::vector<std::int64_t> p3s =
          primes_in_class(m, residue, cfg.p3_bound);
      for (std::int64_t p3 : p3s)
        tasks.push_back([p2, p3, cap = cfg.oracle_degree_cap] {
          return std::vector<ValidationEntry>{hw_entry(p2, p3, cap)};
        });

      // Structure and per-block lemma checks run once per class, on the
      // smallest oracle-feasible witness.
      std::vector<std::int64_t> feasible_p3s;
      for (std::int64_t p3 : p3s)
        if (feasible(p2, p3)) feasible_p3s.push_back(p3);
      if (!feasible_p3s.empty()) {
        std::int64_t witness = feasible_p3s.front();
        class_witnesses.push_back(witness);
        tasks.push_back([p2, residue, witness] {
          return class_checks(p2, residue, witness);
        });
        if (feasible_p3s.size() > 1) {
          std::int64_t second = feasible_p3s[1];
          tasks.push_back([p2, witness, second] {
            return std::vector<ValidationEntry>{
                inter_entry(p2, witness, second)};
          });
        }
      }
    }
    if (class_witnesses.size() == 2) {
      std::int64_t a = class_witnesses[0], b = class_witnesses[1];
      tasks.push_back([p2, a, b] {
        return std::vector<ValidationEntry>{inter_entry(p2, a, b)};
      });
    }
    tasks.push_back([p2] {
      return std::vector<ValidationEntry>{phi3p2_entry(p2),
                                          truncation_entry(p2)};
    });
  }

  std::vector<std::vector<ValidationEntry>> results(tasks.size());
  int workers = std::min<int>(cfg.worker_count,
                              static_cast<int>(tasks.size()) + 1);
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) results[t] = tasks[t]();
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t t = next.fetch_add(1);
          if (t >= tasks.size() || failed.load()) return;
          try {
            results[t] = tasks[t]();
          } catch (const std::exception& ex) {
            std::lock_guard lock(error_mutex);
            failed = true;
            error = ex.what();
            return;
          }
        }
      });
    for (auto& th : pool) th.join();
    if (failed) throw std::runtime_error("sweep worker failed: " + error);
  }

  ValidationReport report;
  for (auto& chunk : results)
    for (auto& e : chunk) report.add(std::move(e));
  report.sort();
  return report;
}

}  // namespace cyclo
