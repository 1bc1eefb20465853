// Command-line surface: weight queries, block tables, validation sweeps
// and a formula-vs-expansion timing report.
//
// Exit codes: 0 success/agreement, 2 disagreement, 3 inapplicable or
// invalid domain input, 4 usage error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclo/blocks.hpp"
#include "cyclo/closedform.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/harness.hpp"
#include "cyclo/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 2;
constexpr int kExitDomain = 3;
constexpr int kExitUsage = 4;

struct FormatOpt {
  std::string kind = "human";
};

void add_format(CLI::App* cmd, FormatOpt& fmt) {
  cmd->add_option("--format", fmt.kind, "Output format")
      ->check(CLI::IsMember({"human", "csv", "json"}))
      ->capture_default_str();
}

int run_hw(std::int64_t p2, std::int64_t p3, const std::string& method,
           std::int64_t oracle_cap, const FormatOpt& fmt) {
  cyclo::TernaryParams params = cyclo::TernaryParams::create(p2, p3);

  std::optional<std::int64_t> formula_value, oracle_value;
  if (method == "formula" || method == "both") {
    if (!params.formula_applicable()) {
      std::cerr << "formula not applicable; use --method oracle\n";
      return kExitDomain;
    }
    formula_value = cyclo::hw_ternary(params);
  }
  if (method == "oracle" || method == "both") {
    try {
      oracle_value = cyclo::hw_oracle(3, p2, p3, oracle_cap);
    } catch (const cyclo::OracleInfeasible& e) {
      std::cerr << e.what() << "\n";
      return kExitDomain;
    }
  }

  std::string verdict;
  if (formula_value && oracle_value)
    verdict = *formula_value == *oracle_value ? "agree" : "disagree";

  if (fmt.kind == "csv") {
    std::cout << "p2,p3,formula_value,oracle_value,verdict\n"
              << p2 << ',' << p3 << ','
              << (formula_value ? std::to_string(*formula_value) : "") << ','
              << (oracle_value ? std::to_string(*oracle_value) : "") << ','
              << verdict << '\n';
  } else if (fmt.kind == "json") {
    nlohmann::json out;
    out["p2"] = p2;
    out["p3"] = p3;
    out["formula_value"] =
        formula_value ? nlohmann::json(*formula_value) : nlohmann::json(nullptr);
    out["oracle_value"] =
        oracle_value ? nlohmann::json(*oracle_value) : nlohmann::json(nullptr);
    out["verdict"] = verdict.empty() ? nlohmann::json(nullptr)
                                     : nlohmann::json(verdict);
    std::cout << out.dump(2) << '\n';
  } else {
    if (formula_value)
      std::cout << "formula: hw(Phi_{3*" << p2 << "*" << p3
                << "}) = " << *formula_value << '\n';
    if (oracle_value)
      std::cout << "oracle:  hw(Phi_{3*" << p2 << "*" << p3
                << "}) = " << *oracle_value << '\n';
    if (!verdict.empty()) std::cout << "verdict: " << verdict << '\n';
  }
  return verdict == "disagree" ? kExitDisagree : kExitOk;
}

int run_blocks(std::int64_t m, std::int64_t p, bool with_coeffs,
               const FormatOpt& fmt) {
  cyclo::BlockTable table = cyclo::partition(m, p);
  auto hw_full = table.hw_full();
  auto hw_trunc = table.hw_trunc();

  auto coeff_string = [](const cyclo::IntPolynomial& poly, std::int64_t len) {
    std::ostringstream out;
    for (std::int64_t k = 0; k < len; ++k)
      out << (k ? " " : "") << poly.coeff(static_cast<std::size_t>(k));
    return out.str();
  };
  std::int64_t r = p % m;

  if (fmt.kind == "csv") {
    std::cout << "i,hw_full,hw_trunc";
    if (with_coeffs) std::cout << ",coeffs_full,coeffs_trunc";
    std::cout << '\n';
    for (std::size_t i = 0; i < hw_full.size(); ++i) {
      std::cout << i << ',' << hw_full[i] << ',' << hw_trunc[i];
      if (with_coeffs)
        std::cout << ',' << coeff_string(table.repeat_blocks[i], m) << ','
                  << coeff_string(table.trunc_blocks[i], r);
      std::cout << '\n';
    }
  } else if (fmt.kind == "json") {
    nlohmann::json out;
    out["m"] = m;
    out["p"] = p;
    out["rows"] = nlohmann::json::array();
    for (std::size_t i = 0; i < hw_full.size(); ++i) {
      nlohmann::json row;
      row["i"] = i;
      row["hw_full"] = hw_full[i];
      row["hw_trunc"] = hw_trunc[i];
      if (with_coeffs) {
        row["coeffs_full"] = coeff_string(table.repeat_blocks[i], m);
        row["coeffs_trunc"] = coeff_string(table.trunc_blocks[i], r);
      }
      out["rows"].push_back(std::move(row));
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "block table of Phi_{" << m << "*" << p << "} (" <<
        hw_full.size() << " rows)\n";
    for (std::size_t i = 0; i < hw_full.size(); ++i) {
      std::cout << "i=" << i << "  hw_full=" << hw_full[i]
                << "  hw_trunc=" << hw_trunc[i];
      if (with_coeffs)
        std::cout << "  f_i0=" << table.repeat_blocks[i].to_string();
      std::cout << '\n';
    }
  }
  return kExitOk;
}

bool load_config(const std::string& path, cyclo::SweepConfig& cfg) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
    cfg.p2_set = j.at("p2_set").get<std::vector<std::int64_t>>();
    cfg.p3_bound = j.at("p3_bound").get<std::int64_t>();
    if (j.contains("r3_cases")) {
      auto cases = j["r3_cases"].get<std::vector<std::string>>();
      cfg.r3_case_plus2 =
          std::find(cases.begin(), cases.end(), "2") != cases.end();
      cfg.r3_case_minus2 =
          std::find(cases.begin(), cases.end(), "minus2") != cases.end();
    }
    if (j.contains("oracle_degree_cap"))
      cfg.oracle_degree_cap = j["oracle_degree_cap"].get<std::int64_t>();
    if (j.contains("worker_count"))
      cfg.worker_count = j["worker_count"].get<int>();
  } catch (const nlohmann::json::exception&) {
    return false;
  }
  return true;
}

int run_verify(const cyclo::SweepConfig& cfg, const std::string& out_path) {
  cyclo::ValidationReport report = cyclo::run_sweep(cfg);
  std::string ledger = cyclo::report_to_json(report, cfg.to_json());
  if (out_path == "-") {
    std::cout << ledger;
  } else {
    std::ofstream out(out_path);
    out << ledger;
    if (!out) {
      std::cerr << "cannot write " << out_path << '\n';
      return kExitUsage;
    }
  }
  std::size_t agree = report.count(cyclo::Verdict::agree);
  std::size_t disagree = report.count(cyclo::Verdict::disagree);
  std::size_t unchecked = report.count(cyclo::Verdict::unchecked);
  std::size_t gating = report.gating_disagreements();
  std::cerr << "entries: " << report.entries.size() << "  agree: " << agree
            << "  disagree: " << disagree << " (gating: " << gating
            << ")  unchecked: " << unchecked << '\n';
  return gating == 0 ? kExitOk : kExitDisagree;
}

int run_table(std::int64_t p2, const std::string& r3_case, std::int64_t count,
              const FormatOpt& fmt) {
  std::int64_t m = 3 * p2;
  std::int64_t residue = r3_case == "2" ? 2 : m - 2;
  cyclo::Rational n = cyclo::slope_N(p2);
  std::int64_t c = cyclo::ternary_constant(p2);

  std::vector<std::pair<std::int64_t, std::int64_t>> rows;
  for (std::int64_t p3 = m + 1;
       static_cast<std::int64_t>(rows.size()) < count; ++p3) {
    if (p3 % m != residue || !cyclo::is_prime(p3)) continue;
    rows.emplace_back(
        p3, cyclo::hw_ternary(cyclo::TernaryParams::create(p2, p3)));
  }

  if (fmt.kind == "json") {
    nlohmann::json out;
    out["p2"] = p2;
    out["r3"] = residue;
    out["N"] = n.to_string();
    out["C"] = c;
    out["rows"] = nlohmann::json::array();
    for (auto [p3, hw] : rows)
      out["rows"].push_back({{"p3", p3}, {"hw", hw}});
    std::cout << out.dump(2) << '\n';
  } else if (fmt.kind == "csv") {
    std::cout << "p3,hw,N_num,N_den,C\n";
    for (auto [p3, hw] : rows)
      std::cout << p3 << ',' << hw << ',' << n.num << ',' << n.den << ',' << c
                << '\n';
  } else {
    std::cout << "p2=" << p2 << "  r3=" << residue << "  N=" << n.to_string()
              << "  C=" << c << '\n';
    for (auto [p3, hw] : rows)
      std::cout << "p3=" << p3 << "  hw=" << hw << '\n';
  }
  return kExitOk;
}

int run_bench(std::int64_t p2, std::int64_t p3, int reps,
              std::int64_t oracle_cap) {
  cyclo::TernaryParams params = cyclo::TernaryParams::create(p2, p3);
  if (!params.formula_applicable()) {
    std::cerr << "formula not applicable for this pair\n";
    return kExitDomain;
  }
  if (cyclo::oracle_working_degree(3, p2, p3) > oracle_cap) {
    std::cerr << "oracle infeasible for this pair\n";
    return kExitDomain;
  }

  std::int64_t formula_value = cyclo::hw_ternary(params);
  std::int64_t oracle_value = cyclo::hw_oracle(3, p2, p3, oracle_cap);
  if (formula_value != oracle_value) {
    std::cerr << "formula and oracle disagree: " << formula_value << " vs "
              << oracle_value << '\n';
    return kExitDisagree;
  }

  auto median_ns = [&](auto&& body) {
    std::vector<double> samples;
    for (int rep = 0; rep < reps; ++rep) {
      auto start = std::chrono::steady_clock::now();
      body();
      auto stop = std::chrono::steady_clock::now();
      samples.push_back(
          std::chrono::duration<double, std::nano>(stop - start).count());
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
  };

  volatile std::int64_t sink = 0;
  double formula_ns = median_ns([&] {
    sink = cyclo::hw_ternary(params);
  });
  double oracle_ns = median_ns([&] {
    cyclo::clear_cyclotomic_cache();
    sink = cyclo::hw_oracle(3, p2, p3, oracle_cap);
  });
  (void)sink;

  std::cout << "p2=" << p2 << " p3=" << p3 << " hw=" << formula_value
            << " reps=" << reps << '\n';
  std::cout << "formula median: " << formula_ns / 1e3 << " us\n";
  std::cout << "oracle median:  " << oracle_ns / 1e6 << " ms\n";
  std::cout << "speedup: " << oracle_ns / formula_ns << "x\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamming weights of ternary cyclotomic polynomials: "
               "closed forms, block tables and oracle validation"};
  app.require_subcommand(1);

  // hw
  auto* hw = app.add_subcommand("hw", "Weight of Phi_{3*p2*p3}");
  std::int64_t hw_p2 = 0, hw_p3 = 0, hw_cap = cyclo::kDefaultOracleDegreeCap;
  std::string hw_method = "formula";
  FormatOpt hw_fmt;
  hw->add_option("--p2", hw_p2, "Middle prime")->required();
  hw->add_option("--p3", hw_p3, "Largest prime")->required();
  hw->add_option("--method", hw_method, "formula, oracle or both")
      ->check(CLI::IsMember({"formula", "oracle", "both"}))
      ->capture_default_str();
  hw->add_option("--oracle-cap", hw_cap, "Oracle degree cap");
  add_format(hw, hw_fmt);

  // blocks
  auto* blocks = app.add_subcommand("blocks", "Block table of Phi_{mp}");
  std::int64_t blocks_m = 0, blocks_p = 0;
  bool blocks_coeffs = false;
  FormatOpt blocks_fmt;
  blocks->add_option("--m", blocks_m, "Squarefree odd modulus")->required();
  blocks->add_option("--p", blocks_p, "Prime > m")->required();
  blocks->add_flag("--coeffs", blocks_coeffs, "Include coefficient vectors");
  add_format(blocks, blocks_fmt);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a validation sweep");
  std::string verify_config, verify_out = "ledger.json";
  std::vector<std::int64_t> verify_p2;
  std::int64_t verify_p3_bound = 0,
               verify_cap = cyclo::kDefaultOracleDegreeCap;
  std::string verify_r3 = "both";
  int verify_workers = 1;
  verify->add_option("--config", verify_config, "JSON sweep config file");
  verify->add_option("--p2", verify_p2, "p2 values (inline config)");
  verify->add_option("--p3-bound", verify_p3_bound, "p3 bound (inline config)");
  verify->add_option("--r3", verify_r3, "Residue cases")
      ->check(CLI::IsMember({"both", "2", "minus2"}))
      ->capture_default_str();
  verify->add_option("--oracle-cap", verify_cap, "Oracle degree cap");
  verify->add_option("--workers", verify_workers, "Worker thread count");
  verify->add_option("-o,--out", verify_out, "Ledger path ('-' for stdout)")
      ->capture_default_str();

  // table
  auto* table = app.add_subcommand(
      "table", "Formula weights for the first K primes of a residue class");
  std::int64_t table_p2 = 0, table_count = 0;
  std::string table_r3;
  FormatOpt table_fmt;
  table->add_option("--p2", table_p2, "Middle prime")->required();
  table->add_option("--r3", table_r3, "Residue case")
      ->check(CLI::IsMember({"2", "minus2"}))
      ->required();
  table->add_option("--count", table_count, "Number of rows")->required();
  add_format(table, table_fmt);

  // bench
  auto* bench = app.add_subcommand("bench", "Time formula vs oracle");
  std::int64_t bench_p2 = 0, bench_p3 = 0,
               bench_cap = cyclo::kDefaultOracleDegreeCap;
  int bench_reps = 0;
  bench->add_option("--p2", bench_p2, "Middle prime")->required();
  bench->add_option("--p3", bench_p3, "Largest prime")->required();
  bench->add_option("--reps", bench_reps, "Repetitions")->required();
  bench->add_option("--oracle-cap", bench_cap, "Oracle degree cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*hw) return run_hw(hw_p2, hw_p3, hw_method, hw_cap, hw_fmt);
    if (*blocks)
      return run_blocks(blocks_m, blocks_p, blocks_coeffs, blocks_fmt);
    if (*verify) {
      cyclo::SweepConfig cfg;
      if (!verify_config.empty()) {
        if (!load_config(verify_config, cfg)) {
          std::cerr << "cannot parse config " << verify_config << '\n';
          return kExitUsage;
        }
      } else {
        cfg.p2_set = verify_p2;
        cfg.p3_bound = verify_p3_bound;
        cfg.r3_case_plus2 = verify_r3 != "minus2";
        cfg.r3_case_minus2 = verify_r3 != "2";
        cfg.oracle_degree_cap = verify_cap;
        cfg.worker_count = verify_workers;
      }
      return run_verify(cfg, verify_out);
    }
    if (*table) {
      if (table_count < 0) {
        std::cerr << "count must be nonnegative\n";
        return kExitUsage;
      }
      return run_table(table_p2, table_r3, table_count, table_fmt);
    }
    if (*bench) {
      if (bench_reps < 1) {
        std::cerr << "reps must be positive\n";
        return kExitUsage;
      }
      return run_bench(bench_p2, bench_p3, bench_reps, bench_cap);
    }
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
