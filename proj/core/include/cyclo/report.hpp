#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cyclo {

enum class Verdict { agree, disagree, unchecked };

std::string to_string(Verdict v);

/// One line of the discrepancy ledger: a formula's value next to the
/// oracle's, with the adjudication note.
struct ValidationEntry {
  std::string formula;  // stable formula id, e.g. "hw_ternary"
  std::string params;   // canonical parameter string, e.g. "p2=7 p3=23"
  std::string formula_value;
  std::optional<std::string> oracle_value;  // absent when unchecked
  Verdict verdict = Verdict::unchecked;
  std::string note;
  // Adjudicated formulas gate the run: a disagreement is a failure.
  // Non-gating entries record findings about statements taken as printed.
  bool gating = true;
};

struct ValidationReport {
  std::vector<ValidationEntry> entries;

  void add(ValidationEntry e) { entries.push_back(std::move(e)); }
  void merge(ValidationReport other);
  /// Deterministic order: (formula, params).
  void sort();
  std::size_t count(Verdict v) const;
  std::size_t gating_disagreements() const;
};

/// JSON ledger: {"config": ..., "entries": [...]}, entries sorted.
/// Integer values above 2^53 are emitted as strings.
std::string report_to_json(const ValidationReport& report,
                           const std::string& config_json);

/// CSV with header formula,params,formula_value,oracle_value,verdict,note.
std::string report_to_csv(const ValidationReport& report);

}  // namespace cyclo
