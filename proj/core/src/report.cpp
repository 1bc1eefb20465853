#include "cyclo/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace cyclo {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::agree: return "agree";
    case Verdict::disagree: return "disagree";
    default: return "unchecked";
  }
}

void ValidationReport::merge(ValidationReport other) {
  entries.insert(entries.end(),
                 std::make_move_iterator(other.entries.begin()),
                 std::make_move_iterator(other.entries.end()));
}

void ValidationReport::sort() {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const ValidationEntry& a, const ValidationEntry& b) {
                     return std::tie(a.formula, a.params) <
                            std::tie(b.formula, b.params);
                   });
}

std::size_t ValidationReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(),
                    [v](const ValidationEntry& e) { return e.verdict == v; }));
}

std::size_t ValidationReport::gating_disagreements() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const ValidationEntry& e) {
        return e.gating && e.verdict == Verdict::disagree;
      }));
}

namespace {

// Integers above 2^53 are emitted as strings so lossy JSON consumers
// cannot silently round them.
nlohmann::json value_field(const std::string& s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc() && ptr == s.data() + s.size()) {
    constexpr std::int64_t kSafe = 1LL << 53;
    if (v <= kSafe && v >= -kSafe) return v;
  }
  return s;
}

}  // namespace

std::string report_to_json(const ValidationReport& report,
                           const std::string& config_json) {
  nlohmann::json out;
  out["config"] = config_json.empty()
                      ? nlohmann::json(nullptr)
                      : nlohmann::json::parse(config_json);
  out["entries"] = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json je;
    je["formula"] = e.formula;
    je["params"] = e.params;
    je["formula_value"] = value_field(e.formula_value);
    je["oracle_value"] =
        e.oracle_value ? value_field(*e.oracle_value) : nlohmann::json(nullptr);
    je["verdict"] = to_string(e.verdict);
    je["note"] = e.note;
    out["entries"].push_back(std::move(je));
  }
  return out.dump(2) + "\n";
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string report_to_csv(const ValidationReport& report) {
  std::ostringstream out;
  out << "formula,params,formula_value,oracle_value,verdict,note\n";
  for (const auto& e : report.entries) {
    out << csv_quote(e.formula) << ',' << csv_quote(e.params) << ','
        << csv_quote(e.formula_value) << ','
        << csv_quote(e.oracle_value.value_or("")) << ','
        << to_string(e.verdict) << ',' << csv_quote(e.note) << '\n';
  }
  return out.str();
}

}  // namespace cyclo
