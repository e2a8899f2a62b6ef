#include "binassoc/serialize.hpp"

#include <json.hpp>

#include <sstream>

namespace binassoc {
namespace {

std::string_view to_string(Reference ref) { return ref == Reference::One ? "one" : "zero"; }

std::string_view to_string(Verdict v) {
  return v == Verdict::Consistent ? "consistent" : "inconsistent";
}

std::string_view to_string(Orientation o) {
  switch (o) {
    case Orientation::WithDelta: return "with_delta";
    case Orientation::AgainstDelta: return "against_delta";
    case Orientation::Derived: return "derived";
    case Orientation::Unsigned: return "unsigned";
  }
  return "unsigned";
}

}  // namespace

std::string report_to_json(const MeasureReport& report) {
  using nlohmann::json;
  json measures = json::object();
  for (const auto& e : report.entries) {
    json entry = {
        {"perspective", e.perspective},
        {"orientation", to_string(e.orientation)},
        {"reference", to_string(e.reference)},
    };
    if (e.omitted) {
      entry["value"] = nullptr;
      entry["sign"] = nullptr;
      entry["omitted"] = std::string(to_string(*e.omitted));
    } else {
      entry["value"] = *e.text;
      entry["sign"] = e.sign ? json(std::string(to_string(*e.sign))) : json(nullptr);
      if (e.approximate) entry["approximate"] = true;
    }
    measures[e.name] = std::move(entry);
  }

  json root = {
      {"mode", report.policy.is_exact() ? "exact" : "float"},
      {"delta_sign", std::string(to_string(report.delta_sign))},
      {"verdict", std::string(to_string(report.verdict))},
      {"dissenting", report.dissenting},
      {"measures", std::move(measures)},
  };
  if (!report.policy.is_exact()) root["zero_band"] = report.policy.zero_band;
  return root.dump(2) + "\n";
}

std::string report_to_csv(const MeasureReport& report) {
  std::ostringstream out;
  out << "measure,value,sign,perspective,omitted\n";
  for (const auto& e : report.entries) {
    out << e.name << ',' << (e.text ? *e.text : "") << ','
        << (e.sign ? to_string(*e.sign) : std::string_view{}) << ',' << e.perspective << ','
        << (e.omitted ? to_string(*e.omitted) : std::string_view{}) << '\n';
  }
  out << "delta_sign," << to_string(report.delta_sign) << ",,,\n";
  out << "verdict," << to_string(report.verdict) << ",,,\n";
  return out.str();
}

std::string summary_to_text(const oracle::SweepSummary& summary) {
  std::ostringstream out;
  out << "tables: " << summary.tables_checked << ", failures: " << summary.failures.size() << '\n';
  out << "regimes: positive " << summary.positive << ", zero " << summary.zero << ", negative "
      << summary.negative << '\n';
  for (const auto& f : summary.failures) out << "FAIL " << to_string(f.table) << ' ' << f.check << '\n';
  return out.str();
}

std::string summary_to_json(const oracle::SweepSummary& summary) {
  using nlohmann::json;
  json failures = json::array();
  for (const auto& f : summary.failures)
    failures.push_back({{"table", {f.table.n_p, f.table.n_q, f.table.n_r, f.table.n_s}}, {"check", f.check}});
  json root = {
      {"n_max", summary.n_max},
      {"tables", summary.tables_checked},
      {"failures", std::move(failures)},
      {"regimes", {{"positive", summary.positive}, {"zero", summary.zero}, {"negative", summary.negative}}},
  };
  return root.dump(2) + "\n";
}

}  // namespace binassoc
