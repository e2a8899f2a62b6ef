#include "doctest.h"

#include "binassoc/report.hpp"
#include "binassoc/serialize.hpp"
#include "binassoc/table.hpp"

#include <json.hpp>

using namespace binassoc;

namespace {

Rational q(long num, long den = 1) { return Rational(num) / den; }

}  // namespace

TEST_CASE("T1 report is consistent and positive") {
  const auto report = full_report(from_counts({4, 1, 2, 3}), SignPolicy::exact());
  CHECK(report.verdict == Verdict::Consistent);
  CHECK(report.delta_sign == Sign::Positive);
  CHECK(report.dissenting.empty());
  REQUIRE(report.find("delta"));
  CHECK(*report.find("delta")->text == "1/10");
  CHECK(*report.find("odds_ratio")->text == "6");
  CHECK(report.find("pmi_a_notb")->sign == Sign::Negative);
  CHECK(report.find("mutual_information")->orientation == Orientation::Unsigned);
  CHECK(std::is_sorted(report.entries.begin(), report.entries.end(),
                       [](const auto& a, const auto& b) { return a.name < b.name; }));
}

TEST_CASE("negative association flips every oriented sign") {
  const auto report = full_report(from_counts({1, 4, 3, 2}), SignPolicy::exact());
  CHECK(report.verdict == Verdict::Consistent);
  CHECK(report.delta_sign == Sign::Negative);
  for (const auto& e : report.entries) {
    if (e.orientation == Orientation::WithDelta) CHECK_MESSAGE(e.sign == Sign::Negative, e.name);
    if (e.orientation == Orientation::AgainstDelta) CHECK_MESSAGE(e.sign == Sign::Positive, e.name);
  }
  CHECK(*report.find("tp2")->text == "false");
}

TEST_CASE("zero cells omit log measures without breaking the verdict") {
  const auto t = from_probs<Rational>(q(1, 2), q(0), q(1, 4), q(1, 4));
  const auto report = full_report(t, SignPolicy::exact());
  CHECK(report.verdict == Verdict::Consistent);
  const auto* gamma = report.find("ising_gamma");
  REQUIRE(gamma);
  CHECK(gamma->omitted == Errc::ZeroCell);
  CHECK_FALSE(gamma->text);
  CHECK(*report.find("odds_ratio")->text == "+inf");
  CHECK(*report.find("log_odds_ratio")->text == "+inf");
}

TEST_CASE("float mode uses the zero band") {
  const auto t = from_probs<double>(0.25 + 1e-14, 0.25 - 1e-14, 0.25 - 1e-14, 0.25 + 1e-14);
  const auto report = full_report(t, SignPolicy::floating(1e-12));
  CHECK(report.delta_sign == Sign::Zero);
  CHECK(report.verdict == Verdict::Consistent);
  const auto strict = full_report(t, SignPolicy::floating(0.0));
  CHECK(strict.delta_sign == Sign::Positive);
}

TEST_CASE("exact mode reads log signs from their arguments") {
  // Delta = 1e-20 is far below double resolution of the log terms.
  const Rational eps = q(1, 10) / Rational(BigInt("1000000000000000000"));
  const auto t = from_probs<Rational>(q(1, 4) + eps, q(1, 4) - eps, q(1, 4) - eps, q(1, 4) + eps);
  const auto report = full_report(t, SignPolicy::exact());
  CHECK(report.delta_sign == Sign::Positive);
  CHECK(report.find("log_odds_ratio")->sign == Sign::Positive);
  CHECK(report.find("ising_gamma")->sign == Sign::Positive);
  CHECK(report.verdict == Verdict::Consistent);
}

TEST_CASE("JSON serialization is stable and sorted") {
  const auto report = full_report(from_counts({4, 1, 2, 3}), SignPolicy::exact());
  const std::string text = report_to_json(report);
  CHECK(text == report_to_json(report));
  const auto j = nlohmann::json::parse(text);
  CHECK(j["verdict"] == "consistent");
  CHECK(j["mode"] == "exact");
  CHECK(j["measures"]["delta"]["value"] == "1/10");
  CHECK(j["measures"]["delta"]["sign"] == "positive");
  CHECK(j["measures"]["theta"]["perspective"] == "Coupling");
  CHECK(j["measures"]["rank_m"]["sign"].is_null());
}

TEST_CASE("float JSON uses 17 significant digits") {
  const auto report = full_report(from_probs<double>(0.4, 0.1, 0.2, 0.3), SignPolicy::floating());
  const auto j = nlohmann::json::parse(report_to_json(report));
  CHECK(j["mode"] == "float");
  CHECK(j["zero_band"] == 1e-12);
  CHECK(j["measures"]["odds_ratio"]["value"].get<std::string>().size() >= 17);
}

TEST_CASE("CSV has one row per measure plus summary rows") {
  const auto report = full_report(from_counts({4, 1, 2, 3}), SignPolicy::exact());
  const std::string csv = report_to_csv(report);
  CHECK(csv.rfind("measure,value,sign,perspective,omitted\n", 0) == 0);
  CHECK(csv.find("\ndelta,1/10,positive,Linear algebra,\n") != std::string::npos);
  CHECK(csv.find("\nverdict,consistent,,,\n") != std::string::npos);
  const auto lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == static_cast<long>(report.entries.size()) + 3);
}
