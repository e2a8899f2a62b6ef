#pragma once

#include "binassoc/oracle.hpp"
#include "binassoc/report.hpp"

#include <string>

namespace binassoc {

/// JSON object with sorted keys. Every value is a string: "n/d" fractions in
/// exact mode, 17 significant digits in float mode, "+inf"/"-inf" for
/// infinities. Omitted measures carry null value/sign and an "omitted" reason.
std::string report_to_json(const MeasureReport& report);

/// Flat CSV with header "measure,value,sign,perspective,omitted", rows sorted by
/// measure name, followed by delta_sign and verdict rows.
std::string report_to_csv(const MeasureReport& report);

/// "tables: N, failures: F" followed by the regime breakdown and failure list.
std::string summary_to_text(const oracle::SweepSummary& summary);
std::string summary_to_json(const oracle::SweepSummary& summary);

}  // namespace binassoc
