#pragma once

#include "binassoc/table.hpp"

#include <filesystem>
#include <istream>
#include <string>

namespace binassoc {

/// Where to read paired binary observations from. Column selectors are a
/// 0-based index ("3") or, when the file has a header, a column name.
struct IngestSpec {
  std::filesystem::path path;
  std::string column_a;
  std::string column_b;
  bool has_header = false;
  char delimiter = ',';
};

/// Tallies rows into a CountTable: (1,1) -> n_p, (1,0) -> n_q, (0,1) -> n_r,
/// (0,0) -> n_s. Tokens must be exactly "0" or "1"; blank lines are skipped.
CountTable ingest(const IngestSpec& spec);
CountTable ingest(std::istream& in, const IngestSpec& spec);

}  // namespace binassoc
