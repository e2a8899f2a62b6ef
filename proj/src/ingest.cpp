#include "binassoc/ingest.hpp"

#include "binassoc/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <vector>

namespace binassoc {
namespace {

std::vector<std::string> split(const std::string& line, char delim) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  while (true) {
    const auto end = line.find(delim, start);
    fields.push_back(line.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return fields;
}

std::optional<std::size_t> as_index(const std::string& selector) {
  if (selector.empty() ||
      !std::all_of(selector.begin(), selector.end(), [](unsigned char c) { return std::isdigit(c); }))
    return std::nullopt;
  return std::stoul(selector);
}

std::size_t resolve(const std::string& selector, const std::vector<std::string>& header) {
  if (auto index = as_index(selector)) {
    if (!header.empty() && *index >= header.size())
      throw Error(Errc::MissingColumn, "column index " + selector + " out of range");
    return *index;
  }
  if (header.empty())
    throw Error(Errc::MissingColumn, "column '" + selector + "' named but the file has no header");
  auto it = std::find(header.begin(), header.end(), selector);
  if (it == header.end()) throw Error(Errc::MissingColumn, "no column named '" + selector + "'");
  return static_cast<std::size_t>(it - header.begin());
}

bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

CountTable ingest(std::istream& in, const IngestSpec& spec) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  if (spec.has_header) {
    if (!read_line(in, line)) throw Error(Errc::EmptyFile, "input has no header row");
    ++line_no;
    header = split(line, spec.delimiter);
  }
  const std::size_t col_a = resolve(spec.column_a, header);
  const std::size_t col_b = resolve(spec.column_b, header);
  if (col_a == col_b) throw Error(Errc::InvalidArgument, "column selectors resolve to the same column");

  CountTable counts;
  std::size_t rows = 0;
  while (read_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line, spec.delimiter);
    auto bit = [&](std::size_t col) {
      if (col >= fields.size())
        throw Error(Errc::MalformedRow, "line " + std::to_string(line_no) + ": missing column " +
                                            std::to_string(col));
      const std::string& token = fields[col];
      if (token == "1") return true;
      if (token == "0") return false;
      throw Error(Errc::MalformedRow, "line " + std::to_string(line_no) + ": malformed token '" + token +
                                          "' (expected 0 or 1)");
    };
    const bool x = bit(col_a);
    const bool y = bit(col_b);
    if (x && y) ++counts.n_p;
    else if (x) ++counts.n_q;
    else if (y) ++counts.n_r;
    else ++counts.n_s;
    ++rows;
  }
  if (rows == 0) throw Error(Errc::EmptyFile, "input has no data rows");
  return counts;
}

CountTable ingest(const IngestSpec& spec) {
  std::ifstream in(spec.path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + spec.path.string());
  return ingest(in, spec);
}

}  // namespace binassoc
