#include "doctest.h"

#include "binassoc/ingest.hpp"

#include <sstream>

using namespace binassoc;

namespace {

Errc ingest_error(const std::string& text, IngestSpec spec, std::string* message = nullptr) {
  std::istringstream in(text);
  try {
    ingest(in, spec);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  FAIL("expected binassoc::Error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("rows are tallied by cell") {
  std::istringstream in("1,1\n1,1\n1,1\n1,1\n1,0\n0,1\n0,1\n0,0\n0,0\n0,0\n");
  const auto c = ingest(in, {"", "0", "1"});
  CHECK(c == CountTable{4, 1, 2, 3});
}

TEST_CASE("header names select columns") {
  std::istringstream in("id,smoker,cancer\n7,1,0\n8,1,1\n\n9,0,0\r\n");
  IngestSpec spec{"", "smoker", "cancer", true};
  CHECK(ingest(in, spec) == CountTable{1, 1, 0, 1});
}

TEST_CASE("custom delimiter and index selectors") {
  std::istringstream in("1;x;0\n0;y;1\n");
  IngestSpec spec{"", "2", "0", false, ';'};
  CHECK(ingest(in, spec) == CountTable{0, 1, 1, 0});
}

TEST_CASE("strict token policy") {
  std::string message;
  CHECK(ingest_error("1,1\n1,yes\n", {"", "0", "1"}, &message) == Errc::MalformedRow);
  CHECK(message.find("line 2") != std::string::npos);
  CHECK(message.find("yes") != std::string::npos);
  CHECK(ingest_error("1, 1\n", {"", "0", "1"}) == Errc::MalformedRow);
  CHECK(ingest_error("1\n", {"", "0", "1"}) == Errc::MalformedRow);
}

TEST_CASE("selector and file errors") {
  CHECK(ingest_error("a,b\n1,1\n", {"", "a", "c", true}) == Errc::MissingColumn);
  CHECK(ingest_error("1,1\n", {"", "0", "0"}) == Errc::InvalidArgument);
  CHECK(ingest_error("", {"", "0", "1"}) == Errc::EmptyFile);
  CHECK(ingest_error("a,b\n", {"", "a", "b", true}) == Errc::EmptyFile);
  CHECK_THROWS_AS(ingest(IngestSpec{"/nonexistent/file.csv", "0", "1"}), Error);
}
