#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace binassoc {

enum class Errc {
  NegativeCell,
  SumOutOfTolerance,
  DegenerateMarginal,
  EmptySpace,
  ZeroCell,
  Indeterminate,
  IndeterminateInput,
  OutOfRange,
  EmptyConditioningClass,
  NotExact,
  InvalidArgument,
  MalformedRow,
  MissingColumn,
  EmptyFile,
};

/// snake_case name used in reports and diagnostics.
std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace binassoc
