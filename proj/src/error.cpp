#include "binassoc/error.hpp"

namespace binassoc {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NegativeCell: return "negative_cell";
    case Errc::SumOutOfTolerance: return "sum_out_of_tolerance";
    case Errc::DegenerateMarginal: return "degenerate_marginal";
    case Errc::EmptySpace: return "empty_space";
    case Errc::ZeroCell: return "zero_cell";
    case Errc::Indeterminate: return "indeterminate";
    case Errc::IndeterminateInput: return "indeterminate_input";
    case Errc::OutOfRange: return "out_of_range";
    case Errc::EmptyConditioningClass: return "empty_conditioning_class";
    case Errc::NotExact: return "not_exact";
    case Errc::InvalidArgument: return "invalid_argument";
    case Errc::MalformedRow: return "malformed_row";
    case Errc::MissingColumn: return "missing_column";
    case Errc::EmptyFile: return "empty_file";
  }
  return "unknown";
}

}  // namespace binassoc
