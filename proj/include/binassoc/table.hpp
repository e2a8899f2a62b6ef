#pragma once

#include "binassoc/error.hpp"
#include "binassoc/scalar.hpp"

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <string>

namespace binassoc {

/// Cell counts of a finite uniform space partitioned by two events:
/// n_p = |A and B|, n_q = |A and not B|, n_r = |not A and B|, n_s = |not A and not B|.
struct CountTable {
  std::uint64_t n_p = 0;
  std::uint64_t n_q = 0;
  std::uint64_t n_r = 0;
  std::uint64_t n_s = 0;

  std::uint64_t total() const { return n_p + n_q + n_r + n_s; }
  bool all_positive() const { return n_p > 0 && n_q > 0 && n_r > 0 && n_s > 0; }

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

std::string to_string(const CountTable& c);

/// alpha = P(A), beta = P(B).
template <TableScalar Scalar>
struct MarginalPair {
  Scalar alpha;
  Scalar beta;

  friend bool operator==(const MarginalPair&, const MarginalPair&) = default;
};

enum class Axis { A, B };

inline constexpr double kSumTolerance = 1e-9;

/// Joint law of two events on the 2x2 grid. The cell matrix is
///
///        B   not B
///   A    p     q
///  ~A    r     s
///
/// so det(M) = ps - qr. Instances are always validated: cells are nonnegative,
/// sum to one, and neither marginal is degenerate. Zero cells are allowed.
template <TableScalar Scalar>
class ProbTable {
 public:
  using Matrix = Eigen::Matrix<Scalar, 2, 2>;

  const Scalar& p() const { return cells_(0, 0); }
  const Scalar& q() const { return cells_(0, 1); }
  const Scalar& r() const { return cells_(1, 0); }
  const Scalar& s() const { return cells_(1, 1); }

  /// Cell mass at indicator levels (a, b), a = 1 meaning A holds.
  const Scalar& cell(int a, int b) const { return cells_(1 - a, 1 - b); }

  const Matrix& matrix() const { return cells_; }

  bool strictly_positive() const { return (cells_.array() > Scalar(0)).all(); }

  friend bool operator==(const ProbTable& a, const ProbTable& b) { return a.cells_ == b.cells_; }

  /// Wraps a matrix already known to satisfy the invariants.
  static ProbTable from_valid_matrix(Matrix m) { return ProbTable(std::move(m)); }

 private:
  explicit ProbTable(Matrix m) : cells_(std::move(m)) {}

  Matrix cells_;
};

namespace detail {

template <TableScalar Scalar>
void check_marginals(const Eigen::Matrix<Scalar, 2, 2>& m) {
  const Scalar zero(0);
  const bool row_empty = (m(0, 0) == zero && m(0, 1) == zero) || (m(1, 0) == zero && m(1, 1) == zero);
  const bool col_empty = (m(0, 0) == zero && m(1, 0) == zero) || (m(0, 1) == zero && m(1, 1) == zero);
  if (row_empty) throw Error(Errc::DegenerateMarginal, "P(A) must lie strictly between 0 and 1");
  if (col_empty) throw Error(Errc::DegenerateMarginal, "P(B) must lie strictly between 0 and 1");
}

}  // namespace detail

/// Validates four cell probabilities. Rationals must sum to exactly one;
/// doubles within 1e-9 of one and are then renormalized by their sum.
template <TableScalar Scalar>
ProbTable<Scalar> from_probs(const Scalar& p, const Scalar& q, const Scalar& r, const Scalar& s) {
  typename ProbTable<Scalar>::Matrix m;
  m << p, q, r, s;
  if constexpr (!is_exact_v<Scalar>) {
    if (!m.allFinite()) throw Error(Errc::NegativeCell, "cell probabilities must be finite");
  }
  if ((m.array() < Scalar(0)).any())
    throw Error(Errc::NegativeCell, "cell probabilities must be nonnegative");
  const Scalar total = m.sum();
  if constexpr (is_exact_v<Scalar>) {
    if (total != 1) throw Error(Errc::SumOutOfTolerance, "cells sum to " + to_text(total) + ", not 1");
  } else {
    if (std::fabs(total - 1.0) > kSumTolerance)
      throw Error(Errc::SumOutOfTolerance, "cells sum to " + to_text(total) + ", not 1");
    m /= total;
  }
  detail::check_marginals(m);
  return ProbTable<Scalar>::from_valid_matrix(std::move(m));
}

/// Uniform law on a finite space: cells n_x / N, exact.
ProbTable<Rational> from_counts(const CountTable& c);

template <TableScalar Scalar>
MarginalPair<Scalar> marginals(const ProbTable<Scalar>& t) {
  return {t.matrix().row(0).sum(), t.matrix().col(0).sum()};
}

/// Swaps the roles of A and B (q <-> r).
template <TableScalar Scalar>
ProbTable<Scalar> transpose(const ProbTable<Scalar>& t) {
  return ProbTable<Scalar>::from_valid_matrix(t.matrix().transpose());
}

/// Replaces A by not-A (swap rows) or B by not-B (swap columns).
template <TableScalar Scalar>
ProbTable<Scalar> complement(const ProbTable<Scalar>& t, Axis axis) {
  typename ProbTable<Scalar>::Matrix m =
      axis == Axis::A ? t.matrix().colwise().reverse().eval() : t.matrix().rowwise().reverse().eval();
  return ProbTable<Scalar>::from_valid_matrix(std::move(m));
}

inline ProbTable<double> to_float(const ProbTable<double>& t) { return t; }
ProbTable<double> to_float(const ProbTable<Rational>& t);

/// Exact rational image of a float table (binary fractions are rationals).
/// The cells are renormalized exactly, so the result sums to one.
ProbTable<Rational> to_exact(const ProbTable<double>& t);

/// Nearest table whose cells are multiples of 1/denominator, preserving the
/// sum by assigning the rounding remainder to the largest cell.
ProbTable<Rational> nearest_rational(const ProbTable<double>& t, std::uint64_t denominator);

}  // namespace binassoc
