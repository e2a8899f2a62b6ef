#pragma once

// Brute-force verification engines. Nothing here calls the closed-form
// measures except exhaustive_sign_check, which compares them against the
// enumerations below.

#include "binassoc/error.hpp"
#include "binassoc/measures.hpp"
#include "binassoc/table.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace binassoc::oracle {

enum class Direction {
  AGivenB,  ///< pairs (u, v) with u in B, v in ~B; favorable when u in A, v not in A
  BGivenA,  ///< pairs (u, v) with u in A, v in ~A; favorable when u in B, v not in B
};

struct PairCounts {
  std::uint64_t favorable = 0;
  std::uint64_t unfavorable = 0;
  Direction direction = Direction::AGivenB;
};

/// Counts favorable and unfavorable ordered pairs by iterating over
/// materialized elements.
PairCounts pair_counts(const CountTable& c, Direction direction);

/// Sums the probabilities of all 16 ordered outcome pairs of two independent
/// draws, split into concordant and discordant classes.
template <TableScalar Scalar>
Concordance<Scalar> two_draw_enumeration(const ProbTable<Scalar>& t) {
  Concordance<Scalar> out{Scalar(0), Scalar(0)};
  for (int x1 = 0; x1 <= 1; ++x1)
    for (int y1 = 0; y1 <= 1; ++y1)
      for (int x2 = 0; x2 <= 1; ++x2)
        for (int y2 = 0; y2 <= 1; ++y2) {
          const Scalar mass = t.cell(x1, y1) * t.cell(x2, y2);
          const int product = (x1 - x2) * (y1 - y2);
          if (product > 0) out.concordant += mass;
          if (product < 0) out.discordant += mass;
        }
  return out;
}

struct Conditionals {
  Rational a_given_b;
  Rational a_given_not_b;
  Rational b_given_a;
  Rational b_given_not_a;
};

/// Conditionals obtained by filtering and counting materialized elements.
Conditionals brute_force_conditionals(const CountTable& c);

struct SweepFailure {
  CountTable table;
  std::string check;
};

struct SweepSummary {
  std::uint64_t n_max = 0;
  std::uint64_t tables_checked = 0;
  std::uint64_t positive = 0;  ///< tables in the ">" regime
  std::uint64_t zero = 0;      ///< tables in the "=" regime
  std::uint64_t negative = 0;  ///< tables in the "<" regime
  std::vector<SweepFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks one strictly positive count table; returns the names of failed checks.
std::vector<std::string> check_table(const CountTable& c);

/// Every table with all cells >= 1 and total <= n_max, in lexicographic order of
/// (n_p, n_q, n_r, n_s). Work is split by n_p across `threads` workers (0 picks
/// the hardware concurrency); the merged summary does not depend on scheduling.
SweepSummary exhaustive_sign_check(std::uint64_t n_max, unsigned threads = 0);

/// Number of tables the sweep visits, counted by direct enumeration.
std::uint64_t count_positive_tables(std::uint64_t n_max);

/// Rank of the cell matrix by exact row reduction.
int rational_rank(const ProbTable<Rational>& t);
int rational_rank(const ProbTable<double>& t);  // throws NotExact

}  // namespace binassoc::oracle
