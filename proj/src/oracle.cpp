#include "binassoc/oracle.hpp"

#include "binassoc/report.hpp"

#include <algorithm>
#include <array>
#include <thread>

namespace binassoc::oracle {
namespace {

enum class Cell : std::uint8_t { P, Q, R, S };

bool in_a(Cell c) { return c == Cell::P || c == Cell::Q; }
bool in_b(Cell c) { return c == Cell::P || c == Cell::R; }

// One label per element of the uniform space, grouped by cell.
std::vector<Cell> materialize(const CountTable& c) {
  std::vector<Cell> elements;
  elements.reserve(c.total());
  elements.insert(elements.end(), c.n_p, Cell::P);
  elements.insert(elements.end(), c.n_q, Cell::Q);
  elements.insert(elements.end(), c.n_r, Cell::R);
  elements.insert(elements.end(), c.n_s, Cell::S);
  return elements;
}

Sign sign_of_difference(const Rational& a, const Rational& b) {
  if (a > b) return Sign::Positive;
  if (a < b) return Sign::Negative;
  return Sign::Zero;
}

}  // namespace

PairCounts pair_counts(const CountTable& c, Direction direction) {
  const auto conditioned = direction == Direction::AGivenB ? in_b : in_a;
  const auto target = direction == Direction::AGivenB ? in_a : in_b;

  const std::vector<Cell> elements = materialize(c);
  std::uint64_t inside = 0;
  for (Cell e : elements) inside += conditioned(e) ? 1 : 0;
  if (inside == 0 || inside == elements.size())
    throw Error(Errc::EmptyConditioningClass, "a conditioning class is empty");

  // Target membership of every element outside the conditioning class, one
  // byte each so the inner loop over all (u, v) pairs stays branch-free.
  std::vector<std::uint8_t> outside;
  outside.reserve(elements.size() - inside);
  for (Cell v : elements)
    if (!conditioned(v)) outside.push_back(target(v) ? 1 : 0);

  PairCounts out;
  out.direction = direction;
  for (Cell u : elements) {
    if (!conditioned(u)) continue;
    const std::uint8_t tu = target(u) ? 1 : 0;
    std::uint32_t favorable = 0;
    std::uint32_t unfavorable = 0;
    for (std::uint8_t tv : outside) {
      favorable += tu & (tv ^ 1u);
      unfavorable += (tu ^ 1u) & tv;
    }
    out.favorable += favorable;
    out.unfavorable += unfavorable;
  }
  return out;
}

Conditionals brute_force_conditionals(const CountTable& c) {
  const std::vector<Cell> elements = materialize(c);
  std::uint64_t b = 0, a_and_b = 0, not_b = 0, a_and_not_b = 0;
  std::uint64_t a = 0, b_and_a = 0, not_a = 0, b_and_not_a = 0;
  for (Cell e : elements) {
    if (in_b(e)) {
      ++b;
      if (in_a(e)) ++a_and_b;
    } else {
      ++not_b;
      if (in_a(e)) ++a_and_not_b;
    }
    if (in_a(e)) {
      ++a;
      if (in_b(e)) ++b_and_a;
    } else {
      ++not_a;
      if (in_b(e)) ++b_and_not_a;
    }
  }
  if (b == 0 || not_b == 0 || a == 0 || not_a == 0)
    throw Error(Errc::EmptyConditioningClass, "a conditioning class is empty");
  return {Rational(a_and_b, b), Rational(a_and_not_b, not_b), Rational(b_and_a, a),
          Rational(b_and_not_a, not_a)};
}

std::vector<std::string> check_table(const CountTable& c) {
  std::vector<std::string> failed;

  // (iii) from integer counts: n_p n_s - n_q n_r has the sign of Delta.
  const auto lhs = static_cast<__int128>(c.n_p) * c.n_s;
  const auto rhs = static_cast<__int128>(c.n_q) * c.n_r;
  const Sign s3 = lhs > rhs ? Sign::Positive : (lhs < rhs ? Sign::Negative : Sign::Zero);

  const Conditionals cond = brute_force_conditionals(c);
  const Sign s1 = sign_of_difference(cond.a_given_b, cond.a_given_not_b);
  const Sign s2 = sign_of_difference(cond.b_given_a, cond.b_given_not_a);
  if (s1 != s3) failed.emplace_back("relation_i_iii");
  if (s2 != s3) failed.emplace_back("relation_ii_iii");

  for (Direction dir : {Direction::AGivenB, Direction::BGivenA}) {
    const PairCounts pc = pair_counts(c, dir);
    const char* tag = dir == Direction::AGivenB ? "pair_counts_a_given_b" : "pair_counts_b_given_a";
    if (pc.favorable != c.n_p * c.n_s || pc.unfavorable != c.n_q * c.n_r) failed.emplace_back(tag);
  }

  const ProbTable<Rational> t = from_counts(c);
  const auto diffs = conditional_diffs(t);
  if (diffs.a != cond.a_given_b - cond.a_given_not_b) failed.emplace_back("conditional_diff_a_formula");
  if (diffs.b != cond.b_given_a - cond.b_given_not_a) failed.emplace_back("conditional_diff_b_formula");
  if (two_draw_enumeration(t) != concordance(t)) failed.emplace_back("two_draw_enumeration");
  if (rational_rank(t) != rank_of_M(t)) failed.emplace_back("rank");

  const MeasureReport report = full_report(t, SignPolicy::exact());
  if (report.delta_sign != s3) failed.emplace_back("delta");
  for (const auto& name : report.dissenting) failed.push_back(name);
  return failed;
}

std::uint64_t count_positive_tables(std::uint64_t n_max) {
  std::uint64_t count = 0;
  for (std::uint64_t p = 1; p <= n_max; ++p)
    for (std::uint64_t q = 1; p + q <= n_max; ++q)
      for (std::uint64_t r = 1; p + q + r <= n_max; ++r)
        for (std::uint64_t s = 1; p + q + r + s <= n_max; ++s) ++count;
  return count;
}

SweepSummary exhaustive_sign_check(std::uint64_t n_max, unsigned threads) {
  if (n_max < 4) throw Error(Errc::InvalidArgument, "n_max must be at least 4");

  // One partial summary per value of n_p, merged in n_p order.
  const std::uint64_t slices = n_max - 3;
  std::vector<SweepSummary> partial(slices);
  auto run_slice = [&](std::uint64_t p) {
    SweepSummary& out = partial[p - 1];
    for (std::uint64_t q = 1; p + q + 2 <= n_max; ++q)
      for (std::uint64_t r = 1; p + q + r + 1 <= n_max; ++r)
        for (std::uint64_t s = 1; p + q + r + s <= n_max; ++s) {
          const CountTable c{p, q, r, s};
          ++out.tables_checked;
          const auto lhs = p * s;
          const auto rhs = q * r;
          if (lhs > rhs) ++out.positive;
          else if (lhs < rhs) ++out.negative;
          else ++out.zero;
          for (auto& name : check_table(c)) out.failures.push_back({c, std::move(name)});
        }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, slices));
  if (threads <= 1) {
    for (std::uint64_t p = 1; p <= slices; ++p) run_slice(p);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (std::uint64_t p = 1 + w; p <= slices; p += threads) run_slice(p);
      });
  }

  SweepSummary summary;
  summary.n_max = n_max;
  for (auto& part : partial) {
    summary.tables_checked += part.tables_checked;
    summary.positive += part.positive;
    summary.zero += part.zero;
    summary.negative += part.negative;
    for (auto& f : part.failures) summary.failures.push_back(std::move(f));
  }
  return summary;
}

int rational_rank(const ProbTable<Rational>& t) {
  std::array<std::array<Rational, 2>, 2> rows{{{t.p(), t.q()}, {t.r(), t.s()}}};
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < 2 && row < 2; ++col) {
    std::size_t pivot = row;
    while (pivot < 2 && rows[pivot][col] == 0) ++pivot;
    if (pivot == 2) continue;
    std::swap(rows[row], rows[pivot]);
    for (std::size_t other = row + 1; other < 2; ++other) {
      const Rational factor = rows[other][col] / rows[row][col];
      for (std::size_t k = col; k < 2; ++k) rows[other][k] -= factor * rows[row][k];
    }
    ++row;
    ++rank;
  }
  return rank;
}

int rational_rank(const ProbTable<double>&) {
  throw Error(Errc::NotExact, "exact row reduction needs a rational table");
}

}  // namespace binassoc::oracle
