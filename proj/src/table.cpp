#include "binassoc/table.hpp"

#include <algorithm>
#include <array>

namespace binassoc {

std::string to_string(const CountTable& c) {
  return "(" + std::to_string(c.n_p) + "," + std::to_string(c.n_q) + "," + std::to_string(c.n_r) +
         "," + std::to_string(c.n_s) + ")";
}

ProbTable<Rational> from_counts(const CountTable& c) {
  const std::uint64_t n = c.total();
  if (n == 0) throw Error(Errc::EmptySpace, "count table is empty");
  const Rational total(n);
  return from_probs<Rational>(Rational(c.n_p) / total, Rational(c.n_q) / total,
                              Rational(c.n_r) / total, Rational(c.n_s) / total);
}

ProbTable<double> to_float(const ProbTable<Rational>& t) {
  return from_probs(to_double(t.p()), to_double(t.q()), to_double(t.r()), to_double(t.s()));
}

ProbTable<Rational> to_exact(const ProbTable<double>& t) {
  const Eigen::Matrix<Rational, 2, 2> m = t.matrix().cast<Rational>();
  const Rational total = m.sum();
  return from_probs<Rational>(m(0, 0) / total, m(0, 1) / total, m(1, 0) / total, m(1, 1) / total);
}

ProbTable<Rational> nearest_rational(const ProbTable<double>& t, std::uint64_t denominator) {
  if (denominator == 0) throw Error(Errc::InvalidArgument, "denominator must be positive");
  std::array<std::int64_t, 4> k{};
  const std::array<double, 4> cells{t.p(), t.q(), t.r(), t.s()};
  std::int64_t used = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    k[i] = std::llround(cells[i] * static_cast<double>(denominator));
    used += k[i];
  }
  const auto largest = static_cast<std::size_t>(std::max_element(cells.begin(), cells.end()) - cells.begin());
  k[largest] += static_cast<std::int64_t>(denominator) - used;
  const Rational d(denominator);
  return from_probs<Rational>(Rational(k[0]) / d, Rational(k[1]) / d, Rational(k[2]) / d,
                              Rational(k[3]) / d);
}

}  // namespace binassoc
