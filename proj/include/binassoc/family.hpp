#pragma once

#include "binassoc/error.hpp"
#include "binassoc/measures.hpp"
#include "binassoc/table.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace binassoc {

/// All 2x2 laws with marginals (alpha, beta), indexed by the coupling
/// parameter t over the closed interval [t_min, t_max] on which every cell
/// stays nonnegative.
template <TableScalar Scalar>
struct CouplingFamily {
  MarginalPair<Scalar> marginals;
  Scalar t_min;
  Scalar t_max;

  bool admissible(const Scalar& t) const { return t >= t_min && t <= t_max; }
};

template <TableScalar Scalar>
CouplingFamily<Scalar> make_family(const MarginalPair<Scalar>& m) {
  const auto inside = [](const Scalar& x) { return x > 0 && x < 1; };
  if (!inside(m.alpha) || !inside(m.beta))
    throw Error(Errc::DegenerateMarginal, "marginals must lie strictly between 0 and 1");
  const Scalar a = m.alpha;
  const Scalar b = m.beta;
  return {m, Scalar(-std::min<Scalar>(a * b, Scalar((1 - a) * (1 - b)))),
          std::min<Scalar>(Scalar(a * (1 - b)), Scalar((1 - a) * b))};
}

namespace detail {

template <TableScalar Scalar>
void require_admissible(const CouplingFamily<Scalar>& f, const Scalar& t) {
  if (!f.admissible(t))
    throw Error(Errc::OutOfRange, "t = " + to_text(t) + " outside [" + to_text(f.t_min) + ", " +
                                      to_text(f.t_max) + "]");
}

}  // namespace detail

/// P_t: cells (ab + t, a(1-b) - t, (1-a)b - t, (1-a)(1-b) + t).
template <TableScalar Scalar>
ProbTable<Scalar> table_from_t(const CouplingFamily<Scalar>& f, const Scalar& t) {
  detail::require_admissible(f, t);
  const Scalar& a = f.marginals.alpha;
  const Scalar& b = f.marginals.beta;
  // Clamp guards float rounding at the interval ends; exact tables never need it.
  const auto cell = [](Scalar x) { return x < 0 ? Scalar(0) : x; };
  return from_probs<Scalar>(cell(a * b + t), cell(a * (1 - b) - t), cell((1 - a) * b - t),
                            cell((1 - a) * (1 - b) + t));
}

template <TableScalar Scalar>
Scalar t_from_theta(const CouplingFamily<Scalar>& f, const Scalar& theta_value) {
  const Scalar& a = f.marginals.alpha;
  const Scalar& b = f.marginals.beta;
  return theta_value * a * (1 - a) * b * (1 - b);
}

template <TableScalar Scalar>
ProbTable<Scalar> table_from_theta(const CouplingFamily<Scalar>& f, const Scalar& theta_value) {
  return table_from_t(f, t_from_theta(f, theta_value));
}

/// F(t) = P_t(A|B) - P_t(A|~B) = t / (b(1-b)).
template <TableScalar Scalar>
Scalar F_of_t(const CouplingFamily<Scalar>& f, const Scalar& t) {
  detail::require_admissible(f, t);
  const Scalar& b = f.marginals.beta;
  return t / (b * (1 - b));
}

/// G(t) = P_t(B|A) - P_t(B|~A) = t / (a(1-a)).
template <TableScalar Scalar>
Scalar G_of_t(const CouplingFamily<Scalar>& f, const Scalar& t) {
  detail::require_admissible(f, t);
  const Scalar& a = f.marginals.alpha;
  return t / (a * (1 - a));
}

/// Uniform grid of `points` values over [t_min, t_max], both ends included
/// exactly.
template <TableScalar Scalar>
std::vector<Scalar> t_grid(const CouplingFamily<Scalar>& f, std::size_t points) {
  if (points < 2) throw Error(Errc::InvalidArgument, "grid needs at least two points");
  std::vector<Scalar> grid;
  grid.reserve(points);
  const Scalar span = f.t_max - f.t_min;
  const Scalar steps(static_cast<long long>(points - 1));
  for (std::size_t k = 0; k + 1 < points; ++k)
    grid.push_back(f.t_min + span * Scalar(static_cast<long long>(k)) / steps);
  grid.push_back(f.t_max);
  return grid;
}

}  // namespace binassoc
