#pragma once

// Scalar association measures on a 2x2 joint table. Every function is a pure
// template over the table scalar; rational tables give exact results wherever
// the measure is rational, and logarithmic measures are reported in nats.

#include "binassoc/error.hpp"
#include "binassoc/scalar.hpp"
#include "binassoc/sign.hpp"
#include "binassoc/table.hpp"

#include <Eigen/LU>

#include <cmath>

namespace binassoc {

/// Delta = ps - qr = det(M).
template <TableScalar Scalar>
Scalar delta(const ProbTable<Scalar>& t) {
  return t.matrix().determinant();
}

/// Cov(1_A, 1_B) = E[XY] - E[X]E[Y].
template <TableScalar Scalar>
Scalar covariance(const ProbTable<Scalar>& t) {
  const Scalar ex = t.p() + t.q();
  const Scalar ey = t.p() + t.r();
  return t.p() - ex * ey;
}

template <TableScalar Scalar>
struct ConditionalDiffs {
  Scalar a;  ///< P(A|B) - P(A|~B)
  Scalar b;  ///< P(B|A) - P(B|~A)
};

template <TableScalar Scalar>
ConditionalDiffs<Scalar> conditional_diffs(const ProbTable<Scalar>& t) {
  const Scalar a_given_b = t.p() / (t.p() + t.r());
  const Scalar a_given_not_b = t.q() / (t.q() + t.s());
  const Scalar b_given_a = t.p() / (t.p() + t.q());
  const Scalar b_given_not_a = t.r() / (t.r() + t.s());
  return {a_given_b - a_given_not_b, b_given_a - b_given_not_a};
}

/// Coupling parameter t = P(A and B) - P(A)P(B).
template <TableScalar Scalar>
Scalar coupling_t(const ProbTable<Scalar>& t) {
  const auto m = marginals(t);
  return t.p() - m.alpha * m.beta;
}

/// Normalized interaction: p = ab + theta a(1-a) b(1-b).
template <TableScalar Scalar>
Scalar theta(const ProbTable<Scalar>& t) {
  const auto m = marginals(t);
  return coupling_t(t) / (m.alpha * (1 - m.alpha) * m.beta * (1 - m.beta));
}

/// A value that is exact unless `approximate` is set.
template <TableScalar Scalar>
struct MaybeApprox {
  Scalar value;
  bool approximate = false;
};

/// Pearson correlation of the indicators (the binary canonical correlation).
/// Rational tables give an exact root when the radicand is a perfect square and
/// a Newton-refined rational approximation otherwise.
template <TableScalar Scalar>
MaybeApprox<Scalar> phi(const ProbTable<Scalar>& t) {
  const auto m = marginals(t);
  const Scalar radicand = m.alpha * (1 - m.alpha) * m.beta * (1 - m.beta);
  if constexpr (is_exact_v<Scalar>) {
    if (auto root = exact_sqrt(radicand)) return {delta(t) / *root, false};
    return {delta(t) / approx_sqrt(radicand), true};
  } else {
    return {delta(t) / std::sqrt(radicand), false};
  }
}

namespace detail {

// num / den for nonnegative operands: +inf on x/0, Indeterminate on 0/0.
template <TableScalar Scalar>
ExtReal<Scalar> ratio(const Scalar& num, const Scalar& den, const char* what) {
  if (den == 0) {
    if (num == 0) throw Error(Errc::Indeterminate, std::string(what) + " is 0/0");
    return ExtReal<Scalar>::pos_inf();
  }
  return ExtReal<Scalar>(num / den);
}

template <TableScalar Scalar>
void require_strictly_positive(const ProbTable<Scalar>& t, const char* what) {
  if (!t.strictly_positive())
    throw Error(Errc::ZeroCell, std::string(what) + " requires every cell to be positive");
}

}  // namespace detail

/// OR = ps / qr.
template <TableScalar Scalar>
ExtReal<Scalar> odds_ratio(const ProbTable<Scalar>& t) {
  return detail::ratio<Scalar>(t.p() * t.s(), t.q() * t.r(), "odds ratio");
}

/// Mixed discrete derivative g(1,1) + g(0,0) - g(1,0) - g(0,1) of g = log mass.
template <TableScalar Scalar>
ExtReal<double> log_odds_ratio(const ProbTable<Scalar>& t) {
  const bool concordant_zero = t.p() == 0 || t.s() == 0;
  const bool discordant_zero = t.q() == 0 || t.r() == 0;
  if (concordant_zero && discordant_zero) throw Error(Errc::Indeterminate, "log odds ratio is 0/0");
  if (discordant_zero) return ExtReal<double>::pos_inf();
  if (concordant_zero) return ExtReal<double>::neg_inf();
  const double g11 = log_of(t.p());
  const double g10 = log_of(t.q());
  const double g01 = log_of(t.r());
  const double g00 = log_of(t.s());
  return (g11 + g00) - (g10 + g01);
}

/// Parameters of the Gibbs form P(U=u, V=v) = exp(h_a u + h_b v + gamma uv - log_z)
/// in spin coordinates u, v in {-1, +1}.
struct IsingParams {
  double h_a = 0.0;
  double h_b = 0.0;
  double gamma = 0.0;
  double log_z = 0.0;
};

template <TableScalar Scalar>
IsingParams ising_params(const ProbTable<Scalar>& t) {
  detail::require_strictly_positive(t, "Ising parameterization");
  const double lp = log_of(t.p());
  const double lq = log_of(t.q());
  const double lr = log_of(t.r());
  const double ls = log_of(t.s());
  IsingParams out;
  out.gamma = ((lp + ls) - (lq + lr)) / 4;
  out.h_a = ((lp + lq) - (lr + ls)) / 4;
  out.h_b = ((lp + lr) - (lq + ls)) / 4;
  out.log_z = -((lp + ls) + (lq + lr)) / 4;
  return out;
}

/// Gibbs mass at spins (u, v).
inline double gibbs_mass(const IsingParams& k, int u, int v) {
  return std::exp(k.h_a * u + k.h_b * v + k.gamma * u * v - k.log_z);
}

/// Coefficients of f(u, v) = c_empty + c_u u + c_v v + c_uv uv on {-1, +1}^2.
template <TableScalar Scalar>
struct WalshCoefficients {
  Scalar c_empty;
  Scalar c_u;
  Scalar c_v;
  Scalar c_uv;

  Scalar operator()(int u, int v) const { return c_empty + c_u * u + c_v * v + c_uv * u * v; }
};

/// E[UV] by direct expectation over the four spin points.
template <TableScalar Scalar>
Scalar spin_correlation(const ProbTable<Scalar>& t) {
  return t.p() - t.q() - t.r() + t.s();
}

template <TableScalar Scalar>
WalshCoefficients<Scalar> walsh_coefficients(const ProbTable<Scalar>& t) {
  // Each coefficient is 1/4 of the correlation of f with its character.
  Scalar sum(0), su(0), sv(0), suv(0);
  for (int a = 0; a <= 1; ++a) {
    for (int b = 0; b <= 1; ++b) {
      const int u = 2 * a - 1;
      const int v = 2 * b - 1;
      const Scalar& f = t.cell(a, b);
      sum += f;
      su += f * u;
      sv += f * v;
      suv += f * (u * v);
    }
  }
  return {sum / 4, su / 4, sv / 4, suv / 4};
}

/// Argument of the pmi logarithm, P(A=a, B=b) / (P(A=a) P(B=b)).
template <TableScalar Scalar>
Scalar pmi_ratio(const ProbTable<Scalar>& t, int a, int b) {
  const auto m = marginals(t);
  const Scalar pa = a == 1 ? m.alpha : Scalar(1 - m.alpha);
  const Scalar pb = b == 1 ? m.beta : Scalar(1 - m.beta);
  return t.cell(a, b) / (pa * pb);
}

/// Pointwise mutual information of the atom (A=a, B=b); -inf on an empty cell.
template <TableScalar Scalar>
ExtReal<double> pmi(const ProbTable<Scalar>& t, int a, int b) {
  if (t.cell(a, b) == 0) return ExtReal<double>::neg_inf();
  return log_of(pmi_ratio(t, a, b));
}

/// Mutual information in nats, with 0 log 0 = 0.
template <TableScalar Scalar>
double mutual_information(const ProbTable<Scalar>& t) {
  auto term = [&](int a, int b) {
    const Scalar& c = t.cell(a, b);
    if (c == 0) return 0.0;
    return to_double(c) * log_of(pmi_ratio(t, a, b));
  };
  // Grouped so swapping A and B permutes within each pair.
  return (term(1, 1) + term(0, 0)) + (term(1, 0) + term(0, 1));
}

template <TableScalar Scalar>
struct RegressionSlopes {
  Scalar x_on_y;  ///< Cov / Var(Y)
  Scalar y_on_x;  ///< Cov / Var(X)
};

template <TableScalar Scalar>
RegressionSlopes<Scalar> regression_slopes(const ProbTable<Scalar>& t) {
  const auto m = marginals(t);
  const Scalar cov = covariance(t);
  return {cov / (m.beta * (1 - m.beta)), cov / (m.alpha * (1 - m.alpha))};
}

/// Probabilities that two independent draws are concordant ({(1,1),(0,0)})
/// or discordant ({(1,0),(0,1)}).
template <TableScalar Scalar>
struct Concordance {
  Scalar concordant;
  Scalar discordant;

  friend bool operator==(const Concordance&, const Concordance&) = default;
};

template <TableScalar Scalar>
Concordance<Scalar> concordance(const ProbTable<Scalar>& t) {
  return {2 * t.p() * t.s(), 2 * t.q() * t.r()};
}

/// Independent-coupling mismatch P(X != Y) minus the actual q + r.
template <TableScalar Scalar>
Scalar mismatch_excess(const ProbTable<Scalar>& t) {
  const auto m = marginals(t);
  const Scalar independent = m.alpha * (1 - m.beta) + (1 - m.alpha) * m.beta;
  return independent - (t.q() + t.r());
}

/// P(B|A) / P(B|~A).
template <TableScalar Scalar>
ExtReal<Scalar> bayes_factor(const ProbTable<Scalar>& t) {
  const Scalar b_given_a = t.p() / (t.p() + t.q());
  const Scalar b_given_not_a = t.r() / (t.r() + t.s());
  return detail::ratio<Scalar>(b_given_a, b_given_not_a, "Bayes factor");
}

template <TableScalar Scalar>
struct LikelihoodRatios {
  ExtReal<Scalar> l0;  ///< P(B=0|A) / P(B=0|~A)
  ExtReal<Scalar> l1;  ///< P(B=1|A) / P(B=1|~A)
};

template <TableScalar Scalar>
LikelihoodRatios<Scalar> likelihood_ratios(const ProbTable<Scalar>& t) {
  const auto m = marginals(t);
  const Scalar not_alpha = 1 - m.alpha;
  return {detail::ratio<Scalar>(t.q() / m.alpha, t.s() / not_alpha, "likelihood ratio at 0"),
          detail::ratio<Scalar>(t.p() / m.alpha, t.r() / not_alpha, "likelihood ratio at 1")};
}

/// Lambda(1) / Lambda(0) over extended nonnegative reals.
template <TableScalar Scalar>
ExtReal<Scalar> likelihood_ratio_ratio(const LikelihoodRatios<Scalar>& lr) {
  const bool l1_inf = !lr.l1.finite();
  const bool l0_inf = !lr.l0.finite();
  if (l1_inf && l0_inf) throw Error(Errc::Indeterminate, "likelihood ratio quotient is inf/inf");
  if (l0_inf) return ExtReal<Scalar>(Scalar(0));
  if (l1_inf) return ExtReal<Scalar>::pos_inf();
  return detail::ratio<Scalar>(lr.l1.value, lr.l0.value, "likelihood ratio quotient");
}

/// Slope of the saturated logistic regression of 1_A on 1_B:
/// logit P(X=1|Y=1) - logit P(X=1|Y=0), each logit taken as a log odds.
template <TableScalar Scalar>
ExtReal<double> logistic_slope(const ProbTable<Scalar>& t) {
  detail::require_strictly_positive(t, "logistic slope");
  const double logit_b = log_of(t.p()) - log_of(t.r());
  const double logit_not_b = log_of(t.q()) - log_of(t.s());
  return logit_b - logit_not_b;
}

/// Effect-coded interaction of the saturated log-linear model,
/// lambda_AB(1,1) = g(1,1) - mean_b g(1,b) - mean_a g(a,1) + mean g.
template <TableScalar Scalar>
double loglinear_interaction(const ProbTable<Scalar>& t) {
  detail::require_strictly_positive(t, "log-linear interaction");
  const double g11 = log_of(t.p());
  const double g10 = log_of(t.q());
  const double g01 = log_of(t.r());
  const double g00 = log_of(t.s());
  const double row_mean = (g11 + g10) / 2;
  const double col_mean = (g11 + g01) / 2;
  const double grand_mean = ((g11 + g00) + (g10 + g01)) / 4;
  return g11 - row_mean - col_mean + grand_mean;
}

/// Total positivity of order two: the single minor ps - qr is nonnegative.
template <TableScalar Scalar>
bool tp2(const ProbTable<Scalar>& t) {
  return t.p() * t.s() >= t.q() * t.r();
}

struct StochasticOrder {
  Sign rowwise;     ///< law of B given A versus given ~A
  Sign columnwise;  ///< law of A given B versus given ~B
};

template <TableScalar Scalar>
StochasticOrder stochastic_dominance(const ProbTable<Scalar>& t,
                                     const SignPolicy& policy = default_policy<Scalar>()) {
  const auto d = conditional_diffs(t);
  return {classify(d.b, policy), classify(d.a, policy)};
}

/// 1 when Delta is zero under the policy, else 2 (M is never the zero matrix).
template <TableScalar Scalar>
int rank_of_M(const ProbTable<Scalar>& t, const SignPolicy& policy = default_policy<Scalar>()) {
  return classify(delta(t), policy) == Sign::Zero ? 1 : 2;
}

}  // namespace binassoc
