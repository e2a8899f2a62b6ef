#include "doctest.h"

#include "binassoc/measures.hpp"
#include "binassoc/table.hpp"

#include <Eigen/Dense>

#include <cmath>

using namespace binassoc;

namespace {

Rational q(long num, long den = 1) { return Rational(num) / den; }

// T1 = (0.4, 0.1, 0.2, 0.3), the running example; TU is independence.
const auto T1 = from_counts({4, 1, 2, 3});
const auto T1f = to_float(T1);
const auto TU = from_counts({1, 1, 1, 1});

// Reference values computed with mpmath at 40 digits.
constexpr double kPhi = 0.408248290463863016;
constexpr double kLog6 = 1.791759469228055000;
constexpr double kGamma = 0.44793986730701375;
constexpr double kHa = -0.101366277027041095;
constexpr double kHb = 0.245207313252931559;
constexpr double kLogZ = 1.508071635407059279;
constexpr double kPmi11 = 0.287682072451780927;
constexpr double kPmi10 = -0.693147180559945309;
constexpr double kMi = 0.086304621735534278;

// Fits log P(u, v) = c0 + c1 u + c2 v + c3 uv by solving the 4x4 system
// directly; independent of the closed forms under test.
Eigen::Vector4d loglinear_fit(const ProbTable<double>& t) {
  Eigen::Matrix4d design;
  Eigen::Vector4d rhs;
  int row = 0;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b) {
      const double u = 2 * a - 1;
      const double v = 2 * b - 1;
      design.row(row) << 1, u, v, u * v;
      rhs(row) = std::log(t.cell(a, b));
      ++row;
    }
  return design.fullPivLu().solve(rhs);
}

}  // namespace

TEST_CASE("delta and its equivalents on T1") {
  CHECK(delta(T1) == q(1, 10));
  CHECK(covariance(T1) == q(1, 10));
  CHECK(coupling_t(T1) == q(1, 10));
  CHECK(theta(T1) == q(5, 3));
  const auto d = conditional_diffs(T1);
  CHECK(d.a == q(5, 12));
  CHECK(d.b == q(2, 5));
  CHECK(delta(T1f) == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("independent table is null on every signed measure") {
  CHECK(delta(TU) == 0);
  CHECK(odds_ratio(TU) == ExtReal<Rational>(q(1)));
  CHECK(log_odds_ratio(TU).value == 0.0);
  CHECK(phi(TU).value == 0);
  CHECK_FALSE(phi(TU).approximate);
  CHECK(mutual_information(TU) == 0.0);
  CHECK(ising_params(TU).gamma == 0.0);
}

TEST_CASE("phi on T1") {
  const auto r = phi(T1);
  CHECK(r.approximate);
  CHECK(to_double(r.value) == doctest::Approx(kPhi).epsilon(1e-15));
  CHECK(phi(T1f).value == doctest::Approx(kPhi).epsilon(1e-15));
  // Perfect-square radicand gives an exact root: alpha = beta = 1/2.
  const auto half = from_counts({3, 1, 1, 3});
  CHECK_FALSE(phi(half).approximate);
  CHECK(phi(half).value == q(1, 2));
}

TEST_CASE("odds-ratio family on T1") {
  CHECK(odds_ratio(T1) == ExtReal<Rational>(q(6)));
  CHECK(log_odds_ratio(T1).value == doctest::Approx(kLog6).epsilon(1e-15));
  CHECK(logistic_slope(T1).value == doctest::Approx(kLog6).epsilon(1e-15));
  CHECK(loglinear_interaction(T1) == doctest::Approx(kGamma).epsilon(1e-15));
  CHECK(bayes_factor(T1) == ExtReal<Rational>(q(2)));
  const auto lr = likelihood_ratios(T1);
  CHECK(lr.l1 == ExtReal<Rational>(q(2)));
  CHECK(lr.l0 == ExtReal<Rational>(q(1, 3)));
  CHECK(likelihood_ratio_ratio(lr) == ExtReal<Rational>(q(6)));
}

TEST_CASE("Ising parameters on T1") {
  const auto k = ising_params(T1);
  CHECK(k.gamma == doctest::Approx(kGamma).epsilon(1e-15));
  CHECK(k.h_a == doctest::Approx(kHa).epsilon(1e-15));
  CHECK(k.h_b == doctest::Approx(kHb).epsilon(1e-15));
  CHECK(k.log_z == doctest::Approx(kLogZ).epsilon(1e-15));
  CHECK(gibbs_mass(k, 1, 1) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(gibbs_mass(k, -1, -1) == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("Ising parameters agree with a direct log-linear solve") {
  for (const auto& t : {T1f, to_float(from_counts({1, 7, 3, 2})), to_float(from_counts({9, 2, 2, 9}))}) {
    const Eigen::Vector4d c = loglinear_fit(t);
    const auto k = ising_params(t);
    CHECK(k.log_z == doctest::Approx(-c(0)).epsilon(1e-13));
    CHECK(k.h_a == doctest::Approx(c(1)).epsilon(1e-13));
    CHECK(k.h_b == doctest::Approx(c(2)).epsilon(1e-13));
    CHECK(k.gamma == doctest::Approx(c(3)).epsilon(1e-13));
  }
}

TEST_CASE("Walsh expansion of T1") {
  const auto c = walsh_coefficients(T1);
  CHECK(c.c_empty == q(1, 4));
  CHECK(c.c_u == q(0));
  CHECK(c.c_v == q(1, 20));
  CHECK(c.c_uv == q(1, 10));
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b) CHECK(c(2 * a - 1, 2 * b - 1) == T1.cell(a, b));
  CHECK(spin_correlation(T1) == q(2, 5));
}

TEST_CASE("information measures on T1") {
  CHECK(pmi_ratio(T1, 1, 1) == q(4, 3));
  CHECK(pmi(T1, 1, 1).value == doctest::Approx(kPmi11).epsilon(1e-15));
  CHECK(pmi(T1, 1, 0).value == doctest::Approx(kPmi10).epsilon(1e-15));
  CHECK(pmi(T1, 0, 0).value > 0);
  CHECK(pmi(T1, 0, 1).value < 0);
  CHECK(mutual_information(T1) == doctest::Approx(kMi).epsilon(1e-14));
}

TEST_CASE("pairwise and ordering measures on T1") {
  const auto c = concordance(T1);
  CHECK(c.concordant == q(6, 25));
  CHECK(c.discordant == q(1, 25));
  CHECK(mismatch_excess(T1) == q(1, 5));
  const auto s = regression_slopes(T1);
  CHECK(s.x_on_y == q(5, 12));
  CHECK(s.y_on_x == q(2, 5));
  CHECK(tp2(T1));
  CHECK_FALSE(tp2(complement(T1, Axis::A)));
  const auto order = stochastic_dominance(T1);
  CHECK(order.rowwise == Sign::Positive);
  CHECK(order.columnwise == Sign::Positive);
  CHECK(rank_of_M(T1) == 2);
  CHECK(rank_of_M(TU) == 1);
}

TEST_CASE("zero cells give infinities or omissions") {
  const auto diag = from_probs<Rational>(q(1, 2), q(0), q(0), q(1, 2));
  CHECK(odds_ratio(diag).kind == ExtReal<Rational>::Kind::PosInf);
  CHECK(log_odds_ratio(diag).kind == ExtReal<double>::Kind::PosInf);
  CHECK(pmi(diag, 1, 0).kind == ExtReal<double>::Kind::NegInf);
  CHECK(mutual_information(diag) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(ising_params(diag), Error);
  CHECK_THROWS_AS(logistic_slope(diag), Error);

  const auto anti = from_probs<Rational>(q(0), q(1, 2), q(1, 2), q(0));
  CHECK(odds_ratio(anti) == ExtReal<Rational>(q(0)));
  CHECK(log_odds_ratio(anti).kind == ExtReal<double>::Kind::NegInf);
}

TEST_CASE("0/0 ratios are indeterminate") {
  // Unreachable from a table with interior marginals, so exercised directly.
  try {
    detail::ratio<Rational>(q(0), q(0), "test ratio");
    FAIL("expected Indeterminate");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Indeterminate);
  }
  CHECK(detail::ratio<Rational>(q(1), q(0), "test ratio").kind == ExtReal<Rational>::Kind::PosInf);
}

TEST_CASE("sign classification") {
  const auto band = SignPolicy::floating(1e-12);
  CHECK(classify(5e-13, band) == Sign::Zero);
  CHECK(classify(-2e-12, band) == Sign::Negative);
  CHECK(classify(1.0 + 5e-13, band, Reference::One) == Sign::Zero);
  CHECK(classify(q(1, 1000000000), SignPolicy::exact()) == Sign::Positive);
  CHECK(classify(ExtReal<double>::neg_inf(), band) == Sign::Negative);
  CHECK(classify(ExtReal<Rational>::pos_inf(), SignPolicy::exact(), Reference::One) == Sign::Positive);
  CHECK_THROWS_AS(classify(std::nan(""), band), Error);
  CHECK(-Sign::Positive == Sign::Negative);
}
