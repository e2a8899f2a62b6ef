#include "doctest.h"

#include "binassoc/scalar.hpp"
#include "binassoc/table.hpp"

using namespace binassoc;

namespace {

Rational q(long num, long den = 1) { return Rational(num) / den; }

template <typename Fn>
Errc error_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected binassoc::Error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("counts normalize to an exact table") {
  const auto t = from_counts({4, 1, 2, 3});
  CHECK(t.p() == q(2, 5));
  CHECK(t.q() == q(1, 10));
  CHECK(t.r() == q(1, 5));
  CHECK(t.s() == q(3, 10));
  CHECK(t.cell(1, 1) == t.p());
  CHECK(t.cell(1, 0) == t.q());
  CHECK(t.cell(0, 1) == t.r());
  CHECK(t.cell(0, 0) == t.s());
  CHECK(t.strictly_positive());
}

TEST_CASE("marginals of T1") {
  const auto m = marginals(from_counts({4, 1, 2, 3}));
  CHECK(m.alpha == q(1, 2));
  CHECK(m.beta == q(3, 5));
}

TEST_CASE("construction rejects invalid input") {
  CHECK(error_code([] { from_probs<double>(-0.1, 0.5, 0.3, 0.3); }) == Errc::NegativeCell);
  CHECK(error_code([] { from_probs<double>(0.3, 0.3, 0.3, 0.3); }) == Errc::SumOutOfTolerance);
  CHECK(error_code([] { from_probs<Rational>(q(1, 4), q(1, 4), q(1, 4), q(1, 5)); }) ==
        Errc::SumOutOfTolerance);
  CHECK(error_code([] { from_probs<double>(0.5, 0.5, 0.0, 0.0); }) == Errc::DegenerateMarginal);
  CHECK(error_code([] { from_probs<double>(0.5, 0.0, 0.5, 0.0); }) == Errc::DegenerateMarginal);
  CHECK(error_code([] { from_counts({0, 0, 0, 0}); }) == Errc::EmptySpace);
  CHECK(error_code([] { from_counts({5, 0, 0, 0}); }) == Errc::DegenerateMarginal);
}

TEST_CASE("float tables within tolerance are renormalized") {
  const auto t = from_probs<double>(0.25, 0.25, 0.25, 0.25 + 5e-10);
  CHECK((t.p() + t.q()) + (t.r() + t.s()) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("zero cells are allowed when marginals stay interior") {
  const auto t = from_probs<Rational>(q(1, 2), q(0), q(0), q(1, 2));
  CHECK_FALSE(t.strictly_positive());
}

TEST_CASE("transpose swaps the off-diagonal cells") {
  const auto t = from_counts({4, 1, 2, 3});
  const auto tt = transpose(t);
  CHECK(tt.p() == t.p());
  CHECK(tt.q() == t.r());
  CHECK(tt.r() == t.q());
  CHECK(tt.s() == t.s());
  CHECK(transpose(tt) == t);
}

TEST_CASE("complement flips one event") {
  const auto t = from_counts({4, 1, 2, 3});
  const auto ca = complement(t, Axis::A);
  CHECK(ca.p() == t.r());
  CHECK(ca.q() == t.s());
  CHECK(ca.r() == t.p());
  CHECK(ca.s() == t.q());
  const auto cb = complement(t, Axis::B);
  CHECK(cb.p() == t.q());
  CHECK(cb.q() == t.p());
  CHECK(cb.r() == t.s());
  CHECK(cb.s() == t.r());
  CHECK(complement(ca, Axis::A) == t);
}

TEST_CASE("conversions between float and exact tables") {
  const auto t = from_counts({4, 1, 2, 3});
  const auto f = to_float(t);
  CHECK(f.p() == 0.4);
  // Exact conversion divides by the exact sum of the stored doubles.
  const auto e = to_exact(f);
  CHECK(e.p() + e.q() + e.r() + e.s() == 1);
  CHECK(to_double(e.p()) == doctest::Approx(0.4).epsilon(1e-15));
  const auto n = nearest_rational(from_probs<double>(0.4, 0.1, 0.2, 0.3), 10);
  CHECK(n == t);
}

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("0.1") == q(1, 10));
  CHECK(parse_rational("1/10") == q(1, 10));
  CHECK(parse_rational("-2.5e-1") == q(-1, 4));
  CHECK(parse_rational("3") == q(3));
  CHECK(parse_rational(".5") == q(1, 2));
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("abc"));
  CHECK_FALSE(parse_rational(""));
  CHECK_FALSE(parse_rational("1.2.3"));
}

TEST_CASE("text rendering") {
  CHECK(to_text(q(1, 10)) == "1/10");
  CHECK(to_text(q(6)) == "6");
  CHECK(to_text(0.1) == "0.10000000000000001");
  CHECK(to_text(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("square roots of rationals") {
  CHECK(exact_sqrt(q(9, 16)) == q(3, 4));
  CHECK_FALSE(exact_sqrt(q(1, 2)));
  const Rational r = approx_sqrt(q(1, 2));
  CHECK(to_double(r * r) == doctest::Approx(0.5).epsilon(1e-15));
}
