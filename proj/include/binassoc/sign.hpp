#pragma once

#include "binassoc/error.hpp"
#include "binassoc/scalar.hpp"

#include <cmath>
#include <limits>
#include <string_view>

namespace binassoc {

// Ordered Negative < Zero < Positive through the underlying values.
enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

constexpr std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
  }
  return "zero";
}

inline constexpr double kDefaultZeroBand = 1e-12;

/// How signs are decided: exact comparison, or a symmetric zero band around
/// the reference value for floating-point inputs.
struct SignPolicy {
  enum class Mode { Exact, Float };

  Mode mode = Mode::Exact;
  double zero_band = 0.0;

  static SignPolicy exact() { return {Mode::Exact, 0.0}; }
  static SignPolicy floating(double band = kDefaultZeroBand) {
    if (!(band >= 0.0)) throw Error(Errc::InvalidArgument, "zero band must be nonnegative");
    return {Mode::Float, band};
  }

  bool is_exact() const { return mode == Mode::Exact; }
};

/// Default policy for a table scalar: exact for rationals, 1e-12 band otherwise.
template <TableScalar Scalar>
SignPolicy default_policy() {
  if constexpr (is_exact_v<Scalar>) return SignPolicy::exact();
  else return SignPolicy::floating();
}

/// Difference-type measures compare against zero, ratio-type against one.
enum class Reference { Zero, One };

/// Extended real: a finite scalar or one of the two infinities.
template <typename Scalar>
struct ExtReal {
  enum class Kind { Finite, PosInf, NegInf };

  Kind kind = Kind::Finite;
  Scalar value{};

  ExtReal() = default;
  ExtReal(Scalar v) : kind(Kind::Finite), value(std::move(v)) {}  // NOLINT(implicit)

  static ExtReal pos_inf() { return ExtReal(Kind::PosInf); }
  static ExtReal neg_inf() { return ExtReal(Kind::NegInf); }

  bool finite() const { return kind == Kind::Finite; }

  double approx() const {
    switch (kind) {
      case Kind::PosInf: return std::numeric_limits<double>::infinity();
      case Kind::NegInf: return -std::numeric_limits<double>::infinity();
      case Kind::Finite: break;
    }
    return to_double(value);
  }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.kind != b.kind) return false;
    return !a.finite() || a.value == b.value;
  }

 private:
  explicit ExtReal(Kind k) : kind(k) {}
};

template <typename Scalar>
std::string to_text(const ExtReal<Scalar>& x) {
  switch (x.kind) {
    case ExtReal<Scalar>::Kind::PosInf: return "+inf";
    case ExtReal<Scalar>::Kind::NegInf: return "-inf";
    case ExtReal<Scalar>::Kind::Finite: break;
  }
  return to_text(x.value);
}

template <TableScalar Scalar>
Sign sign_of(const Scalar& x) {
  if (x > 0) return Sign::Positive;
  if (x < 0) return Sign::Negative;
  return Sign::Zero;
}

/// Sign of `value` relative to the reference under `policy`. Exact mode
/// compares exactly; float mode maps |value - ref| <= zero_band to Zero.
template <TableScalar Scalar>
Sign classify(const Scalar& value, const SignPolicy& policy, Reference ref = Reference::Zero) {
  if constexpr (!is_exact_v<Scalar>) {
    if (std::isnan(value)) throw Error(Errc::IndeterminateInput, "cannot classify NaN");
  }
  const Scalar diff = ref == Reference::One ? Scalar(value - 1) : value;
  if (policy.is_exact()) return sign_of(diff);
  const double d = to_double(diff);
  if (std::fabs(d) <= policy.zero_band) return Sign::Zero;
  return d > 0 ? Sign::Positive : Sign::Negative;
}

template <TableScalar Scalar>
Sign classify(const ExtReal<Scalar>& value, const SignPolicy& policy,
              Reference ref = Reference::Zero) {
  switch (value.kind) {
    case ExtReal<Scalar>::Kind::PosInf: return Sign::Positive;
    case ExtReal<Scalar>::Kind::NegInf: return Sign::Negative;
    case ExtReal<Scalar>::Kind::Finite: break;
  }
  return classify(value.value, policy, ref);
}

}  // namespace binassoc
