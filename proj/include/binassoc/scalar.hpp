#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

namespace binassoc {

// Expression templates are disabled so the type composes cleanly with Eigen's
// own expression machinery.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
inline constexpr bool is_exact_v = std::is_same_v<Scalar, Rational>;

template <typename Scalar>
concept TableScalar = std::is_same_v<Scalar, double> || std::is_same_v<Scalar, Rational>;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Natural log. Rationals go through log1p(x - 1) with the subtraction done
/// exactly, so ratios close to one keep their full relative precision.
inline double log_of(double x) { return std::log(x); }
inline double log_of(const Rational& x) { return std::log1p(to_double(x - 1)); }

/// Renders a float with 17 significant digits; infinities as "+inf"/"-inf".
std::string to_text(double x);
/// Renders a rational as "n/d", or "n" when the denominator is one.
std::string to_text(const Rational& x);

/// Parses a decimal literal ("0.25", "-1.5e-3") or fraction ("3/8") exactly.
/// Returns nullopt on anything else.
std::optional<Rational> parse_rational(std::string_view text);

/// Parses a finite double, rejecting trailing garbage.
std::optional<double> parse_double(std::string_view text);

/// Exact square root when both numerator and denominator are perfect squares.
std::optional<Rational> exact_sqrt(const Rational& x);

/// Rational approximation of sqrt(x) refined by Newton steps in exact
/// arithmetic from a double seed; each step roughly doubles the correct digits.
Rational approx_sqrt(const Rational& x, int newton_steps = 2);

}  // namespace binassoc
