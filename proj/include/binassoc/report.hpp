#pragma once

#include "binassoc/measures.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace binassoc {

/// How an entry's sign relates to sign(Delta) when association is positive.
enum class Orientation {
  WithDelta,     ///< sign equals sign(Delta)
  AgainstDelta,  ///< sign equals -sign(Delta) (discordant atoms)
  Derived,       ///< boolean/integer summary checked by its own rule
  Unsigned,      ///< magnitude only; not part of the verdict
};

struct MeasureEntry {
  std::string name;
  std::string perspective;
  Orientation orientation = Orientation::WithDelta;
  Reference reference = Reference::Zero;

  /// Rendered value; empty when the measure was omitted.
  std::optional<std::string> text;
  double approx = std::numeric_limits<double>::quiet_NaN();
  bool approximate = false;
  std::optional<Sign> sign;
  std::optional<Errc> omitted;
  bool agrees = true;
};

enum class Verdict { Consistent, Inconsistent };

struct MeasureReport {
  SignPolicy policy;
  Sign delta_sign = Sign::Zero;
  std::vector<MeasureEntry> entries;  // sorted by name
  Verdict verdict = Verdict::Consistent;
  std::vector<std::string> dissenting;

  const MeasureEntry* find(std::string_view name) const {
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const MeasureEntry& e) { return e.name == name; });
    return it == entries.end() ? nullptr : &*it;
  }
};

namespace detail {

struct EntryValue {
  std::string text;
  double approx;
  bool approximate = false;
  std::optional<Sign> sign;
};

template <TableScalar Scalar>
EntryValue scalar_value(const Scalar& v, const SignPolicy& policy, Reference ref = Reference::Zero) {
  return {to_text(v), to_double(v), false, classify(v, policy, ref)};
}

template <TableScalar Scalar>
EntryValue ext_value(const ExtReal<Scalar>& v, const SignPolicy& policy, Reference ref) {
  return {to_text(v), v.approx(), false, classify(v, policy, ref)};
}

// Logarithmic measures. On rational tables the value is a double but the sign
// is read exactly from the log's argument: sign(log x) = sign(x - 1).
template <TableScalar Scalar>
EntryValue log_value(const ExtReal<double>& v, const SignPolicy& policy,
                     const std::function<Sign()>& exact_sign) {
  EntryValue out{to_text(v), v.approx(), is_exact_v<Scalar>, std::nullopt};
  out.sign = (is_exact_v<Scalar> && policy.is_exact()) ? exact_sign() : classify(v, policy);
  return out;
}

template <TableScalar Scalar>
Sign compare(const Scalar& lhs, const Scalar& rhs) {
  return sign_of<Scalar>(lhs - rhs);
}

}  // namespace detail

/// Computes every measure, classifies each sign under `policy`, and checks
/// that all of them agree with sign(Delta). Measures whose preconditions fail
/// on this table are recorded as omissions rather than aborting the report.
template <TableScalar Scalar>
MeasureReport full_report(const ProbTable<Scalar>& t,
                          const SignPolicy& policy = default_policy<Scalar>()) {
  MeasureReport report;
  report.policy = policy;
  report.delta_sign = classify(delta(t), policy);
  const Sign ds = report.delta_sign;

  auto add = [&](std::string name, std::string perspective, Orientation orientation,
                  Reference ref, const std::function<detail::EntryValue()>& compute) {
    MeasureEntry e;
    e.name = std::move(name);
    e.perspective = std::move(perspective);
    e.orientation = orientation;
    e.reference = ref;
    try {
      detail::EntryValue v = compute();
      e.text = std::move(v.text);
      e.approx = v.approx;
      e.approximate = v.approximate;
      e.sign = v.sign;
      if (orientation == Orientation::WithDelta) e.agrees = e.sign == ds;
      if (orientation == Orientation::AgainstDelta) e.agrees = e.sign == -ds;
    } catch (const Error& err) {
      e.omitted = err.code();
    }
    report.entries.push_back(std::move(e));
  };
  auto with = [&](std::string name, std::string perspective, auto compute,
                  Reference ref = Reference::Zero) {
    add(std::move(name), std::move(perspective), Orientation::WithDelta, ref, compute);
  };

  const auto m = marginals(t);
  const auto positive_exact = [&](const Scalar& lhs, const Scalar& rhs) {
    return [lhs, rhs] { return detail::compare<Scalar>(lhs, rhs); };
  };

  with("delta", "Linear algebra", [&] { return detail::scalar_value(delta(t), policy); });
  with("covariance", "Probability", [&] { return detail::scalar_value(covariance(t), policy); });
  with("conditional_diff_a", "Evidential support",
       [&] { return detail::scalar_value(conditional_diffs(t).a, policy); });
  with("conditional_diff_b", "Evidential support",
       [&] { return detail::scalar_value(conditional_diffs(t).b, policy); });
  with("regression_slope_x_on_y", "Regression",
       [&] { return detail::scalar_value(regression_slopes(t).x_on_y, policy); });
  with("regression_slope_y_on_x", "Regression",
       [&] { return detail::scalar_value(regression_slopes(t).y_on_x, policy); });
  with("walsh_interaction", "Walsh-Fourier", [&] {
    const auto c = walsh_coefficients(t);
    const Scalar independent = Scalar(2 * m.alpha - 1) * Scalar(2 * m.beta - 1) / 4;
    return detail::scalar_value(Scalar(c.c_uv - independent), policy);
  });
  with("phi", "Hilbert space", [&] {
    const auto r = phi(t);
    auto v = detail::scalar_value(r.value, policy);
    v.approximate = r.approximate;
    // An approximate root is only meaningful to double precision.
    if (r.approximate) v.text = to_text(v.approx);
    return v;
  });
  with("coupling_t", "Coupling", [&] { return detail::scalar_value(coupling_t(t), policy); });
  with("theta", "Coupling", [&] { return detail::scalar_value(theta(t), policy); });
  with("concordance_excess", "Concordance", [&] {
    const auto c = concordance(t);
    return detail::scalar_value(Scalar(c.concordant - c.discordant), policy);
  });
  with("mismatch_excess", "Transport", [&] { return detail::scalar_value(mismatch_excess(t), policy); });
  with("odds_ratio", "Statistics",
       [&] { return detail::ext_value(odds_ratio(t), policy, Reference::One); }, Reference::One);
  with("bayes_factor", "Bayesian",
       [&] { return detail::ext_value(bayes_factor(t), policy, Reference::One); }, Reference::One);
  with("likelihood_ratio_ratio", "Monotone likelihood ratio", [&] {
    return detail::ext_value(likelihood_ratio_ratio(likelihood_ratios(t)), policy, Reference::One);
  }, Reference::One);
  with("log_odds_ratio", "Log-potential", [&] {
    return detail::log_value<Scalar>(log_odds_ratio(t), policy,
                                     positive_exact(Scalar(t.p() * t.s()), Scalar(t.q() * t.r())));
  });
  with("ising_gamma", "Ising model", [&] {
    return detail::log_value<Scalar>(ising_params(t).gamma, policy,
                                     positive_exact(Scalar(t.p() * t.s()), Scalar(t.q() * t.r())));
  });
  with("loglinear_interaction", "Log-linear", [&] {
    return detail::log_value<Scalar>(loglinear_interaction(t), policy,
                                     positive_exact(Scalar(t.p() * t.s()), Scalar(t.q() * t.r())));
  });
  with("logistic_slope", "Logistic", [&] {
    const ExtReal<double> v = logistic_slope(t);
    return detail::log_value<Scalar>(v, policy,
                                     positive_exact(Scalar(t.p() / t.r()), Scalar(t.q() / t.s())));
  });
  for (int a = 0; a <= 1; ++a) {
    for (int b = 0; b <= 1; ++b) {
      const std::string name = std::string("pmi_") + (a ? "a" : "nota") + "_" + (b ? "b" : "notb");
      add(name, "Information", a == b ? Orientation::WithDelta : Orientation::AgainstDelta,
          Reference::Zero, [&, a, b] {
            return detail::log_value<Scalar>(pmi(t, a, b), policy, [&, a, b] {
              if (t.cell(a, b) == 0) return Sign::Negative;
              return detail::compare<Scalar>(pmi_ratio(t, a, b), Scalar(1));
            });
          });
    }
  }
  with("stochastic_order_rows", "Stochastic order", [&] {
    const Sign s = stochastic_dominance(t, policy).rowwise;
    return detail::EntryValue{std::string(to_string(s)), static_cast<double>(static_cast<int>(s)), false, s};
  });
  with("stochastic_order_columns", "Stochastic order", [&] {
    const Sign s = stochastic_dominance(t, policy).columnwise;
    return detail::EntryValue{std::string(to_string(s)), static_cast<double>(static_cast<int>(s)), false, s};
  });

  add("mutual_information", "Information", Orientation::Unsigned, Reference::Zero, [&] {
    const double mi = mutual_information(t);
    return detail::EntryValue{to_text(mi), mi, is_exact_v<Scalar>, classify(mi, SignPolicy::floating(policy.zero_band))};
  });

  add("tp2", "Total positivity", Orientation::Derived, Reference::Zero, [&] {
    const bool v = tp2(t);
    return detail::EntryValue{v ? "true" : "false", v ? 1.0 : 0.0, false, std::nullopt};
  });
  add("rank_m", "Linear algebra", Orientation::Derived, Reference::Zero, [&] {
    const int rank = rank_of_M(t, policy);
    return detail::EntryValue{std::to_string(rank), static_cast<double>(rank), false, std::nullopt};
  });

  for (auto& e : report.entries) {
    if (e.omitted) continue;
    // TP2 is ps >= qr; inside the zero band Delta counts as a tie.
    if (e.name == "tp2") e.agrees = ds == Sign::Zero || (e.approx == 1.0) == (ds == Sign::Positive);
    if (e.name == "rank_m") e.agrees = (e.approx == 1.0) == (ds == Sign::Zero);
  }

  std::sort(report.entries.begin(), report.entries.end(),
            [](const MeasureEntry& a, const MeasureEntry& b) { return a.name < b.name; });
  for (const auto& e : report.entries)
    if (!e.omitted && !e.agrees) report.dissenting.push_back(e.name);
  report.verdict = report.dissenting.empty() ? Verdict::Consistent : Verdict::Inconsistent;
  return report;
}

}  // namespace binassoc
