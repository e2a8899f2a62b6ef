#include "binassoc/cli.hpp"

#include "binassoc/family.hpp"
#include "binassoc/ingest.hpp"
#include "binassoc/montecarlo.hpp"
#include "binassoc/oracle.hpp"
#include "binassoc/report.hpp"
#include "binassoc/serialize.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <variant>

namespace binassoc::cli {
namespace {

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string counts;
  std::string probs;
  std::string csv;
  std::string col_a;
  std::string col_b;
  bool header = false;
  std::string delim = ",";
  std::string mode;
  double zero_band = kDefaultZeroBand;
};

void add_input_options(CLI::App* cmd, InputOptions& o) {
  auto* counts = cmd->add_option("--counts", o.counts, "cell counts n_p,n_q,n_r,n_s");
  auto* probs = cmd->add_option("--probs", o.probs, "cell probabilities p,q,r,s");
  auto* csv = cmd->add_option("--csv", o.csv, "delimited file of paired 0/1 observations");
  counts->excludes(probs)->excludes(csv);
  probs->excludes(csv);
  cmd->add_option("--col-a", o.col_a, "column of the A indicator (index or header name)");
  cmd->add_option("--col-b", o.col_b, "column of the B indicator (index or header name)");
  cmd->add_flag("--header", o.header, "first row is a header");
  cmd->add_option("--delim", o.delim, "single-byte field delimiter")->capture_default_str();
  cmd->add_option("--mode", o.mode, "exact or float (default: exact for counts, float for probs)")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--zero-band", o.zero_band, "float-mode tolerance around the reference")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

CountTable parse_counts(const std::string& text) {
  const auto items = split_list(text);
  if (items.size() != 4) throw UsageError("expected four cell counts, got " + std::to_string(items.size()));
  std::uint64_t v[4];
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& s = items[i];
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v[i]);
    if (s.empty() || ec != std::errc{} || ptr != end) throw UsageError("invalid cell count '" + s + "'");
  }
  return {v[0], v[1], v[2], v[3]};
}

template <TableScalar Scalar>
Scalar parse_scalar(const std::string& text, const char* what) {
  if constexpr (is_exact_v<Scalar>) {
    if (auto v = parse_rational(text)) return *v;
  } else {
    if (auto v = parse_double(text)) return *v;
  }
  throw UsageError(std::string("invalid ") + what + " '" + text + "'");
}

template <TableScalar Scalar>
ProbTable<Scalar> parse_probs(const std::string& text) {
  const auto items = split_list(text);
  if (items.size() != 4)
    throw UsageError("expected four cell probabilities, got " + std::to_string(items.size()));
  return from_probs<Scalar>(parse_scalar<Scalar>(items[0], "probability"),
                            parse_scalar<Scalar>(items[1], "probability"),
                            parse_scalar<Scalar>(items[2], "probability"),
                            parse_scalar<Scalar>(items[3], "probability"));
}

using AnyTable = std::variant<ProbTable<Rational>, ProbTable<double>>;

AnyTable load_table(const InputOptions& o) {
  const bool from_probs_input = !o.probs.empty();
  if (o.counts.empty() && o.probs.empty() && o.csv.empty())
    throw UsageError("one of --counts, --probs or --csv is required");
  const std::string mode = !o.mode.empty() ? o.mode : (from_probs_input ? "float" : "exact");

  if (from_probs_input) {
    if (mode == "exact") return parse_probs<Rational>(o.probs);
    return parse_probs<double>(o.probs);
  }

  CountTable counts;
  if (!o.counts.empty()) {
    counts = parse_counts(o.counts);
  } else {
    if (o.col_a.empty() || o.col_b.empty()) throw UsageError("--csv needs --col-a and --col-b");
    if (o.delim.size() != 1) throw UsageError("--delim must be a single byte");
    counts = ingest(IngestSpec{o.csv, o.col_a, o.col_b, o.header, o.delim[0]});
  }
  const ProbTable<Rational> exact = from_counts(counts);
  if (mode == "exact") return exact;
  return to_float(exact);
}

SignPolicy policy_for(const AnyTable& t, double zero_band) {
  if (std::holds_alternative<ProbTable<Rational>>(t)) return SignPolicy::exact();
  return SignPolicy::floating(zero_band);
}

int cmd_analyze(const InputOptions& o, const std::string& format, std::ostream& out) {
  const AnyTable table = load_table(o);
  const SignPolicy policy = policy_for(table, o.zero_band);
  const MeasureReport report =
      std::visit([&](const auto& t) { return full_report(t, policy); }, table);
  out << (format == "csv" ? report_to_csv(report) : report_to_json(report));
  return report.verdict == Verdict::Consistent ? kExitOk : kExitInconsistent;
}

int cmd_verify(std::uint64_t n_max, unsigned threads, const std::string& format, std::ostream& out) {
  if (n_max < 4) throw UsageError("--nmax must be at least 4");
  const auto summary = oracle::exhaustive_sign_check(n_max, threads);
  out << (format == "json" ? summary_to_json(summary) : summary_to_text(summary));
  return summary.ok() ? kExitOk : kExitInconsistent;
}

template <TableScalar Scalar>
std::string render(const Scalar& v) {
  return to_text(v);
}

template <TableScalar Scalar>
void family_rows(const std::string& alpha_text, const std::string& beta_text, std::size_t grid,
                 std::ostream& out) {
  const MarginalPair<Scalar> m{parse_scalar<Scalar>(alpha_text, "alpha"),
                               parse_scalar<Scalar>(beta_text, "beta")};
  const auto fam = make_family(m);
  const auto ts = t_grid(fam, grid);
  out << "t,p,q,r,s,F,G,phi,theta,OR,flags\n";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Scalar& t = ts[i];
    const auto table = table_from_t(fam, t);
    std::vector<std::string> flags;
    if (i == 0 || i + 1 == ts.size()) flags.emplace_back("endpoint");
    if (!table.strictly_positive()) flags.emplace_back("zero_cell");

    const auto ph = phi(table);
    const std::string phi_text = ph.approximate ? to_text(to_double(ph.value)) : render(ph.value);
    std::string or_text;
    try {
      or_text = to_text(odds_ratio(table));
    } catch (const Error&) {
      flags.emplace_back("omitted:odds_ratio");
    }
    std::string flag_text;
    for (std::size_t k = 0; k < flags.size(); ++k) flag_text += (k ? ";" : "") + flags[k];

    out << render(t) << ',' << render(table.p()) << ',' << render(table.q()) << ','
        << render(table.r()) << ',' << render(table.s()) << ',' << render(F_of_t(fam, t)) << ','
        << render(G_of_t(fam, t)) << ',' << phi_text << ',' << render(theta(table)) << ','
        << or_text << ',' << flag_text << '\n';
  }
}

int cmd_family(const std::string& alpha, const std::string& beta, std::size_t grid,
               const std::string& mode, std::ostream& out) {
  if (grid < 2) throw UsageError("--grid must be at least 2");
  std::ostringstream buffer;
  if (mode == "exact") family_rows<Rational>(alpha, beta, grid, buffer);
  else family_rows<double>(alpha, beta, grid, buffer);
  out << buffer.str();
  return kExitOk;
}

int cmd_simulate(const InputOptions& o, std::uint64_t samples, std::uint64_t seed, std::ostream& out) {
  if (samples < 2) throw UsageError("--samples must be at least 2");
  const AnyTable any = load_table(o);
  const ProbTable<double> t = std::visit([](const auto& x) { return to_float(x); }, any);

  struct Row {
    const char* name;
    montecarlo::SampleEstimate est;
    double closed;
  };
  const auto conc = montecarlo::estimate_concordance(t, samples, seed);
  const auto closed_conc = concordance(t);
  const Row rows[] = {
      {"covariance", montecarlo::estimate_covariance(t, samples, seed), delta(t)},
      {"concordant", conc.concordant, closed_conc.concordant},
      {"discordant", conc.discordant, closed_conc.discordant},
      {"mismatch", montecarlo::estimate_mismatch(t, samples, seed), t.q() + t.r()},
  };

  bool all_pass = true;
  out << "quantity,estimate,std_error,closed_form,band,status\n";
  for (const auto& row : rows) {
    const double band = 4 * row.est.std_error;
    const bool pass = std::fabs(row.est.estimate - row.closed) <= band;
    all_pass = all_pass && pass;
    out << row.name << ',' << to_text(row.est.estimate) << ',' << to_text(row.est.std_error) << ','
        << to_text(row.closed) << ',' << to_text(band) << ',' << (pass ? "PASS" : "FAIL") << '\n';
  }
  return all_pass ? kExitOk : kExitInconsistent;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Association measures for 2x2 joint tables"};
  app.require_subcommand(1);

  InputOptions analyze_in;
  std::string analyze_format = "json";
  auto* analyze = app.add_subcommand("analyze", "report every association measure for one table");
  add_input_options(analyze, analyze_in);
  analyze->add_option("--format", analyze_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::uint64_t n_max = 24;
  unsigned threads = 0;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "exhaustively check sign agreement on small count tables");
  verify->add_option("--nmax", n_max, "largest table total")->capture_default_str();
  verify->add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string alpha, beta, family_mode = "float";
  std::size_t grid = 101;
  auto* family = app.add_subcommand("family", "sweep the fixed-marginal coupling family");
  family->add_option("--alpha", alpha, "P(A)")->required();
  family->add_option("--beta", beta, "P(B)")->required();
  family->add_option("--grid", grid, "number of grid points, endpoints included")->capture_default_str();
  family->add_option("--mode", family_mode, "exact or float")
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();

  InputOptions simulate_in;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo cross-check of closed forms");
  add_input_options(simulate, simulate_in);
  simulate->add_option("--samples", samples, "number of draws")->capture_default_str();
  simulate->add_option("--seed", seed, "64-bit seed")->capture_default_str();

  std::vector<const char*> argv{"binassoc"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_in, analyze_format, out);
    if (*verify) return cmd_verify(n_max, threads, verify_format, out);
    if (*family) return cmd_family(alpha, beta, grid, family_mode, out);
    if (*simulate) return cmd_simulate(simulate_in, samples, seed, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace binassoc::cli
