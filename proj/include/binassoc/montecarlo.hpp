#pragma once

#include "binassoc/table.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace binassoc::montecarlo {

/// Generator: std::mt19937_64, seeded through std::seed_seq from the 64-bit
/// seed and a shard index. Both algorithms are fully specified by the C++
/// standard, so streams are reproducible across platforms.
std::mt19937_64 shard_engine(std::uint64_t seed, std::uint64_t shard);

/// Estimators split their work into this many shards regardless of the
/// number of threads used, so results do not depend on the machine.
inline constexpr std::uint64_t kShards = 16;

struct SampledPair {
  bool x;  ///< indicator of A
  bool y;  ///< indicator of B

  friend bool operator==(const SampledPair&, const SampledPair&) = default;
};

/// I.i.d. draws by inverse CDF over the cells in the order (p, q, r, s).
class PairSampler {
 public:
  PairSampler(const ProbTable<double>& t, std::mt19937_64 engine);

  SampledPair operator()();

 private:
  double c1_, c2_, c3_;
  std::mt19937_64 engine_;
};

/// `n` draws from one stream seeded by shard 0 of `seed`.
std::vector<SampledPair> sample_pairs(const ProbTable<double>& t, std::uint64_t n, std::uint64_t seed);

struct SampleEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const SampleEstimate&, const SampleEstimate&) = default;
};

/// Plug-in covariance of the indicators from n draws; delta-method standard
/// error from the empirical fourth central moment.
SampleEstimate estimate_covariance(const ProbTable<double>& t, std::uint64_t n, std::uint64_t seed);

struct ConcordanceEstimate {
  SampleEstimate concordant;
  SampleEstimate discordant;
};

/// Frequencies of concordant and discordant pairs among n / 2 disjoint
/// consecutive pairs of draws.
ConcordanceEstimate estimate_concordance(const ProbTable<double>& t, std::uint64_t n,
                                         std::uint64_t seed);

/// Frequency of X != Y over n draws.
SampleEstimate estimate_mismatch(const ProbTable<double>& t, std::uint64_t n, std::uint64_t seed);

/// Number of draws that shard `k` takes out of `n`.
std::uint64_t shard_size(std::uint64_t n, std::uint64_t k);

}  // namespace binassoc::montecarlo
