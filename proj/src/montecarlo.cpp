#include "binassoc/montecarlo.hpp"

#include "binassoc/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

namespace binassoc::montecarlo {
namespace {

// Cell tallies per shard, merged in shard order.
using Tally = std::array<std::uint64_t, 4>;

template <typename Work>
std::vector<Tally> run_shards(std::uint64_t units, Work&& work) {
  std::vector<Tally> tallies(kShards, Tally{});
  auto run = [&](std::uint64_t k) { tallies[k] = work(k, shard_size(units, k)); };
  const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), kShards));
  if (threads == 1) {
    for (std::uint64_t k = 0; k < kShards; ++k) run(k);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (std::uint64_t k = w; k < kShards; k += threads) run(k);
      });
  }
  return tallies;
}

Tally merge(const std::vector<Tally>& tallies) {
  Tally out{};
  for (const auto& t : tallies)
    for (std::size_t i = 0; i < 4; ++i) out[i] += t[i];
  return out;
}

std::size_t cell_index(SampledPair d) { return (d.x ? 0 : 2) + (d.y ? 0 : 1); }

SampleEstimate proportion(std::uint64_t hits, std::uint64_t trials, std::uint64_t seed) {
  const double f = static_cast<double>(hits) / static_cast<double>(trials);
  return {f, std::sqrt(f * (1 - f) / static_cast<double>(trials)), trials, seed};
}

void require_samples(std::uint64_t n, std::uint64_t minimum) {
  if (n < minimum)
    throw Error(Errc::InvalidArgument, "need at least " + std::to_string(minimum) + " samples");
}

}  // namespace

std::mt19937_64 shard_engine(std::uint64_t seed, std::uint64_t shard) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shard), static_cast<std::uint32_t>(shard >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t shard_size(std::uint64_t n, std::uint64_t k) {
  return n / kShards + (k < n % kShards ? 1 : 0);
}

PairSampler::PairSampler(const ProbTable<double>& t, std::mt19937_64 engine)
    : c1_(t.p()), c2_(t.p() + t.q()), c3_(t.p() + t.q() + t.r()), engine_(std::move(engine)) {}

SampledPair PairSampler::operator()() {
  // 53 random bits mapped to [0, 1); avoids the implementation-defined
  // std::uniform_real_distribution.
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  if (u < c1_) return {true, true};
  if (u < c2_) return {true, false};
  if (u < c3_) return {false, true};
  return {false, false};
}

std::vector<SampledPair> sample_pairs(const ProbTable<double>& t, std::uint64_t n, std::uint64_t seed) {
  require_samples(n, 1);
  PairSampler draw(t, shard_engine(seed, 0));
  std::vector<SampledPair> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(draw());
  return out;
}

SampleEstimate estimate_covariance(const ProbTable<double>& t, std::uint64_t n, std::uint64_t seed) {
  require_samples(n, 2);
  const Tally tally = merge(run_shards(n, [&](std::uint64_t k, std::uint64_t count) {
    PairSampler draw(t, shard_engine(seed, k));
    Tally local{};
    for (std::uint64_t i = 0; i < count; ++i) ++local[cell_index(draw())];
    return local;
  }));

  const double total = static_cast<double>(n);
  const double f11 = tally[0] / total, f10 = tally[1] / total;
  const double f01 = tally[2] / total, f00 = tally[3] / total;
  const double mx = f11 + f10;
  const double my = f11 + f01;
  const double cov = f11 - mx * my;
  // E[(X - mx)^2 (Y - my)^2] under the empirical law.
  auto sq = [](double v) { return v * v; };
  const double m22 = f11 * sq(1 - mx) * sq(1 - my) + f10 * sq(1 - mx) * sq(my) +
                     f01 * sq(mx) * sq(1 - my) + f00 * sq(mx) * sq(my);
  const double var = std::max(0.0, m22 - cov * cov);
  return {cov, std::sqrt(var / total), n, seed};
}

ConcordanceEstimate estimate_concordance(const ProbTable<double>& t, std::uint64_t n,
                                         std::uint64_t seed) {
  require_samples(n, 2);
  const std::uint64_t pairs = n / 2;
  const Tally tally = merge(run_shards(pairs, [&](std::uint64_t k, std::uint64_t count) {
    PairSampler draw(t, shard_engine(seed, k));
    Tally local{};  // [concordant, discordant, other, unused]
    for (std::uint64_t i = 0; i < count; ++i) {
      const SampledPair a = draw();
      const SampledPair b = draw();
      const int product = (int(a.x) - int(b.x)) * (int(a.y) - int(b.y));
      ++local[product > 0 ? 0 : (product < 0 ? 1 : 2)];
    }
    return local;
  }));
  return {proportion(tally[0], pairs, seed), proportion(tally[1], pairs, seed)};
}

SampleEstimate estimate_mismatch(const ProbTable<double>& t, std::uint64_t n, std::uint64_t seed) {
  require_samples(n, 2);
  const Tally tally = merge(run_shards(n, [&](std::uint64_t k, std::uint64_t count) {
    PairSampler draw(t, shard_engine(seed, k));
    Tally local{};
    for (std::uint64_t i = 0; i < count; ++i) {
      const SampledPair d = draw();
      ++local[d.x != d.y ? 0 : 1];
    }
    return local;
  }));
  return proportion(tally[0], n, seed);
}

}  // namespace binassoc::montecarlo
