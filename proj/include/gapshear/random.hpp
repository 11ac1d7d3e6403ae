#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "gapshear/text.hpp"

namespace gapshear {

// Sampling-rate policy shared by all randomized routines: a "sufficiently
// large" rate is min(1, c * lambda * ln(max(n, 2)) / (k + 1)).
struct RateConfig {
  double c = 3.0;
  double lambda = 1.0;
  // Input size used inside the logarithm; 0 means "the length at hand".
  std::int64_t context_n = 0;

  double log_n(std::int64_t local_n) const {
    const std::int64_t n = context_n > 0 ? context_n : local_n;
    return std::log(static_cast<double>(std::max<std::int64_t>(n, 2)));
  }
  double rate(std::int64_t local_n, std::int64_t k) const {
    return std::min(1.0, c * lambda * log_n(local_n) / static_cast<double>(k + 1));
  }
};

std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t parent, std::string_view label, std::uint64_t counter);

// Decimal or 0x-prefixed hexadecimal.
std::uint64_t parse_seed(std::string_view text);

// Deterministic random stream. split() hands out independent child streams
// keyed by (parent seed, label, per-parent counter).
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed = 0) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  SeedStream split(std::string_view label) { return SeedStream(derive_seed(seed_, label, counter_++)); }

  std::uint64_t next_u64() { return engine()(); }
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine()); }
  bool bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return std::bernoulli_distribution(p)(engine());
  }
  // Uniform over [lo..hi] inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine());
  }
  // Seeded on first use: streams that only hand out splits never pay for it.
  std::mt19937_64& engine() {
    if (!engine_) engine_.emplace(mix64(seed_));
    return *engine_;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  std::optional<std::mt19937_64> engine_;
};

// 1 + Geo(rate): distance to the next success of a Bernoulli(rate) sequence.
std::int64_t geometric_skip(double rate, SeedStream& rng);

struct SampleSet {
  std::vector<std::int64_t> indices;  // increasing
  double rate = 0.0;
};

// Each index of [lo..hi) independently with probability `rate`; hi < lo gives the empty set.
SampleSet sample_range(std::int64_t lo, std::int64_t hi, double rate, SeedStream& rng);

// Bernoulli sample of [base..inf) generated lazily at rate `ceiling`. Every
// sampled position carries a uniform mark in [0, ceiling), so filtering by
// mark < rate gives an exact Bernoulli(rate) sample for any rate <= ceiling,
// and repeated queries over overlapping ranges see the same positions.
class SampleStream {
 public:
  SampleStream(std::int64_t base, double ceiling, std::uint64_t seed)
      : base_(base), last_(base - 1), ceiling_(std::min(1.0, ceiling)), rng_(seed) {}

  std::int64_t base() const { return base_; }
  double ceiling() const { return ceiling_; }

  // Calls f(pos) for sampled pos in [lo..hi) in increasing order while f returns true.
  // Returns false iff f stopped the walk.
  template <class F>
  bool visit(std::int64_t lo, std::int64_t hi, double rate, F&& f) {
    if (lo < base_) throw ContractError("SampleStream: query below base");
    if (rate > ceiling_ + 1e-12) throw ContractError("SampleStream: rate above ceiling");
    if (hi <= lo || ceiling_ <= 0.0) return true;
    extend_to(hi);
    auto it = std::lower_bound(pos_.begin(), pos_.end(), lo);
    for (; it != pos_.end() && *it < hi; ++it) {
      if (mark_[static_cast<std::size_t>(it - pos_.begin())] < rate && !f(*it)) return false;
    }
    return true;
  }

 private:
  void extend_to(std::int64_t hi);

  std::int64_t base_;
  std::int64_t last_;
  double ceiling_;
  SeedStream rng_;
  std::vector<std::int64_t> pos_;
  std::vector<double> mark_;
};

enum class EmbedMode { binary, extended };

// Randomness shared by the two sides of the sublinear embedding: the sampled
// iteration set S within [1..3n] and one hash h_j per sampled iteration.
struct SharedRandomness {
  std::int64_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  EmbedMode mode = EmbedMode::binary;
  std::vector<std::int64_t> s;       // increasing, 1-based iteration numbers
  std::vector<std::uint64_t> keys;   // h_j: flip bit (binary) or hash key (extended)

  // h_j(c) in {0, 1}. Binary mode accepts only '0' and '1'.
  int h(std::size_t j, Symbol c) const;
};

SharedRandomness make_shared_randomness(std::int64_t n, double p, std::uint64_t seed,
                                        EmbedMode mode = EmbedMode::binary);
// S = [1..3n]: the dense (non-sampled) embedding.
SharedRandomness make_full_randomness(std::int64_t n, std::uint64_t seed, EmbedMode mode = EmbedMode::binary);

}  // namespace gapshear
