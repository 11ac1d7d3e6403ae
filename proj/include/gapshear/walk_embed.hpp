#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gapshear/gap_tester.hpp"
#include "gapshear/random.hpp"
#include "gapshear/text.hpp"

namespace gapshear {

inline constexpr std::int64_t kWalkConstant = 1296;

struct WalkParams {
  std::int64_t k = 0;
  double p = 0.0;
  std::int64_t n = 0;  // 0: max(|X|, |Y|). Requires 2 ln n <= p <= n.
};

struct WalkTrace {
  std::int64_t c = 0;
  std::int64_t final_x = 0;
  std::int64_t final_y = 0;
  std::int64_t leftover = 0;  // max(|X| - x, |Y| - y)
  Verdict verdict = Verdict::reject;
  std::uint64_t probes_x = 0;
  std::uint64_t probes_y = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> steps;  // (x, y) after each iteration; naive walk only
};

// Random walk comparing only a 2 ln n / p fraction of its steps; YES iff
// c + leftover <= 1296 k^2. Unsampled stretches are skipped in one jump.
WalkTrace sampled_random_walk(const Fragment& x, const Fragment& y, const WalkParams& params, std::uint64_t seed);

// The same walk one iteration at a time; same randomness, same result.
WalkTrace sampled_random_walk_naive(const Fragment& x, const Fragment& y, const WalkParams& params,
                                    std::uint64_t seed, bool keep_steps = false);

// The walk over X0^{3n} and Y0^{3n} for 3n iterations, steered by shared
// randomness: on a sampled iteration j each cursor moves by h_j(its symbol).
// c equals HD(embed(X), embed(Y)).
WalkTrace coupled_walk(const Fragment& x, const Fragment& y, const SharedRandomness& r);

// Output has exactly |S| symbols. Requires |X| <= R.n.
std::string sublinear_embed(const Fragment& x, const SharedRandomness& r);
std::string sublinear_embed_naive(const Fragment& x, const SharedRandomness& r);

// Dense embedding (every iteration sampled): output length 3|X|.
std::string cgk_embed_baseline(const Fragment& x, std::uint64_t seed, EmbedMode mode = EmbedMode::binary);

std::int64_t hamming_distance(std::string_view a, std::string_view b);

struct DistortionStats {
  std::int64_t trials = 0;
  std::int64_t ed = 0;
  std::int64_t lower_ok = 0;  // HD >= (ED - p + 1) / (p + 1)
  std::int64_t upper_ok = 0;  // HD <= 1296 ED^2
  std::int64_t both_ok = 0;
  std::map<std::int64_t, std::int64_t> hd_histogram;

  double joint_fraction() const { return trials ? static_cast<double>(both_ok) / static_cast<double>(trials) : 0.0; }
};

DistortionStats embed_distortion_check(const Text& x, const Text& y, double p, std::int64_t trials,
                                       std::uint64_t seed, EmbedMode mode = EmbedMode::binary);

}  // namespace gapshear
