#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gapshear/random.hpp"
#include "gapshear/text.hpp"

namespace gapshear {

enum class Verdict { reject, accept };

std::string_view to_string(Verdict v);

struct GapVerdict {
  Verdict verdict = Verdict::reject;
  std::uint64_t probes_x = 0;
  std::uint64_t probes_y = 0;
  double wall_ms = 0.0;
  // Quadratic tester: one row {d'_i, d_i} per round.
  // Alpha tester: one row d_i over the diagonal groups, kUnreachable for -inf.
  // Rows stop at the first round that already decides ACCEPT.
  std::vector<std::vector<std::int64_t>> frontier;

  bool accepted() const { return verdict == Verdict::accept; }
  std::uint64_t probes() const { return probes_x + probes_y; }
};

// ACCEPT when ED(X, Y) <= k; REJECT w.h.p. when ED(X, Y) > (3k + 5)k.
GapVerdict gap_quadratic(const Fragment& x, const Fragment& y, std::int64_t k, const RateConfig& rates,
                         std::uint64_t seed);

struct AlphaOptions {
  std::int64_t alpha = 1;
  std::int64_t block_b = 0;  // 0 picks choose_block_parameter
  bool exact_lce = false;    // r = 1: every LCE is exact
};

// ACCEPT when ED(X, Y) <= k; REJECT w.h.p. when ED(X, Y) > k + 3(k+1)(alpha-1).
// alpha above max(1, k) is lowered to max(1, k).
GapVerdict gap_alpha(const Fragment& x, const Fragment& y, std::int64_t k, const AlphaOptions& opts,
                     const RateConfig& rates, std::uint64_t seed);

std::int64_t choose_block_parameter(std::int64_t n, std::int64_t k, std::int64_t alpha);

std::int64_t floor_div(std::int64_t a, std::int64_t b);

}  // namespace gapshear
