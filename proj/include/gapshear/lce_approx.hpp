#pragma once

#include <cstdint>

#include "gapshear/random.hpp"
#include "gapshear/text.hpp"

namespace gapshear {

// Closed integer range [lo..hi].
struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::int64_t size() const { return hi < lo ? 0 : hi - lo + 1; }
  bool empty() const { return hi < lo; }
};

// Either a break t[lo..hi) of length 2q with period > q, or "periodic"
// (no sampled position broke period `period` of t[0..2q)).
struct BreakOutcome {
  bool periodic = false;
  std::int64_t period = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// Requires 1 <= q <= |t| / 2. A returned break is always genuine; "periodic"
// is wrong with probability at most n^-lambda when t has > k incompatible positions.
BreakOutcome find_break(const Fragment& t, std::int64_t q, std::int64_t k, const RateConfig& rates,
                        std::uint64_t seed);

// YES if some j in J has X[i..i+l) == Y[j..j+l); NO (w.h.p.) if every j in J
// has HD(X[i..i+l), Y[j..j+l)) > k. Requires J non-empty, J within [0..|Y|-l],
// i within [0..|X|-l].
bool gap_match_oracle(const Fragment& x, const Fragment& y, std::int64_t i, Range j, std::int64_t k,
                      std::int64_t ell, const RateConfig& rates, std::uint64_t seed);

// A value between max_j LCE_0(i, j) and max_j LCE_k(i, j) over j in J (w.h.p. on
// the upper side). Out-of-range i or j contribute 0.
std::int64_t apx_lce_max(const Fragment& x, const Fragment& y, std::int64_t i, Range j, std::int64_t k,
                         const RateConfig& rates, std::uint64_t seed);

}  // namespace gapshear
