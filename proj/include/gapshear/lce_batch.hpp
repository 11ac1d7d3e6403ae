#pragma once

#include <cstdint>
#include <vector>

#include "gapshear/lce_approx.hpp"
#include "gapshear/random.hpp"
#include "gapshear/text.hpp"

namespace gapshear {

// Randomized LCE from (0, j): never below LCE_0(0, j), and above LCE_k(0, j)
// with probability at most exp(-(k+1)/r) for every k. r <= 1 is exact.
// The returned l always satisfies l == min(|X|, |Y|-j) or X[l] != Y[j+l].
std::int64_t bar_lce_single(const Fragment& x, const Fragment& y, double r, std::int64_t j, std::uint64_t seed);

// Combines the value on a prefix of length `split` with the value on the rest.
std::int64_t compose_bar_lce(std::int64_t first, std::int64_t split, std::int64_t second);

// Requires 1 <= q <= |t|/2 and per(t[0..2q)) <= q (ContractError otherwise).
// Returns b in [2q..|t|]: either |t|, or the end of a break t(b-2q..b] whose
// period exceeds q. b overshoots the first position breaking the period of
// t[0..2q) with the same tail bound as bar_lce_single.
std::int64_t find_break2(const Fragment& t, double r, std::int64_t q, std::uint64_t seed);

// bar-LCE(0, j) for every j in J, in order.
std::vector<std::int64_t> batch_bar_lce(const Fragment& x, const Fragment& y, double r, Range j,
                                        std::uint64_t seed);

// bar-LCE(x, x + d) for all x in [0..|X|] and d in a fixed shift range D,
// stored at anchors x = |X| - t*q and completed on demand.
class LceIndex {
 public:
  LceIndex(const Fragment& x, const Fragment& y, double r, Range shifts, std::uint64_t seed);

  std::int64_t q() const { return q_; }
  Range shifts() const { return shifts_; }
  bool is_anchor(std::int64_t x) const { return x >= 0 && x <= x_.size() && (x_.size() - x) % q_ == 0; }
  const std::vector<std::int64_t>& anchor_row(std::int64_t x) const;

  // Values for d = shifts.lo .. shifts.hi; zeros when x is outside [0..|X|].
  std::vector<std::int64_t> query(std::int64_t x, std::uint64_t seed) const;

 private:
  Fragment x_, y_;
  double r_;
  Range shifts_;
  std::int64_t q_;
  std::vector<std::vector<std::int64_t>> rows_;  // rows_[t] belongs to anchor |X| - t*q
};

LceIndex build_lce_index(const Fragment& x, const Fragment& y, double r, Range shifts, std::uint64_t seed);

}  // namespace gapshear
