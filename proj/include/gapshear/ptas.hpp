#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gapshear/gap_tester.hpp"
#include "gapshear/random.hpp"
#include "gapshear/text.hpp"

namespace gapshear {

// First i with per(X[i..i+l)) <= 2k, or nullopt when every length-l window is
// aperiodic (vacuously so when l > |X|).
std::optional<std::int64_t> check_aperiodicity(const Fragment& x, std::int64_t ell, std::int64_t k);

// Phrase i is X[xb[i]..xb[i+1]) against Y[yb[i]..yb[i+1]).
struct Decomposition {
  std::vector<std::int64_t> xb;
  std::vector<std::int64_t> yb;
  std::int64_t q = 0;
  bool failed = false;  // some anchor was not found; Y_0 = Y, all other Y_i empty

  std::int64_t phrases() const { return static_cast<std::int64_t>(xb.size()) - 1; }
};

// Random-offset cut of X into blocks of length q = ceil((k+1) l / delta), each
// boundary matched to the unique copy of X[x_i..x_i+l) within Y[x_i-k..x_i+k+l).
// Two copies in that window means X is not l-aperiodic: ContractError.
Decomposition decompose(const Fragment& x, const Fragment& y, std::int64_t k, std::int64_t ell, double delta,
                        std::uint64_t seed);

struct PhraseResult {
  enum class Kind { certified, exact, exceeds };
  Kind kind = Kind::certified;
  std::int64_t distance = 0;  // exact: ED; exceeds: the cap
};

// Certified: ED <= k holds w.h.p. (equal lengths, no sampled mismatch).
// Otherwise the exact distance, or `exceeds` once it passes cap (cap < 0: no cap).
PhraseResult phrase_distance_or_cert(const Fragment& xi, const Fragment& yi, std::int64_t k, std::int64_t cap,
                                     const RateConfig& rates, std::uint64_t seed);

// YES when sum ED(X_i, Y_i) <= k, NO when it exceeds (1 + eps) k, each w.h.p.
bool estimate_sum(const Fragment& x, const Fragment& y, const Decomposition& dec, std::int64_t k, double epsilon,
                  const RateConfig& rates, std::uint64_t seed);

struct PtasOptions {
  std::int64_t window = 0;  // l; X must be (l, k)-aperiodic
  double epsilon = 0.5;
  bool verify_aperiodic = false;
};

// ACCEPT when ED(X, Y) <= k, REJECT when ED(X, Y) > (1 + eps) k, each w.h.p.
GapVerdict gap_ptas(const Fragment& x, const Fragment& y, std::int64_t k, const PtasOptions& opts,
                    const RateConfig& rates, std::uint64_t seed);

}  // namespace gapshear
