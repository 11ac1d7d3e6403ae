#include "gapshear/lce_approx.hpp"

#include <algorithm>
#include <string>

#include "detail.hpp"

namespace gapshear {

namespace {

// Samples for T live in `samples` at absolute positions offset + s.
template <class At>
BreakOutcome find_break_core(At&& at, std::int64_t len, std::int64_t q, double rate, SampleStream& samples,
                             std::int64_t offset) {
  if (q < 1 || 2 * q > len) throw ParameterError("find_break: q must lie in [1..|T|/2]");
  std::vector<Symbol> head;
  head.reserve(static_cast<std::size_t>(2 * q));
  for (std::int64_t s = 0; s < 2 * q; ++s) head.push_back(at(s));
  const std::int64_t p = shortest_period(head);
  if (p > q) return BreakOutcome{false, p, 0, 2 * q};

  std::int64_t found = -1;
  samples.visit(offset, offset + len, rate, [&](std::int64_t pos) {
    const std::int64_t s = pos - offset;
    if (at(s) == head[static_cast<std::size_t>(s % p)]) return true;
    found = s;
    return false;
  });
  if (found < 0) return BreakOutcome{true, p, 0, 0};
  const std::int64_t b = detail::narrow_break(at, head, p, q, 2 * q, found);
  return BreakOutcome{false, p, b - 2 * q + 1, b + 1};
}

struct OracleContext {
  OracleContext(const Fragment& x, const Fragment& y, std::int64_t i, std::int64_t jbase, std::int64_t k,
                const RateConfig& rates, std::uint64_t seed)
      : xr(x), yr(y), rate_k(rates.rate(x.size() + y.size(), k)),
        rate_half(rates.rate(x.size() + y.size(), k / 2)), xs(i, rate_half, derive_seed(seed, "x", 0)),
        ys(std::max<std::int64_t>(jbase, 0), rate_half, derive_seed(seed, "y", 0)) {}

  detail::CachedReader xr, yr;
  double rate_k, rate_half;
  // One sample per string, reused by every threshold of a search, so each
  // position is paid for once.
  SampleStream xs, ys;
};

void keep_only(std::vector<std::int64_t>& c, std::vector<std::int64_t> allowed) {
  std::sort(allowed.begin(), allowed.end());
  std::erase_if(c, [&](std::int64_t j) { return !std::binary_search(allowed.begin(), allowed.end(), j); });
}

bool oracle_core(OracleContext& ctx, std::int64_t i, Range jr, std::int64_t ell) {
  const std::int64_t nj = jr.size();
  if (ell < 3 * nj) {
    auto pat = ctx.xr.read(i, i + ell);
    auto win = ctx.yr.read(jr.lo, jr.hi + ell);
    return !occurrences(pat, win).empty();
  }

  std::vector<std::int64_t> cands;
  {
    auto pat = ctx.xr.read(i, i + 3 * nj);
    auto win = ctx.yr.read(jr.lo, jr.hi + 3 * nj);
    for (auto o : occurrences(pat, win)) cands.push_back(jr.lo + o);
  }
  if (cands.empty()) return false;

  auto xat = [&](std::int64_t s) { return ctx.xr.at(i + s); };
  const BreakOutcome bx = find_break_core(xat, ell, nj, ctx.rate_half, ctx.xs, i);
  const std::int64_t ylo = cands.back(), yhi = cands.front() + ell;
  auto yat = [&](std::int64_t s) { return ctx.yr.at(ylo + s); };
  const BreakOutcome by = find_break_core(yat, yhi - ylo, nj, ctx.rate_half, ctx.ys, ylo);
  if (bx.periodic && by.periodic) return true;

  if (!bx.periodic) {
    // Keep j with B_X == Y[j - i + xa .. j - i + xb).
    const std::int64_t xa = i + bx.lo, xb = i + bx.hi;
    const std::int64_t wlo = cands.front() - i + xa;
    auto pat = ctx.xr.read(xa, xb);
    auto win = ctx.yr.read(wlo, cands.back() - i + xb);
    std::vector<std::int64_t> ok;
    for (auto o : occurrences(pat, win)) ok.push_back(cands.front() + o);
    keep_only(cands, std::move(ok));
  }
  if (!by.periodic && !cands.empty()) {
    // Keep j with B_Y == X[i - j + ya .. i - j + yb).
    const std::int64_t ya = ylo + by.lo, yb = ylo + by.hi;
    const std::int64_t maxc = cands.back();
    auto pat = ctx.yr.read(ya, yb);
    auto win = ctx.xr.read(i - maxc + ya, i - cands.front() + yb);
    std::vector<std::int64_t> ok;
    for (auto o : occurrences(pat, win)) ok.push_back(maxc - o);
    keep_only(cands, std::move(ok));
  }
  if (cands.empty()) return false;

  const std::int64_t j0 = cands.front();
  return ctx.xs.visit(i, i + ell, ctx.rate_k,
                      [&](std::int64_t pos) { return ctx.xr.at(pos) == ctx.yr.at(j0 + pos - i); });
}

}  // namespace

BreakOutcome find_break(const Fragment& t, std::int64_t q, std::int64_t k, const RateConfig& rates,
                        std::uint64_t seed) {
  if (k < 0) throw ParameterError("find_break: negative k");
  const double rate = rates.rate(t.size(), k);
  SampleStream samples(0, rate, seed);
  return find_break_core([&](std::int64_t s) { return t.at(s); }, t.size(), q, rate, samples, 0);
}

bool gap_match_oracle(const Fragment& x, const Fragment& y, std::int64_t i, Range j, std::int64_t k,
                      std::int64_t ell, const RateConfig& rates, std::uint64_t seed) {
  if (k < 0 || ell < 0) throw ParameterError("gap_match_oracle: negative k or l");
  if (j.empty()) throw ParameterError("gap_match_oracle: empty J");
  if (j.lo < 0 || j.hi > y.size() - ell) throw ParameterError("gap_match_oracle: J outside [0..|Y|-l]");
  if (i < 0 || i > x.size() - ell) throw ParameterError("gap_match_oracle: i outside [0..|X|-l]");
  if (ell == 0) return true;
  OracleContext ctx(x, y, i, j.lo, k, rates, seed);
  return oracle_core(ctx, i, j, ell);
}

std::int64_t apx_lce_max(const Fragment& x, const Fragment& y, std::int64_t i, Range j, std::int64_t k,
                         const RateConfig& rates, std::uint64_t seed) {
  if (k < 0) throw ParameterError("apx_lce_max: negative k");
  if (i < 0 || i > x.size() || j.empty()) return 0;
  OracleContext ctx(x, y, i, j.lo, k, rates, seed);

  auto test = [&](std::int64_t ell) {
    if (ell <= 0) return true;
    const Range jr{std::max<std::int64_t>(j.lo, 0), std::min(j.hi, y.size() - ell)};
    if (i > x.size() - ell || jr.empty()) return false;
    return oracle_core(ctx, i, jr, ell);
  };

  std::int64_t yes = 0, no = 1;
  while (test(no)) {
    yes = no;
    no *= 2;
  }
  while (no - yes > 1) {
    const std::int64_t mid = yes + (no - yes) / 2;
    if (test(mid)) yes = mid;
    else no = mid;
  }
  return yes;
}

}  // namespace gapshear
