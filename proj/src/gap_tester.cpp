#include "gapshear/gap_tester.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <utility>

#include "gapshear/lce_approx.hpp"
#include "gapshear/lce_batch.hpp"

namespace gapshear {

std::string_view to_string(Verdict v) { return v == Verdict::accept ? "ACCEPT" : "REJECT"; }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

namespace {

class ProbeMeter {
 public:
  ProbeMeter(const Fragment& x, const Fragment& y)
      : x_(x), y_(y), px_(x.text().probes()), py_(y.text().probes()), t0_(std::chrono::steady_clock::now()) {}

  void finish(GapVerdict& v) const {
    v.probes_x = x_.text().probes() - px_;
    v.probes_y = y_.text().probes() - py_;
    v.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  const Fragment& x_;
  const Fragment& y_;
  std::uint64_t px_, py_;
  std::chrono::steady_clock::time_point t0_;
};

RateConfig with_context(RateConfig rates, const Fragment& x, const Fragment& y) {
  if (rates.context_n <= 0) rates.context_n = x.size() + y.size();
  return rates;
}

}  // namespace

GapVerdict gap_quadratic(const Fragment& x, const Fragment& y, std::int64_t k, const RateConfig& rates,
                         std::uint64_t seed) {
  if (k < 0) throw ParameterError("gap_quadratic: negative k");
  GapVerdict out;
  ProbeMeter meter(x, y);
  const std::int64_t n = x.size();
  if (std::abs(n - y.size()) > k) {
    meter.finish(out);
    return out;
  }
  const RateConfig rc = with_context(rates, x, y);
  SeedStream root(seed);
  std::int64_t dp = 0, d = 0;
  for (std::int64_t i = 0; i <= k; ++i) {
    d = dp + apx_lce_max(x, y, dp, Range{dp - k, dp + k}, k, rc, root.split("round").seed());
    out.frontier.push_back({dp, d});
    if (d == n) break;  // every later round stays at |X|
    dp = std::min(n, d + 1);
  }
  out.verdict = d == n ? Verdict::accept : Verdict::reject;
  meter.finish(out);
  return out;
}

std::int64_t choose_block_parameter(std::int64_t n, std::int64_t k, std::int64_t alpha) {
  if (alpha < 1) throw ParameterError("choose_block_parameter: alpha must be >= 1");
  const std::int64_t km = std::max<std::int64_t>(k, 1);
  const double raw = std::sqrt(static_cast<double>(std::max<std::int64_t>(n, 0))) /
                     (static_cast<double>(alpha) * std::sqrt(static_cast<double>(km)));
  const std::int64_t cap = (km + alpha - 1) / alpha;
  return std::clamp<std::int64_t>(std::llround(raw), 1, cap);
}

GapVerdict gap_alpha(const Fragment& x, const Fragment& y, std::int64_t k, const AlphaOptions& opts,
                     const RateConfig& rates, std::uint64_t seed) {
  if (k < 0) throw ParameterError("gap_alpha: negative k");
  if (opts.alpha < 1) throw ParameterError("gap_alpha: alpha must be >= 1");
  if (opts.block_b < 0) throw ParameterError("gap_alpha: negative block parameter");
  GapVerdict out;
  ProbeMeter meter(x, y);
  const std::int64_t n = x.size();
  if (std::abs(n - y.size()) > k) {
    meter.finish(out);
    return out;
  }
  const std::int64_t alpha = std::min(opts.alpha, std::max<std::int64_t>(1, k));
  const std::int64_t b = opts.block_b > 0 ? opts.block_b : choose_block_parameter(n, k, alpha);
  const RateConfig rc = with_context(rates, x, y);
  const double r = opts.exact_lce ? 1.0 : static_cast<double>(alpha) / (rc.lambda * rc.log_n(0));

  const std::int64_t jmin = floor_div(-k, alpha), jmax = floor_div(k, alpha);
  const std::int64_t imin = floor_div(jmin, b), imax = floor_div(jmax, b);
  SeedStream root(seed);
  std::vector<LceIndex> index;
  for (std::int64_t ip = imin; ip <= imax; ++ip)
    index.emplace_back(x, y, r, Range{ip * alpha * b, (ip + 1) * alpha * b - 1}, root.split("index").seed());

  // Each instance answers for every shift of its range at once; remember by (instance, x).
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::int64_t>> answers;
  auto lookup = [&](std::int64_t ip, std::int64_t pos) -> const std::vector<std::int64_t>& {
    auto key = std::make_pair(ip, pos);
    auto it = answers.find(key);
    if (it == answers.end())
      it = answers.emplace(key, index[static_cast<std::size_t>(ip - imin)].query(pos, root.split("query").seed()))
               .first;
    return it->second;
  };

  const std::int64_t off = 1 - jmin;  // column of j is j + off; borders stay -inf
  const auto width = static_cast<std::size_t>(jmax - jmin + 3);
  std::vector<std::int64_t> dp(width, kUnreachable), d(width, kUnreachable);
  dp[static_cast<std::size_t>(off)] = 0;
  const auto target = static_cast<std::size_t>(floor_div(y.size() - n, alpha) + off);

  for (std::int64_t i = 0; i <= k; ++i) {
    std::fill(d.begin(), d.end(), kUnreachable);
    for (std::int64_t j = jmin; j <= jmax; ++j) {
      const auto c = static_cast<std::size_t>(j + off);
      if (dp[c] == kUnreachable) continue;
      const std::int64_t ip = floor_div(j, b);
      const auto& vals = lookup(ip, dp[c]);
      const std::int64_t base = ip * alpha * b;
      std::int64_t best = 0;
      for (std::int64_t delta = j * alpha; delta < (j + 1) * alpha; ++delta)
        best = std::max(best, vals[static_cast<std::size_t>(delta - base)]);
      d[c] = dp[c] + best;
    }
    out.frontier.emplace_back(d.begin() + 1, d.end() - 1);
    if (d[target] == n) {
      out.verdict = Verdict::accept;
      break;
    }
    for (std::int64_t j = jmin; j <= jmax; ++j) {
      const auto c = static_cast<std::size_t>(j + off);
      std::int64_t best = kUnreachable;
      if (d[c - 1] != kUnreachable) best = std::max(best, d[c - 1]);
      if (d[c] != kUnreachable) best = std::max(best, d[c] + 1);
      if (d[c + 1] != kUnreachable) best = std::max(best, d[c + 1] + 1);
      dp[c] = best == kUnreachable ? kUnreachable : std::min(n, best);
    }
  }
  meter.finish(out);
  return out;
}

}  // namespace gapshear
