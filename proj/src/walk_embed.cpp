#include "gapshear/walk_embed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gapshear {

namespace {

constexpr std::int64_t kNever = std::numeric_limits<std::int64_t>::max();

double walk_rate(const Fragment& x, const Fragment& y, const WalkParams& params) {
  if (params.k < 0) throw ParameterError("walk: negative k");
  const std::int64_t n = std::max<std::int64_t>(1, params.n > 0 ? params.n : std::max(x.size(), y.size()));
  const double two_ln = 2.0 * std::log(static_cast<double>(n));
  if (!(params.p >= two_ln && params.p <= static_cast<double>(n)) || params.p <= 0.0)
    throw ParameterError("walk: p must satisfy 2 ln n <= p <= n");
  return two_ln / params.p;
}

// Iteration numbers of sampled steps, as a running schedule.
class Schedule {
 public:
  Schedule(double rate, SeedStream rng) : rate_(rate), rng_(rng) { next_ = draw(); }
  std::int64_t next() const { return next_; }
  void advance() {
    const std::int64_t g = draw();
    next_ = (next_ == kNever || g == kNever) ? kNever : next_ + g;
  }

 private:
  std::int64_t draw() { return rate_ > 0.0 ? geometric_skip(rate_, rng_) : kNever; }
  double rate_;
  SeedStream rng_;
  std::int64_t next_ = kNever;
};

void finish(WalkTrace& t, const Fragment& x, const Fragment& y, std::int64_t k, std::uint64_t px,
            std::uint64_t py) {
  t.leftover = std::max(x.size() - t.final_x, y.size() - t.final_y);
  t.verdict = t.c + t.leftover <= kWalkConstant * k * k ? Verdict::accept : Verdict::reject;
  t.probes_x = x.text().probes() - px;
  t.probes_y = y.text().probes() - py;
}

}  // namespace

WalkTrace sampled_random_walk(const Fragment& x, const Fragment& y, const WalkParams& params, std::uint64_t seed) {
  const double rate = walk_rate(x, y, params);
  const std::uint64_t px = x.text().probes(), py = y.text().probes();
  SeedStream root(seed);
  Schedule sched(rate, root.split("skip"));
  SeedStream coin = root.split("coin");
  WalkTrace t;
  std::int64_t& cx = t.final_x;
  std::int64_t& cy = t.final_y;
  std::int64_t it = 0;
  while (cx < x.size() && cy < y.size()) {
    const std::int64_t gap = sched.next() == kNever ? kNever : sched.next() - it - 1;
    const std::int64_t adv = std::min({gap, x.size() - cx, y.size() - cy});
    cx += adv;
    cy += adv;
    it += adv;
    if (cx >= x.size() || cy >= y.size()) break;
    ++it;
    sched.advance();
    if (!(x.at(cx) == y.at(cy))) {
      const int r = coin.bernoulli(0.5) ? 1 : 0;
      cx += r;
      cy += 1 - r;
      ++t.c;
    } else {
      ++cx;
      ++cy;
    }
  }
  finish(t, x, y, params.k, px, py);
  return t;
}

WalkTrace sampled_random_walk_naive(const Fragment& x, const Fragment& y, const WalkParams& params,
                                    std::uint64_t seed, bool keep_steps) {
  const double rate = walk_rate(x, y, params);
  const std::uint64_t px = x.text().probes(), py = y.text().probes();
  SeedStream root(seed);
  Schedule sched(rate, root.split("skip"));
  SeedStream coin = root.split("coin");
  WalkTrace t;
  std::int64_t& cx = t.final_x;
  std::int64_t& cy = t.final_y;
  std::int64_t it = 0;
  while (cx < x.size() && cy < y.size()) {
    ++it;
    const bool sampled = it == sched.next();
    if (sampled) sched.advance();
    if (sampled && !(x.at(cx) == y.at(cy))) {
      const int r = coin.bernoulli(0.5) ? 1 : 0;
      cx += r;
      cy += 1 - r;
      ++t.c;
    } else {
      ++cx;
      ++cy;
    }
    if (keep_steps) t.steps.emplace_back(cx, cy);
  }
  finish(t, x, y, params.k, px, py);
  return t;
}

namespace {

Symbol padded_at(const Fragment& x, std::int64_t pos) {
  return pos < x.size() ? x.at(pos) : Symbol::of('0');
}

void check_size(const Fragment& x, const SharedRandomness& r) {
  if (x.size() > r.n) throw ParameterError("embedding: randomness was drawn for a shorter n");
}

}  // namespace

WalkTrace coupled_walk(const Fragment& x, const Fragment& y, const SharedRandomness& r) {
  check_size(x, r);
  check_size(y, r);
  const std::uint64_t px = x.text().probes(), py = y.text().probes();
  WalkTrace t;
  std::int64_t prev = 0;
  for (std::size_t j = 0; j < r.s.size(); ++j) {
    const std::int64_t gap = r.s[j] - prev - 1;
    t.final_x += gap;
    t.final_y += gap;
    const Symbol a = padded_at(x, t.final_x), b = padded_at(y, t.final_y);
    if (!(a == b)) ++t.c;
    t.final_x += r.h(j, a);
    t.final_y += r.h(j, b);
    prev = r.s[j];
  }
  t.final_x += 3 * r.n - prev;
  t.final_y += 3 * r.n - prev;
  t.probes_x = x.text().probes() - px;
  t.probes_y = y.text().probes() - py;
  t.verdict = t.c == 0 ? Verdict::accept : Verdict::reject;
  return t;
}

std::string sublinear_embed(const Fragment& x, const SharedRandomness& r) {
  check_size(x, r);
  std::string out;
  out.reserve(r.s.size());
  std::int64_t pos = 0, prev = 0;
  for (std::size_t j = 0; j < r.s.size(); ++j) {
    pos += r.s[j] - prev - 1;
    const Symbol c = padded_at(x, pos);
    out.push_back(static_cast<char>(c.code));
    pos += r.h(j, c);
    prev = r.s[j];
  }
  return out;
}

std::string sublinear_embed_naive(const Fragment& x, const SharedRandomness& r) {
  check_size(x, r);
  std::string out;
  std::int64_t pos = 0;
  std::size_t j = 0;
  for (std::int64_t i = 1; i <= 3 * r.n; ++i) {
    if (j < r.s.size() && r.s[j] == i) {
      const Symbol c = padded_at(x, pos);
      out.push_back(static_cast<char>(c.code));
      pos += r.h(j, c);
      ++j;
    } else {
      ++pos;
    }
  }
  return out;
}

std::string cgk_embed_baseline(const Fragment& x, std::uint64_t seed, EmbedMode mode) {
  return sublinear_embed(x, make_full_randomness(x.size(), seed, mode));
}

std::int64_t hamming_distance(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) throw ParameterError("hamming_distance: lengths differ");
  std::int64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

DistortionStats embed_distortion_check(const Text& x, const Text& y, double p, std::int64_t trials,
                                       std::uint64_t seed, EmbedMode mode) {
  DistortionStats st;
  const std::int64_t n = std::max<std::int64_t>({x.size(), y.size(), 1});
  st.ed = edit_distance_full(x.unprobed(), y.unprobed());
  const double lower = (static_cast<double>(st.ed) - p + 1.0) / (p + 1.0);
  const std::int64_t upper = kWalkConstant * st.ed * st.ed;
  SeedStream root(seed);
  for (std::int64_t t = 0; t < trials; ++t) {
    const auto r = make_shared_randomness(n, p, root.split("trial").seed(), mode);
    const std::int64_t hd = hamming_distance(sublinear_embed(x, r), sublinear_embed(y, r));
    const bool lo = static_cast<double>(hd) >= lower;
    const bool hi = hd <= upper;
    ++st.trials;
    st.lower_ok += lo;
    st.upper_ok += hi;
    st.both_ok += lo && hi;
    ++st.hd_histogram[hd];
  }
  return st;
}

}  // namespace gapshear
