#include "gapshear/lce_batch.hpp"

#include <algorithm>
#include <cmath>

#include "detail.hpp"

namespace gapshear {

namespace {

// First sampled mismatch of a(s) vs b(s) over [0..limit), or limit.
template <class A, class B>
std::int64_t bar_lce_core(A&& a, B&& b, std::int64_t limit, double r, SeedStream& rng) {
  if (r <= 1.0) {
    std::int64_t l = 0;
    while (l < limit && a(l) == b(l)) ++l;
    return l;
  }
  const double rate = 1.0 / r;
  for (std::int64_t s = geometric_skip(rate, rng) - 1; s < limit; s += geometric_skip(rate, rng)) {
    if (!(a(s) == b(s))) return s;
  }
  return limit;
}

}  // namespace

std::int64_t bar_lce_single(const Fragment& x, const Fragment& y, double r, std::int64_t j, std::uint64_t seed) {
  if (j < 0 || j > y.size()) return 0;
  SeedStream rng(seed);
  const std::int64_t limit = std::min(x.size(), y.size() - j);
  return bar_lce_core([&](std::int64_t s) { return x.at(s); }, [&](std::int64_t s) { return y.at(j + s); },
                      limit, r, rng);
}

std::int64_t compose_bar_lce(std::int64_t first, std::int64_t split, std::int64_t second) {
  return first < split ? first : split + second;
}

std::int64_t find_break2(const Fragment& t, double r, std::int64_t q, std::uint64_t seed) {
  if (q < 1 || 2 * q > t.size()) throw ParameterError("find_break2: q must lie in [1..|T|/2]");
  auto head = t.sub(0, 2 * q).read();
  const std::int64_t p = shortest_period(head);
  if (p > q) throw ContractError("find_break2: per(T[0..2q)) > q");
  SeedStream rng(seed);
  auto at = [&](std::int64_t s) { return t.at(s); };
  const std::int64_t lp = bar_lce_core(
      at, [&](std::int64_t s) { return head[static_cast<std::size_t>(s % p)]; }, t.size(), r, rng);
  if (lp == t.size()) return t.size();
  return detail::narrow_break(at, head, p, q, 2 * q, lp);
}

std::vector<std::int64_t> batch_bar_lce(const Fragment& x, const Fragment& y, double r, Range jr,
                                        std::uint64_t seed) {
  if (jr.empty()) throw ParameterError("batch_bar_lce: empty J");
  SeedStream root(seed);
  const std::int64_t nj = jr.size();
  const std::int64_t delta = jr.hi - jr.lo, two = 2 * delta;
  std::vector<std::int64_t> out(static_cast<std::size_t>(nj), 0);
  auto valid = [&](std::int64_t j) { return j >= 0 && j <= y.size(); };

  // min(LCE_0(0, j), 2*delta) from the prefix table of X[0..2d) $ Y[jlo..jhi+2d).
  std::vector<Symbol> t;
  t.reserve(static_cast<std::size_t>(5 * delta + 1));
  for (std::int64_t s = 0; s < two; ++s) t.push_back(x.at(s));
  t.push_back(Symbol::sentinel());
  for (std::int64_t s = jr.lo; s < jr.hi + two; ++s) t.push_back(y.at(s));
  const auto pref = pref_table(t);

  std::vector<std::int64_t> cands;
  for (std::int64_t idx = 0; idx < nj; ++idx) {
    const std::int64_t j = jr.lo + idx;
    if (!valid(j)) continue;
    const std::int64_t l = std::min(pref[static_cast<std::size_t>(two + 1 + idx)], two);
    out[static_cast<std::size_t>(idx)] = l;
    if (l == two) cands.push_back(j);
  }
  auto slot = [&](std::int64_t j) -> std::int64_t& { return out[static_cast<std::size_t>(j - jr.lo)]; };
  auto single = [&](std::int64_t j) { return bar_lce_single(x, y, r, j, root.split("single").seed()); };

  if (cands.size() <= 1) {
    for (auto j : cands) slot(j) = single(j);
    return out;
  }

  // |C| >= 2 forces per(X[0..2d)) <= d; breaks of length 2d are found in X and in Ybar.
  const std::int64_t minc = cands.front(), maxc = cands.back();
  const std::int64_t lx = find_break2(x, r, delta, root.split("break-x").seed());
  const Fragment ybar = y.sub(minc, std::min(maxc + x.size(), y.size()));
  const std::int64_t ly = find_break2(ybar, r, delta, root.split("break-y").seed());
  for (auto j : cands) slot(j) = std::min(lx, ly - j + minc);

  auto in_cands = [&](std::int64_t j) { return std::binary_search(cands.begin(), cands.end(), j); };
  auto needs_fix = [&](std::int64_t j) { return slot(j) < std::min(x.size(), y.size() - j); };
  std::vector<std::int64_t> redo;

  // Values equal to lx: X(lx-2d..lx] must reappear in Y at j + lx - 2d + 1.
  if (lx < x.size()) {
    auto pat = x.sub(lx - two + 1, lx + 1).read();
    std::vector<Symbol> win;
    for (std::int64_t s = minc + lx - two + 1; s < maxc + lx + 1; ++s) win.push_back(y.at(s));
    for (auto o : occurrences(pat, win)) {
      const std::int64_t j = minc + o;
      if (in_cands(j) && slot(j) == lx && needs_fix(j)) redo.push_back(j);
    }
  }
  // Values below lx end where Ybar breaks: Ybar(ly-2d..ly] must reappear in X.
  if (ly < ybar.size()) {
    auto pat = y.sub(minc + ly - two + 1, minc + ly + 1).read();
    const std::int64_t wlo = ly - (maxc - minc) - two + 1;
    std::vector<Symbol> win;
    for (std::int64_t s = wlo; s < ly + 1; ++s) win.push_back(x.at(s));
    for (auto o : occurrences(pat, win)) {
      const std::int64_t j = ly + minc - two + 1 - (wlo + o);
      if (in_cands(j) && slot(j) != lx && needs_fix(j)) redo.push_back(j);
    }
  }
  for (auto j : redo) slot(j) = single(j);
  return out;
}

LceIndex::LceIndex(const Fragment& x, const Fragment& y, double r, Range shifts, std::uint64_t seed)
    : x_(x), y_(y), r_(r), shifts_(shifts) {
  if (shifts.empty()) throw ParameterError("LceIndex: empty shift range");
  q_ = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(r * static_cast<double>(shifts.size()))));
  SeedStream root(seed);
  const auto width = static_cast<std::size_t>(shifts.size());
  rows_.emplace_back(width, 0);
  for (std::int64_t pos = x.size() - q_; pos >= 0; pos -= q_) {
    auto v = batch_bar_lce(x.sub(pos, pos + q_), y, r, Range{pos + shifts.lo, pos + shifts.hi},
                           root.split("segment").seed());
    const auto& next = rows_.back();
    std::vector<std::int64_t> row(width);
    for (std::size_t d = 0; d < width; ++d) row[d] = compose_bar_lce(v[d], q_, next[d]);
    rows_.push_back(std::move(row));
  }
}

const std::vector<std::int64_t>& LceIndex::anchor_row(std::int64_t x) const {
  if (!is_anchor(x)) throw ParameterError("LceIndex: not an anchor");
  return rows_[static_cast<std::size_t>((x_.size() - x) / q_)];
}

std::vector<std::int64_t> LceIndex::query(std::int64_t x, std::uint64_t seed) const {
  const auto width = static_cast<std::size_t>(shifts_.size());
  if (x < 0 || x > x_.size()) return std::vector<std::int64_t>(width, 0);
  const std::int64_t anchor = x + (x_.size() - x) % q_;
  const auto& row = anchor_row(anchor);
  if (anchor == x) return row;
  auto v = batch_bar_lce(x_.sub(x, anchor), y_, r_, Range{x + shifts_.lo, x + shifts_.hi}, seed);
  for (std::size_t d = 0; d < width; ++d) v[d] = compose_bar_lce(v[d], anchor - x, row[d]);
  return v;
}

LceIndex build_lce_index(const Fragment& x, const Fragment& y, double r, Range shifts, std::uint64_t seed) {
  return LceIndex(x, y, r, shifts, seed);
}

}  // namespace gapshear
