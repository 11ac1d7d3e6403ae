#include "gapshear/text.hpp"

#include <algorithm>
#include <cstdlib>

namespace gapshear {

Text::Text() : Text(std::string{}) {}

Text::Text(std::string data)
    : data_(std::make_shared<const std::string>(std::move(data))),
      probes_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}

Text Text::uninstrumented() const {
  Text t = *this;
  t.probes_ = std::make_shared<std::atomic<std::uint64_t>>(0);
  return t;
}

Fragment::Fragment(const Text& t) : text_(t), lo_(0), hi_(t.size()) {}

Fragment::Fragment(const Text& t, std::int64_t lo, std::int64_t hi) : text_(t), lo_(lo), hi_(hi) {
  if (lo < 0 || lo > hi || hi > t.size()) throw ParameterError("fragment bounds outside text");
}

Fragment Fragment::sub(std::int64_t a, std::int64_t b) const {
  if (a < 0 || a > b || b > size()) throw ParameterError("sub-fragment outside fragment");
  return Fragment(text_, lo_ + a, lo_ + b);
}

std::vector<Symbol> Fragment::read() const {
  std::vector<Symbol> out(static_cast<std::size_t>(size()));
  for (std::int64_t i = 0; i < size(); ++i) out[static_cast<std::size_t>(i)] = text_.at(lo_ + i);
  return out;
}

std::vector<Symbol> to_symbols(std::string_view s) {
  std::vector<Symbol> out;
  out.reserve(s.size());
  for (unsigned char c : s) out.push_back(Symbol::of(c));
  return out;
}

namespace {

std::vector<std::int64_t> prefix_function(std::span<const Symbol> s) {
  std::vector<std::int64_t> pi(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::int64_t k = pi[i - 1];
    while (k > 0 && !(s[i] == s[static_cast<std::size_t>(k)])) k = pi[static_cast<std::size_t>(k - 1)];
    if (s[i] == s[static_cast<std::size_t>(k)]) ++k;
    pi[i] = k;
  }
  return pi;
}

}  // namespace

std::int64_t shortest_period(std::span<const Symbol> s) {
  if (s.empty()) throw std::domain_error("period of an empty string");
  auto pi = prefix_function(s);
  return static_cast<std::int64_t>(s.size()) - pi.back();
}

PeriodInfo shortest_period(const Fragment& f) {
  auto s = f.read();
  return PeriodInfo{shortest_period(s), f.size()};
}

std::vector<std::int64_t> occurrences(std::span<const Symbol> pattern, std::span<const Symbol> window) {
  std::vector<std::int64_t> out;
  const auto m = static_cast<std::int64_t>(pattern.size());
  const auto n = static_cast<std::int64_t>(window.size());
  if (m > n) return out;
  if (m == 0) {
    for (std::int64_t i = 0; i <= n; ++i) out.push_back(i);
    return out;
  }
  auto pi = prefix_function(pattern);
  std::int64_t k = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    const Symbol c = window[static_cast<std::size_t>(i)];
    while (k > 0 && !(pattern[static_cast<std::size_t>(k)] == c)) k = pi[static_cast<std::size_t>(k - 1)];
    if (pattern[static_cast<std::size_t>(k)] == c) ++k;
    if (k == m) {
      out.push_back(i - m + 1);
      k = pi[static_cast<std::size_t>(k - 1)];
    }
  }
  return out;
}

std::vector<std::int64_t> occurrences(const Fragment& pattern, const Fragment& window) {
  if (pattern.size() > window.size()) return {};
  auto p = pattern.read();
  auto w = window.read();
  return occurrences(p, w);
}

std::vector<std::int64_t> pref_table(std::span<const Symbol> t) {
  const auto n = static_cast<std::int64_t>(t.size());
  std::vector<std::int64_t> z(static_cast<std::size_t>(n + 1), 0);
  z[0] = n;
  std::int64_t l = 0, r = 0;
  for (std::int64_t i = 1; i < n; ++i) {
    std::int64_t v = 0;
    if (i < r) v = std::min(r - i, z[static_cast<std::size_t>(i - l)]);
    while (i + v < n && t[static_cast<std::size_t>(v)] == t[static_cast<std::size_t>(i + v)]) ++v;
    if (i + v > r) {
      l = i;
      r = i + v;
    }
    z[static_cast<std::size_t>(i)] = v;
  }
  return z;
}

std::vector<std::int64_t> pref_table(const Fragment& t) {
  auto s = t.read();
  return pref_table(s);
}

std::int64_t lce_exact(const Fragment& x, const Fragment& y, std::int64_t k, std::int64_t i, std::int64_t j) {
  if (k < 0) throw ParameterError("lce_exact: negative k");
  if (i < 0 || i > x.size() || j < 0 || j > y.size()) return 0;
  std::int64_t len = 0, mism = 0;
  while (i + len < x.size() && j + len < y.size()) {
    if (!(x.at(i + len) == y.at(j + len))) {
      if (mism == k) break;
      ++mism;
    }
    ++len;
  }
  return len;
}

std::int64_t edit_distance_full(std::string_view x, std::string_view y) {
  std::vector<std::int64_t> prev(y.size() + 1), cur(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) prev[j] = static_cast<std::int64_t>(j);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    cur[0] = static_cast<std::int64_t>(i);
    for (std::size_t j = 1; j <= y.size(); ++j) {
      const std::int64_t sub = prev[j - 1] + (x[i - 1] == y[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

std::int64_t indel_distance(std::string_view x, std::string_view y) {
  std::vector<std::int64_t> prev(y.size() + 1), cur(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) prev[j] = static_cast<std::int64_t>(j);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    cur[0] = static_cast<std::int64_t>(i);
    for (std::size_t j = 1; j <= y.size(); ++j) {
      std::int64_t best = std::min(prev[j], cur[j - 1]) + 1;
      if (x[i - 1] == y[j - 1]) best = std::min(best, prev[j - 1]);
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

namespace {

std::int64_t lce0(const Fragment& x, const Fragment& y, std::int64_t i, std::int64_t j) {
  std::int64_t len = 0;
  while (x.at(i + len) == y.at(j + len)) ++len;
  return len;
}

}  // namespace

LvResult landau_vishkin(const Fragment& x, const Fragment& y, std::int64_t k, bool keep_frontier) {
  if (k < 0) throw ParameterError("landau_vishkin: negative k");
  LvResult out;
  const std::int64_t n = x.size(), m = y.size();
  if (std::abs(n - m) > k) return out;

  const std::int64_t off = k + 1;
  const auto width = static_cast<std::size_t>(2 * k + 3);
  std::vector<std::int64_t> dp(width, kUnreachable), d(width, kUnreachable);
  dp[static_cast<std::size_t>(off)] = 0;
  const auto target = static_cast<std::size_t>(m - n + off);

  for (std::int64_t i = 0; i <= k; ++i) {
    std::fill(d.begin(), d.end(), kUnreachable);
    // Only diagonals |j| <= i can be reached after i edits.
    const std::int64_t reach = std::min(i, k);
    for (std::int64_t j = -reach; j <= reach; ++j) {
      const auto idx = static_cast<std::size_t>(j + off);
      if (dp[idx] == kUnreachable) continue;
      d[idx] = dp[idx] + lce0(x, y, dp[idx], dp[idx] + j);
    }
    if (keep_frontier) out.frontier.emplace_back(d.begin() + 1, d.end() - 1);
    if (d[target] == n) {
      out.accept = true;
      out.distance = i;
      return out;
    }
    const std::int64_t next = std::min(i + 1, k);
    for (std::int64_t j = -next; j <= next; ++j) {
      const auto idx = static_cast<std::size_t>(j + off);
      std::int64_t best = kUnreachable;
      if (d[idx - 1] != kUnreachable) best = std::max(best, d[idx - 1]);
      if (d[idx] != kUnreachable) best = std::max(best, d[idx] + 1);
      if (d[idx + 1] != kUnreachable) best = std::max(best, d[idx + 1] + 1);
      dp[idx] = best == kUnreachable ? kUnreachable : std::min(n, best);
    }
  }
  return out;
}

std::optional<std::int64_t> bounded_edit_distance(const Fragment& x, const Fragment& y, std::int64_t cap) {
  return landau_vishkin(x, y, cap).distance;
}

}  // namespace gapshear
