#pragma once

// Internals shared by the LCE modules.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gapshear/random.hpp"
#include "gapshear/text.hpp"

namespace gapshear::detail {

// Memoizing reader over a fragment: each position is probed at most once.
class CachedReader {
 public:
  explicit CachedReader(const Fragment& f) : f_(f) {}

  std::int64_t size() const { return f_.size(); }

  Symbol at(std::int64_t i) {
    if (i < 0 || i >= f_.size()) return Symbol::sentinel();
    auto [it, fresh] = cache_.try_emplace(i);
    if (fresh) it->second = f_.at(i);
    return it->second;
  }

  std::vector<Symbol> read(std::int64_t lo, std::int64_t hi) {
    std::vector<Symbol> out;
    if (hi > lo) out.reserve(static_cast<std::size_t>(hi - lo));
    for (std::int64_t i = lo; i < hi; ++i) out.push_back(at(i));
    return out;
  }

 private:
  Fragment f_;
  std::unordered_map<std::int64_t, Symbol> cache_;
};

// Given T[b-2q..b) compatible with period p of head = T[0..2q) and T[e]
// incompatible (e >= b), narrows down to b == e. T(b-2q..b] is then a
// fragment of length 2q whose shortest period exceeds q.
template <class At>
std::int64_t narrow_break(At&& at, const std::vector<Symbol>& head, std::int64_t p, std::int64_t q,
                          std::int64_t b, std::int64_t e) {
  while (b < e) {
    const std::int64_t m = b + (e - b + 1) / 2;
    for (std::int64_t j = m - 2 * q; j < m; ++j) {
      if (!(at(j) == head[static_cast<std::size_t>(j % p)])) e = j;
    }
    if (e >= m) b = m;
  }
  return b;
}

}  // namespace gapshear::detail
