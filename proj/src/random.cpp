#include "gapshear/random.hpp"

#include <charconv>
#include <limits>

namespace gapshear {

std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t parent, std::string_view label, std::uint64_t counter) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix64(mix64(parent) ^ mix64(h) ^ mix64(counter + 0x51ed2701ULL));
}

std::uint64_t parse_seed(std::string_view text) {
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
    base = 16;
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, base);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw ParameterError("bad seed: " + std::string(text));
  return v;
}

std::int64_t geometric_skip(double rate, SeedStream& rng) {
  if (!(rate > 0.0)) throw ParameterError("geometric_skip: rate must be positive");
  if (rate >= 1.0) return 1;
  const double u = 1.0 - rng.unit();  // (0, 1]
  const double g = std::floor(std::log(u) / std::log1p(-rate));
  constexpr double cap = static_cast<double>(std::numeric_limits<std::int64_t>::max() / 4);
  return 1 + static_cast<std::int64_t>(std::min(g, cap));
}

SampleSet sample_range(std::int64_t lo, std::int64_t hi, double rate, SeedStream& rng) {
  SampleSet out;
  out.rate = rate;
  if (hi <= lo || rate <= 0.0) return out;
  if (rate >= 1.0) {
    out.indices.reserve(static_cast<std::size_t>(hi - lo));
    for (std::int64_t i = lo; i < hi; ++i) out.indices.push_back(i);
    return out;
  }
  for (std::int64_t i = lo - 1 + geometric_skip(rate, rng); i < hi; i += geometric_skip(rate, rng))
    out.indices.push_back(i);
  return out;
}

void SampleStream::extend_to(std::int64_t hi) {
  while (last_ < hi - 1) {
    last_ += geometric_skip(ceiling_, rng_);
    pos_.push_back(last_);
    mark_.push_back(rng_.unit() * ceiling_);
  }
}

int SharedRandomness::h(std::size_t j, Symbol c) const {
  if (mode == EmbedMode::binary) {
    int bit;
    if (c.code == '0') bit = 0;
    else if (c.code == '1') bit = 1;
    else throw ParameterError("binary embedding expects symbols '0' and '1'");
    return bit ^ static_cast<int>(keys[j] & 1U);
  }
  return static_cast<int>(mix64(keys[j] ^ static_cast<std::uint64_t>(c.code)) & 1U);
}

namespace {

void draw_keys(SharedRandomness& r, SeedStream& rng) {
  r.keys.resize(r.s.size());
  for (auto& key : r.keys) key = rng.next_u64();
}

}  // namespace

SharedRandomness make_shared_randomness(std::int64_t n, double p, std::uint64_t seed, EmbedMode mode) {
  if (n < 1) throw ParameterError("shared randomness: n must be >= 1");
  const double two_ln = 2.0 * std::log(static_cast<double>(n));
  if (!(p >= two_ln) || p <= 0.0) throw ParameterError("shared randomness: p must be >= 2 ln n and positive");
  SharedRandomness r;
  r.n = n;
  r.p = p;
  r.seed = seed;
  r.mode = mode;
  SeedStream root(seed);
  auto srng = root.split("sample");
  r.s = sample_range(1, 3 * n + 1, two_ln / p, srng).indices;
  auto hrng = root.split("hash");
  draw_keys(r, hrng);
  return r;
}

SharedRandomness make_full_randomness(std::int64_t n, std::uint64_t seed, EmbedMode mode) {
  if (n < 0) throw ParameterError("full randomness: negative n");
  SharedRandomness r;
  r.n = n;
  r.p = 1.0;
  r.seed = seed;
  r.mode = mode;
  for (std::int64_t i = 1; i <= 3 * n; ++i) r.s.push_back(i);
  SeedStream root(seed);
  auto hrng = root.split("hash");
  draw_keys(r, hrng);
  return r;
}

}  // namespace gapshear
