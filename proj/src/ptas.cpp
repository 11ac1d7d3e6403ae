#include "gapshear/ptas.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace gapshear {

std::optional<std::int64_t> check_aperiodicity(const Fragment& x, std::int64_t ell, std::int64_t k) {
  if (ell < 1 || k < 0) throw ParameterError("check_aperiodicity: need l >= 1 and k >= 0");
  const std::int64_t n = x.size();
  if (ell > n) return std::nullopt;
  if (2 * k >= ell) return 0;  // per(w) <= |w| <= 2k for every window
  const auto s = x.read();
  std::optional<std::int64_t> first;
  std::vector<std::int64_t> bad(static_cast<std::size_t>(n + 1));
  for (std::int64_t p = 1; p <= 2 * k; ++p) {
    // bad[t] counts mismatches s[u] != s[u+p] for u < t.
    bad[0] = 0;
    for (std::int64_t u = 0; u < n; ++u)
      bad[static_cast<std::size_t>(u + 1)] =
          bad[static_cast<std::size_t>(u)] +
          (u + p < n && !(s[static_cast<std::size_t>(u)] == s[static_cast<std::size_t>(u + p)]) ? 1 : 0);
    const std::int64_t limit = first ? std::min(*first, n - ell + 1) : n - ell + 1;
    for (std::int64_t i = 0; i < limit; ++i) {
      if (bad[static_cast<std::size_t>(i + ell - p)] == bad[static_cast<std::size_t>(i)]) {
        first = i;
        break;
      }
    }
  }
  return first;
}

Decomposition decompose(const Fragment& x, const Fragment& y, std::int64_t k, std::int64_t ell, double delta,
                        std::uint64_t seed) {
  if (k < 0 || ell < 1) throw ParameterError("decompose: need k >= 0 and l >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("decompose: delta must lie in (0, 1)");
  Decomposition dec;
  dec.q = static_cast<std::int64_t>(std::ceil(static_cast<double>((k + 1) * ell) / delta));
  const std::int64_t n = x.size();
  if (n <= dec.q) {
    dec.xb = {0, n};
    dec.yb = {0, y.size()};
    return dec;
  }
  SeedStream rng(seed);
  const std::int64_t r = rng.uniform(0, dec.q - 1);
  dec.xb.push_back(0);
  dec.yb.push_back(0);
  for (std::int64_t xi = r; xi < n; xi += dec.q) {
    std::int64_t found = -1;
    if (xi + ell <= n) {
      const std::int64_t wlo = std::max<std::int64_t>(0, xi - k);
      const std::int64_t whi = std::min(y.size(), xi + k + ell);
      if (whi - wlo >= ell) {
        auto occ = occurrences(x.sub(xi, xi + ell), y.sub(wlo, whi));
        if (occ.size() > 1) throw ContractError("decompose: anchor occurs twice; X is not aperiodic");
        if (occ.size() == 1) found = wlo + occ.front();
      }
    }
    if (found < 0) {
      dec.failed = true;
      dec.xb.push_back(xi);
      continue;
    }
    dec.xb.push_back(xi);
    dec.yb.push_back(found);
  }
  dec.xb.push_back(n);
  if (dec.failed) {
    dec.yb.assign(dec.xb.size(), y.size());
    dec.yb[0] = 0;
  } else {
    dec.yb.push_back(y.size());
  }
  return dec;
}

PhraseResult phrase_distance_or_cert(const Fragment& xi, const Fragment& yi, std::int64_t k, std::int64_t cap,
                                     const RateConfig& rates, std::uint64_t seed) {
  if (k < 0) throw ParameterError("phrase_distance_or_cert: negative k");
  if (xi.size() == yi.size()) {
    SeedStream rng(seed);
    const auto sample = sample_range(0, xi.size(), rates.rate(xi.size() + yi.size(), k), rng);
    bool clean = true;
    for (auto s : sample.indices) {
      if (!(xi.at(s) == yi.at(s))) {
        clean = false;
        break;
      }
    }
    if (clean) return PhraseResult{PhraseResult::Kind::certified, 0};
  }
  const std::int64_t limit = cap < 0 ? std::max(xi.size(), yi.size()) : cap;
  if (auto d = bounded_edit_distance(xi, yi, limit)) return PhraseResult{PhraseResult::Kind::exact, *d};
  return PhraseResult{PhraseResult::Kind::exceeds, limit};
}

namespace {

Fragment phrase_x(const Fragment& x, const Decomposition& dec, std::size_t i) {
  return x.sub(dec.xb[i], dec.xb[i + 1]);
}
Fragment phrase_y(const Fragment& y, const Decomposition& dec, std::size_t i) {
  return y.sub(dec.yb[i], dec.yb[i + 1]);
}

}  // namespace

bool estimate_sum(const Fragment& x, const Fragment& y, const Decomposition& dec, std::int64_t k, double epsilon,
                  const RateConfig& rates, std::uint64_t seed) {
  if (k < 0) throw ParameterError("estimate_sum: negative k");
  if (!(epsilon > 0.0)) throw ParameterError("estimate_sum: epsilon must be positive");
  const auto m = static_cast<std::size_t>(dec.phrases());
  if (k == 0) {
    for (std::size_t i = 0; i < m; ++i) {
      const Fragment xi = phrase_x(x, dec, i), yi = phrase_y(y, dec, i);
      if (xi.size() != yi.size()) return false;
      for (std::int64_t s = 0; s < xi.size(); ++s)
        if (!(xi.at(s) == yi.at(s))) return false;
    }
    return true;
  }

  RateConfig rc = rates;
  if (rc.context_n <= 0) rc.context_n = x.size() + y.size();
  const std::int64_t n = x.size() + y.size();
  const double ln_n = rc.log_n(n);
  const double limit = (1.0 + epsilon / 2.0) * static_cast<double>(k);
  const double want = std::ceil(rc.c * rc.lambda * static_cast<double>(n) * ln_n /
                                (epsilon * epsilon * static_cast<double>(k)));

  if (want >= static_cast<double>(n)) {
    // As many draws as terms: evaluating every term exactly is cheaper.
    std::int64_t total = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const std::int64_t room = static_cast<std::int64_t>(std::floor(limit)) - total;
      auto d = bounded_edit_distance(phrase_x(x, dec, i), phrase_y(y, dec, i), room);
      if (!d) return false;
      total += *d;
    }
    return true;
  }

  const auto draws = static_cast<std::int64_t>(want);
  std::vector<std::int64_t> prefix(m + 1, 0);  // term ranges: phrase i owns |X_i| + |Y_i| indicators
  double expected_cost = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t xs = dec.xb[i + 1] - dec.xb[i], ys = dec.yb[i + 1] - dec.yb[i];
    prefix[i + 1] = prefix[i] + xs + ys;
    double harmonic = 0.0;
    for (std::int64_t j = 1; j <= xs + ys; ++j) harmonic += 1.0 / static_cast<double>(j);
    expected_cost += static_cast<double>(xs) * harmonic;
  }
  expected_cost *= static_cast<double>(draws) / static_cast<double>(n);

  SeedStream root(seed);
  const auto attempts = static_cast<std::int64_t>(std::ceil(rc.lambda * std::log2(static_cast<double>(n)))) + 1;
  for (std::int64_t attempt = 0; attempt < attempts; ++attempt) {
    SeedStream rng = root.split("attempt");
    std::vector<std::optional<std::int64_t>> known(m);
    std::int64_t known_sum = 0, hits = 0;
    double cost = 0.0;
    bool restart = false;
    for (std::int64_t t = 0; t < draws; ++t) {
      const std::int64_t u = rng.uniform(0, n - 1);
      const auto i = static_cast<std::size_t>(std::upper_bound(prefix.begin(), prefix.end(), u) - prefix.begin() - 1);
      const std::int64_t j = u - prefix[i];
      cost += static_cast<double>(dec.xb[i + 1] - dec.xb[i]) / static_cast<double>(j + 1);
      if (cost > 2.0 * expected_cost) {
        restart = true;
        break;
      }
      if (!known[i]) {
        auto res = phrase_distance_or_cert(phrase_x(x, dec, i), phrase_y(y, dec, i), j, k, rc,
                                           rng.split("phrase").seed());
        if (res.kind == PhraseResult::Kind::exceeds) return false;
        if (res.kind == PhraseResult::Kind::exact) {
          known[i] = res.distance;
          known_sum += res.distance;
          if (known_sum > k) return false;
        }
      }
      if (known[i] && *known[i] > j) ++hits;
    }
    if (restart) continue;
    return static_cast<double>(hits) <= limit * static_cast<double>(draws) / static_cast<double>(n);
  }
  throw UnluckyRunError("estimate_sum: restart budget exhausted");
}

GapVerdict gap_ptas(const Fragment& x, const Fragment& y, std::int64_t k, const PtasOptions& opts,
                    const RateConfig& rates, std::uint64_t seed) {
  if (k < 0) throw ParameterError("gap_ptas: negative k");
  if (opts.window < 1) throw ParameterError("gap_ptas: window l must be >= 1");
  if (!(opts.epsilon > 0.0)) throw ParameterError("gap_ptas: epsilon must be positive");
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t px = x.text().probes(), py = y.text().probes();
  if (opts.verify_aperiodic) {
    if (auto bad = check_aperiodicity(x, opts.window, k))
      throw ParameterError("gap_ptas: X is not aperiodic at position " + std::to_string(*bad));
  }
  RateConfig rc = rates;
  if (rc.context_n <= 0) rc.context_n = x.size() + y.size();
  const std::int64_t n = x.size() + y.size();
  const auto rounds =
      static_cast<std::int64_t>(std::ceil(rc.lambda * std::log2(static_cast<double>(std::max<std::int64_t>(n, 2))))) + 1;

  GapVerdict out;
  SeedStream root(seed);
  for (std::int64_t it = 0; it < rounds && !out.accepted(); ++it) {
    const auto dec = decompose(x, y, k, opts.window, 0.5, root.split("decompose").seed());
    if (estimate_sum(x, y, dec, k, opts.epsilon, rc, root.split("estimate").seed())) out.verdict = Verdict::accept;
  }
  out.probes_x = x.text().probes() - px;
  out.probes_y = y.text().probes() - py;
  out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace gapshear
