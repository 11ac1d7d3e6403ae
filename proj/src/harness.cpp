#include "gapshear/harness.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gapshear/ptas.hpp"
#include "gapshear/walk_embed.hpp"

namespace gapshear {

std::string random_string(std::int64_t n, std::string_view alphabet, SeedStream& rng) {
  if (alphabet.empty()) throw ParameterError("random_string: empty alphabet");
  std::string s(static_cast<std::size_t>(n), '\0');
  const auto top = static_cast<std::int64_t>(alphabet.size()) - 1;
  for (auto& c : s) c = alphabet[static_cast<std::size_t>(rng.uniform(0, top))];
  return s;
}

std::string plant_edits(std::string s, std::int64_t e, std::string_view alphabet, SeedStream& rng) {
  if (alphabet.size() < 2) throw ParameterError("plant_edits: alphabet needs two symbols");
  const auto top = static_cast<std::int64_t>(alphabet.size()) - 1;
  for (std::int64_t done = 0; done < e;) {
    const std::int64_t kind = rng.uniform(0, 2);
    const auto len = static_cast<std::int64_t>(s.size());
    if (kind == 0) {
      const auto pos = static_cast<std::size_t>(rng.uniform(0, len));
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), alphabet[static_cast<std::size_t>(rng.uniform(0, top))]);
    } else if (len == 0) {
      continue;  // nothing to delete or substitute; redraw
    } else if (kind == 1) {
      s.erase(static_cast<std::size_t>(rng.uniform(0, len - 1)), 1);
    } else {
      const auto pos = static_cast<std::size_t>(rng.uniform(0, len - 1));
      char c;
      do c = alphabet[static_cast<std::size_t>(rng.uniform(0, top))];
      while (c == s[pos]);
      s[pos] = c;
    }
    ++done;
  }
  return s;
}

std::pair<std::string, std::string> disjoint_pair(std::int64_t n, std::string_view alphabet, SeedStream& rng) {
  if (alphabet.size() < 2) throw ParameterError("disjoint_pair: alphabet needs two symbols");
  const std::size_t half = alphabet.size() / 2;
  auto x = random_string(n, alphabet.substr(0, half), rng);
  auto y = random_string(n, alphabet.substr(half), rng);
  return {std::move(x), std::move(y)};
}

GenKind parse_gen_kind(std::string_view s) {
  if (s == "uniform-random" || s == "uniform") return GenKind::uniform;
  if (s == "aperiodic-verified" || s == "aperiodic") return GenKind::aperiodic;
  if (s == "periodic-stress" || s == "periodic") return GenKind::periodic;
  throw ParameterError("unknown generator kind: " + std::string(s));
}

GeneratedPair generate_pair(const GenSpec& spec, std::uint64_t seed) {
  if (spec.n < 0 || spec.edits < 0) throw ParameterError("generate_pair: negative size");
  SeedStream root(seed);
  GeneratedPair out;
  switch (spec.kind) {
    case GenKind::uniform: {
      auto rng = root.split("x");
      out.x = random_string(spec.n, spec.alphabet, rng);
      break;
    }
    case GenKind::aperiodic: {
      for (out.attempts = 1;; ++out.attempts) {
        auto rng = root.split("x");
        out.x = random_string(spec.n, spec.alphabet, rng);
        if (!check_aperiodicity(Fragment(Text(out.x)), spec.window, spec.k)) break;
        if (out.attempts >= spec.max_attempts)
          throw ParameterError("generate_pair: no aperiodic string within the attempt budget");
      }
      break;
    }
    case GenKind::periodic: {
      if (spec.period < 1) throw ParameterError("generate_pair: period must be >= 1");
      auto rng = root.split("x");
      const auto unit = random_string(spec.period, spec.alphabet, rng);
      out.x.reserve(static_cast<std::size_t>(spec.n));
      for (std::int64_t i = 0; i < spec.n; ++i) out.x.push_back(unit[static_cast<std::size_t>(i % spec.period)]);
      break;
    }
  }
  auto erng = root.split("edits");
  out.y = plant_edits(out.x, spec.edits, spec.alphabet, erng);
  return out;
}

TesterMode parse_mode(std::string_view s) {
  if (s == "quadratic") return TesterMode::quadratic;
  if (s == "alpha") return TesterMode::alpha;
  if (s == "ptas") return TesterMode::ptas;
  if (s == "walk") return TesterMode::walk;
  throw ParameterError("unknown mode: " + std::string(s));
}

std::string_view to_string(TesterMode m) {
  switch (m) {
    case TesterMode::quadratic: return "quadratic";
    case TesterMode::alpha: return "alpha";
    case TesterMode::ptas: return "ptas";
    case TesterMode::walk: return "walk";
  }
  return "?";
}

GapVerdict run_tester(const Text& x, const Text& y, const TesterConfig& cfg, std::uint64_t seed) {
  switch (cfg.mode) {
    case TesterMode::quadratic:
      return gap_quadratic(x, y, cfg.k, cfg.rates, seed);
    case TesterMode::alpha:
      return gap_alpha(x, y, cfg.k, AlphaOptions{cfg.alpha, cfg.block_b, false}, cfg.rates, seed);
    case TesterMode::ptas:
      return gap_ptas(x, y, cfg.k, PtasOptions{cfg.window, cfg.epsilon, cfg.verify_aperiodic}, cfg.rates, seed);
    case TesterMode::walk: {
      const std::int64_t n = std::max<std::int64_t>({x.size(), y.size(), 1});
      const double p = cfg.p > 0.0 ? cfg.p : std::ceil(2.0 * std::log(static_cast<double>(n)));
      const auto t0 = std::chrono::steady_clock::now();
      const auto w = sampled_random_walk(x, y, WalkParams{cfg.k, std::max(p, 1.0), n}, seed);
      GapVerdict v;
      v.verdict = w.verdict;
      v.probes_x = w.probes_x;
      v.probes_y = w.probes_y;
      v.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      return v;
    }
  }
  throw ParameterError("run_tester: unknown mode");
}

std::vector<BenchRow> run_bench(const BenchSpec& spec) {
  std::vector<BenchRow> rows;
  for (auto n : spec.ns) {
    for (auto k : spec.ks) {
      for (std::int64_t s = 0; s < spec.seeds; ++s) {
        const std::string cell = "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",s=" + std::to_string(s);
        SeedStream rng(derive_seed(spec.base_seed, cell, 0));
        auto xrng = rng.split("x");
        const std::string xs = random_string(n, "abcdefghijklmnopqrstuvwxyz", xrng);
        auto erng = rng.split("edits");
        const std::string ys = plant_edits(xs, k, "abcdefghijklmnopqrstuvwxyz", erng);
        for (auto mode : spec.modes) {
          TesterConfig cfg;
          cfg.mode = mode;
          cfg.k = k;
          cfg.alpha = spec.alpha;
          cfg.window = spec.window;
          cfg.epsilon = spec.epsilon;
          cfg.rates = spec.rates;
          const Text x(xs), y(ys);
          const std::uint64_t seed = derive_seed(spec.base_seed, cell, 1);
          const auto v = run_tester(x, y, cfg, seed);
          rows.push_back(BenchRow{n, k, std::string(to_string(mode)), seed, std::string(to_string(v.verdict)),
                                  v.probes(), spec.timing ? v.wall_ms : 0.0});
        }
      }
    }
  }
  return rows;
}

std::string_view bench_csv_header() { return "n,k,mode,seed,verdict,probes,wall_ms"; }

std::string to_csv(const BenchRow& r) {
  char ms[64];
  std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
  std::ostringstream os;
  os << r.n << ',' << r.k << ',' << r.mode << ',' << r.seed << ',' << r.verdict << ',' << r.probes << ',' << ms;
  return os.str();
}

namespace {

template <class T>
T parse_number(std::string_view s) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParameterError("bad CSV field: " + std::string(s));
  return v;
}

}  // namespace

BenchRow parse_csv_row(std::string_view line) {
  std::vector<std::string_view> f;
  while (true) {
    const auto comma = line.find(',');
    f.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  if (f.size() != 7) throw ParameterError("bench CSV row must have 7 fields");
  BenchRow r;
  r.n = parse_number<std::int64_t>(f[0]);
  r.k = parse_number<std::int64_t>(f[1]);
  r.mode = std::string(f[2]);
  r.seed = parse_number<std::uint64_t>(f[3]);
  r.verdict = std::string(f[4]);
  r.probes = parse_number<std::uint64_t>(f[5]);
  r.wall_ms = std::stod(std::string(f[6]));
  return r;
}

void append_bench_csv(const std::string& path, const std::vector<BenchRow>& rows) {
  bool fresh = true;
  {
    std::ifstream in(path);
    std::string first;
    if (in && std::getline(in, first)) {
      if (first != bench_csv_header()) throw ParameterError("existing CSV has a different header: " + path);
      fresh = false;
    }
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw ParameterError("cannot open for writing: " + path);
  if (fresh) out << bench_csv_header() << '\n';
  for (const auto& r : rows) out << to_csv(r) << '\n';
}

std::vector<BenchRow> read_bench_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open: " + path);
  std::string line;
  std::vector<BenchRow> rows;
  if (!std::getline(in, line) || line != bench_csv_header()) throw ParameterError("missing CSV header: " + path);
  while (std::getline(in, line))
    if (!line.empty()) rows.push_back(parse_csv_row(line));
  return rows;
}

}  // namespace gapshear
