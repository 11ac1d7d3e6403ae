// gapshear: command-line front end for the gap edit distance testers.
//
//   gapshear gap   X Y --mode quadratic|alpha|ptas|walk --k K [...]
//   gapshear embed X [--p P] [--other Y] [--out FILE]
//   gapshear gen   --kind uniform-random|aperiodic-verified|periodic-stress --n N --out-x FX --out-y FY
//   gapshear bench --n 4096,8192 --k 16,32 --modes quadratic --seeds 20 --out bench.csv
//
// Exit status: 0 ACCEPT (or success), 1 REJECT, 2 usage or runtime error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gapshear/gap_tester.hpp"
#include "gapshear/harness.hpp"
#include "gapshear/ptas.hpp"
#include "gapshear/random.hpp"
#include "gapshear/walk_embed.hpp"

namespace {

using json = nlohmann::json;
using namespace gapshear;

constexpr int kExitError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, bool strip_newline) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open input: " + path);
  std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (strip_newline && !s.empty() && s.back() == '\n') {
    s.pop_back();
    if (!s.empty() && s.back() == '\r') s.pop_back();
  }
  return s;
}

void write_output(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output: " + path);
  out << data;
}

std::uint64_t resolve_seed(const std::string& flag) {
  if (!flag.empty()) return parse_seed(flag);
  if (const char* env = std::getenv("GAPSHEAR_SEED"); env && *env) return parse_seed(env);
  return 0;
}

std::string to_hex(const std::string& s) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : s) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

EmbedMode parse_embed_mode(const std::string& s) {
  if (s == "binary") return EmbedMode::binary;
  if (s == "extended") return EmbedMode::extended;
  throw UsageError("unknown embedding mode: " + s);
}

struct Common {
  std::string seed;
  double rate_c = 3.0;
  double lambda = 1.0;
  bool strip = false;

  void attach(CLI::App* app) {
    app->add_option("--seed", seed, "random seed (decimal or 0x hex); falls back to GAPSHEAR_SEED");
    app->add_option("--rate-c", rate_c, "sampling constant c")->check(CLI::PositiveNumber);
    app->add_option("--lambda", lambda, "confidence exponent")->check(CLI::PositiveNumber);
    app->add_flag("--strip-trailing-newline", strip, "drop one trailing newline from each input");
  }
  RateConfig rates() const { return RateConfig{rate_c, lambda, 0}; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gap edit distance testers"};
  app.require_subcommand(1);

  Common gap_common, embed_common, gen_common, bench_common;

  // gap
  auto* gap = app.add_subcommand("gap", "decide ED <= k versus ED large");
  std::string gx, gy, gmode = "quadratic";
  std::int64_t gk = -1, galpha = 0, gblock = 0, gwindow = 0;
  double geps = 0.5, gp = 0.0;
  bool gverify = false;
  gap->add_option("x", gx, "file with X")->required();
  gap->add_option("y", gy, "file with Y")->required();
  gap->add_option("--mode", gmode, "quadratic | alpha | ptas | walk");
  gap->add_option("--k", gk, "distance threshold")->required()->check(CLI::NonNegativeNumber);
  gap->add_option("--alpha", galpha, "alpha mode: approximation parameter");
  gap->add_option("--block-b", gblock, "alpha mode: block parameter (0 = automatic)");
  gap->add_option("--window", gwindow, "ptas mode: aperiodicity window l");
  gap->add_option("--epsilon", geps, "ptas mode: accuracy");
  gap->add_option("--p", gp, "walk mode: sampling parameter (default ceil(2 ln n))");
  gap->add_flag("--verify-aperiodic", gverify, "ptas mode: check the aperiodicity precondition first");
  gap_common.attach(gap);

  // embed
  auto* embed = app.add_subcommand("embed", "sublinear embedding of one string");
  std::string ex, eother, eout, eformat = "raw", emode = "binary";
  double ep = 0.0;
  embed->add_option("x", ex, "file with X")->required();
  embed->add_option("--p", ep, "sampling parameter (default ceil(2 ln n))");
  embed->add_option("--other", eother, "second input embedded with the same randomness");
  embed->add_option("--out", eout, "write the embedding here");
  embed->add_option("--format", eformat, "raw | hex")->check(CLI::IsMember({"raw", "hex"}));
  embed->add_option("--mode", emode, "binary | extended")->check(CLI::IsMember({"binary", "extended"}));
  embed_common.attach(embed);

  // gen
  auto* gen = app.add_subcommand("gen", "write a synthetic input pair");
  GenSpec gspec;
  std::string gkind = "uniform-random", gout_x, gout_y;
  gen->add_option("--kind", gkind, "uniform-random | aperiodic-verified | periodic-stress");
  gen->add_option("--n", gspec.n, "length of X")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--edits", gspec.edits, "planted edits turning X into Y")->check(CLI::NonNegativeNumber);
  gen->add_option("--alphabet", gspec.alphabet, "symbols to draw from");
  gen->add_option("--window", gspec.window, "aperiodic: window l");
  gen->add_option("--k", gspec.k, "aperiodic: every window has period > 2k");
  gen->add_option("--period", gspec.period, "periodic: unit length");
  gen->add_option("--max-attempts", gspec.max_attempts, "aperiodic: retry budget");
  gen->add_option("--out-x", gout_x, "output file for X")->required();
  gen->add_option("--out-y", gout_y, "output file for Y")->required();
  gen_common.attach(gen);

  // bench
  auto* bench = app.add_subcommand("bench", "probe/time table over a parameter grid");
  BenchSpec bspec;
  std::vector<std::string> bmodes{"quadratic"};
  std::string bout;
  bool no_timing = false;
  bench->add_option("--n", bspec.ns, "lengths")->required()->delimiter(',');
  bench->add_option("--k", bspec.ks, "thresholds")->required()->delimiter(',');
  bench->add_option("--modes,--mode", bmodes, "testers")->delimiter(',');
  bench->add_option("--seeds,--trials", bspec.seeds, "seeds per cell")->check(CLI::PositiveNumber);
  bench->add_option("--alpha", bspec.alpha, "alpha mode parameter");
  bench->add_option("--window", bspec.window, "ptas window");
  bench->add_option("--epsilon", bspec.epsilon, "ptas accuracy");
  bench->add_option("--out", bout, "CSV file (appended)")->required();
  bench->add_flag("--no-timing", no_timing, "write wall_ms as 0 for byte-exact reruns");
  bench_common.attach(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (gap->parsed()) {
      const auto mode = parse_mode(gmode);
      if (mode == TesterMode::ptas && gwindow <= 0) throw UsageError("--mode ptas requires --window");
      if (mode == TesterMode::alpha && galpha <= 0) throw UsageError("--mode alpha requires --alpha >= 1");
      const std::uint64_t seed = resolve_seed(gap_common.seed);
      const Text x(read_input(gx, gap_common.strip)), y(read_input(gy, gap_common.strip));
      TesterConfig cfg;
      cfg.mode = mode;
      cfg.k = gk;
      cfg.alpha = galpha;
      cfg.block_b = gblock;
      cfg.window = gwindow;
      cfg.epsilon = geps;
      cfg.p = gp;
      cfg.verify_aperiodic = gverify;
      cfg.rates = gap_common.rates();
      const auto v = run_tester(x, y, cfg, seed);
      json report = {{"command", "gap"},
                     {"mode", gmode},
                     {"verdict", std::string(to_string(v.verdict))},
                     {"k", gk},
                     {"n_x", x.size()},
                     {"n_y", y.size()},
                     {"seed", seed},
                     {"probes_x", v.probes_x},
                     {"probes_y", v.probes_y},
                     {"wall_ms", v.wall_ms}};
      std::cout << report.dump() << '\n';
      return v.accepted() ? 0 : 1;
    }

    if (embed->parsed()) {
      const std::uint64_t seed = resolve_seed(embed_common.seed);
      const Text x(read_input(ex, embed_common.strip));
      std::optional<Text> other;
      if (!eother.empty()) other.emplace(read_input(eother, embed_common.strip));
      const std::int64_t n = std::max<std::int64_t>({x.size(), other ? other->size() : 0, 1});
      const double p = ep > 0.0 ? ep : std::max(1.0, std::ceil(2.0 * std::log(static_cast<double>(n))));
      if (p < 2.0 * std::log(static_cast<double>(n))) throw UsageError("--p must be at least 2 ln n");
      const auto r = make_shared_randomness(n, p, seed, parse_embed_mode(emode));
      const std::string fx = sublinear_embed(x, r);
      if (!eout.empty()) write_output(eout, eformat == "hex" ? to_hex(fx) : fx);
      json report = {{"command", "embed"},   {"n", n},          {"p", p},
                     {"seed", seed},         {"s_size", r.s.size()}, {"output_length", fx.size()},
                     {"probes_x", x.probes()}};
      if (other) {
        const std::string fy = sublinear_embed(*other, r);
        report["probes_y"] = other->probes();
        report["hamming"] = hamming_distance(fx, fy);
      }
      std::cout << report.dump() << '\n';
      return 0;
    }

    if (gen->parsed()) {
      gspec.kind = parse_gen_kind(gkind);
      const std::uint64_t seed = resolve_seed(gen_common.seed);
      const auto pair = generate_pair(gspec, seed);
      write_output(gout_x, pair.x);
      write_output(gout_y, pair.y);
      json report = {{"command", "gen"},      {"kind", gkind},           {"seed", seed},
                     {"n_x", pair.x.size()}, {"n_y", pair.y.size()},    {"edits", gspec.edits},
                     {"attempts", pair.attempts}};
      std::cout << report.dump() << '\n';
      return 0;
    }

    if (bench->parsed()) {
      for (const auto& m : bmodes) bspec.modes.push_back(parse_mode(m));
      bspec.base_seed = resolve_seed(bench_common.seed);
      bspec.timing = !no_timing;
      bspec.rates = bench_common.rates();
      const auto rows = run_bench(bspec);
      append_bench_csv(bout, rows);
      json report = {{"command", "bench"}, {"rows", rows.size()}, {"out", bout}, {"seed", bspec.base_seed}};
      std::cout << report.dump() << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
