#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gapshear/gap_tester.hpp"
#include "gapshear/random.hpp"

namespace gapshear {

// ---- corpus generation ----

std::string random_string(std::int64_t n, std::string_view alphabet, SeedStream& rng);

// Exactly e edits; each one is an insertion, deletion or substitution (to a
// different symbol) with equal probability, at a uniform position.
std::string plant_edits(std::string s, std::int64_t e, std::string_view alphabet, SeedStream& rng);

// X over the first half of `alphabet`, Y over the second half.
std::pair<std::string, std::string> disjoint_pair(std::int64_t n, std::string_view alphabet, SeedStream& rng);

enum class GenKind { uniform, aperiodic, periodic };

GenKind parse_gen_kind(std::string_view s);

struct GenSpec {
  GenKind kind = GenKind::uniform;
  std::int64_t n = 0;
  std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
  std::int64_t edits = 0;
  std::int64_t window = 64;  // aperiodic: l
  std::int64_t k = 8;        // aperiodic: per > 2k on every window
  std::int64_t period = 4;   // periodic: length of the repeated unit
  int max_attempts = 100;
};

struct GeneratedPair {
  std::string x;
  std::string y;
  int attempts = 1;
};

GeneratedPair generate_pair(const GenSpec& spec, std::uint64_t seed);

// ---- benchmark ----

enum class TesterMode { quadratic, alpha, ptas, walk };

TesterMode parse_mode(std::string_view s);
std::string_view to_string(TesterMode m);

struct TesterConfig {
  TesterMode mode = TesterMode::quadratic;
  std::int64_t k = 0;
  std::int64_t alpha = 2;
  std::int64_t block_b = 0;
  std::int64_t window = 0;
  double epsilon = 0.5;
  double p = 0.0;  // walk; 0 picks ceil(2 ln n)
  bool verify_aperiodic = false;
  RateConfig rates;
};

// Runs the selected tester; walk results are folded into a GapVerdict.
GapVerdict run_tester(const Text& x, const Text& y, const TesterConfig& cfg, std::uint64_t seed);

struct BenchRow {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::string mode;
  std::uint64_t seed = 0;
  std::string verdict;
  std::uint64_t probes = 0;
  double wall_ms = 0.0;

  bool operator==(const BenchRow&) const = default;
};

struct BenchSpec {
  std::vector<std::int64_t> ns;
  std::vector<std::int64_t> ks;
  std::vector<TesterMode> modes;
  std::int64_t seeds = 1;
  std::uint64_t base_seed = 0;
  std::int64_t alpha = 2;
  std::int64_t window = 64;
  double epsilon = 0.5;
  bool timing = true;  // false writes wall_ms = 0 so that output is reproducible byte for byte
  RateConfig rates;
};

// Every (n, k, mode, seed) cell on a planted pair: X uniform over a..z, Y = X with k edits.
std::vector<BenchRow> run_bench(const BenchSpec& spec);

std::string_view bench_csv_header();
std::string to_csv(const BenchRow& row);
BenchRow parse_csv_row(std::string_view line);

// Appends rows, writing the header only into a new or empty file; a file with
// a different header is refused.
void append_bench_csv(const std::string& path, const std::vector<BenchRow>& rows);
std::vector<BenchRow> read_bench_csv(const std::string& path);

}  // namespace gapshear
