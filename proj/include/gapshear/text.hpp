#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gapshear {

// Bad argument supplied by the caller (wrong range, wrong size, ...).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an internal routine did not hold.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// A randomized routine exhausted its restart budget.
struct UnluckyRunError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::min();

// One character as seen by the algorithms. Reads outside a string give the
// sentinel, which never equals anything -- not even another sentinel.
struct Symbol {
  std::int16_t code = -1;

  static constexpr Symbol sentinel() { return Symbol{}; }
  static constexpr Symbol of(unsigned char c) { return Symbol{static_cast<std::int16_t>(c)}; }
  constexpr bool valid() const { return code >= 0; }

  friend constexpr bool operator==(Symbol a, Symbol b) { return a.code >= 0 && a.code == b.code; }
};

// Immutable byte string with a shared probe counter. Copies are cheap views
// onto the same data and the same counter.
class Text {
 public:
  Text();
  explicit Text(std::string data);

  std::int64_t size() const { return static_cast<std::int64_t>(data_->size()); }

  // Every call counts as one probe, in range or not.
  Symbol at(std::int64_t i) const {
    probes_->fetch_add(1, std::memory_order_relaxed);
    if (i < 0 || i >= size()) return Symbol::sentinel();
    return Symbol::of(static_cast<unsigned char>((*data_)[static_cast<std::size_t>(i)]));
  }

  std::uint64_t probes() const { return probes_->load(std::memory_order_relaxed); }
  void reset_probes() const { probes_->store(0, std::memory_order_relaxed); }

  // Raw access for reference computations; never counted.
  std::string_view unprobed() const { return *data_; }

  // Same bytes, independent counter.
  Text uninstrumented() const;

 private:
  std::shared_ptr<const std::string> data_;
  std::shared_ptr<std::atomic<std::uint64_t>> probes_;
};

// Half-open window [lo, hi) of a Text. Indices are relative to lo; reads
// outside the window give the sentinel without touching the Text.
class Fragment {
 public:
  Fragment() = default;
  Fragment(const Text& t);  // NOLINT: whole text
  Fragment(const Text& t, std::int64_t lo, std::int64_t hi);

  std::int64_t size() const { return hi_ - lo_; }
  std::int64_t begin() const { return lo_; }
  std::int64_t end() const { return hi_; }
  const Text& text() const { return text_; }

  Symbol at(std::int64_t i) const {
    if (i < 0 || i >= size()) return Symbol::sentinel();
    return text_.at(lo_ + i);
  }

  // Relative sub-window; must lie within this fragment.
  Fragment sub(std::int64_t a, std::int64_t b) const;

  // Reads every symbol once.
  std::vector<Symbol> read() const;

  std::string_view unprobed() const {
    return text_.unprobed().substr(static_cast<std::size_t>(lo_), static_cast<std::size_t>(size()));
  }

 private:
  Text text_;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
};

struct PeriodInfo {
  std::int64_t period = 0;
  std::int64_t length = 0;
  bool periodic() const { return 2 * period <= length; }
};

std::vector<Symbol> to_symbols(std::string_view s);

// Smallest p >= 1 with s[i] == s[i + p] throughout. Throws std::domain_error on empty input.
std::int64_t shortest_period(std::span<const Symbol> s);
PeriodInfo shortest_period(const Fragment& f);

// Start offsets (relative to the window) of every exact occurrence.
std::vector<std::int64_t> occurrences(std::span<const Symbol> pattern, std::span<const Symbol> window);
std::vector<std::int64_t> occurrences(const Fragment& pattern, const Fragment& window);

// PREF[i] = LCP(t, t[i..]) for i in [0..|t|], so PREF[0] = |t| and PREF[|t|] = 0.
std::vector<std::int64_t> pref_table(std::span<const Symbol> t);
std::vector<std::int64_t> pref_table(const Fragment& t);

// Longest l with HD(x[i..i+l), y[j..j+l)) <= k; 0 when i or j lies outside [0..|x|] / [0..|y|].
std::int64_t lce_exact(const Fragment& x, const Fragment& y, std::int64_t k, std::int64_t i, std::int64_t j);

// Reference distances over raw bytes (no probes).
std::int64_t edit_distance_full(std::string_view x, std::string_view y);
std::int64_t indel_distance(std::string_view x, std::string_view y);

struct LvResult {
  bool accept = false;
  std::optional<std::int64_t> distance;  // ED when accept
  // Rows d_i over diagonals [-k..k] (index j + k); kUnreachable marks -inf.
  // Computation stops at the first accepting row.
  std::vector<std::vector<std::int64_t>> frontier;
};

// Exact ED <= k decision via the diagonal-frontier recurrence with exact LCE.
LvResult landau_vishkin(const Fragment& x, const Fragment& y, std::int64_t k, bool keep_frontier = false);

// ED(x, y) if it is at most cap, nullopt otherwise.
std::optional<std::int64_t> bounded_edit_distance(const Fragment& x, const Fragment& y, std::int64_t cap);

}  // namespace gapshear
