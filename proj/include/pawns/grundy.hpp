#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "pawns/engine.hpp"
#include "pawns/words.hpp"

namespace pawns {

Nimber mex(std::span<const Nimber> values);
constexpr Nimber nim_sum(Nimber a, Nimber b) noexcept { return a ^ b; }

/// Closed form for the component with no stopped files.
Nimber epsilon_plain(std::size_t m);
/// Whether a move to the plain colon component with m initial files is loony.
bool loony_plain(std::size_t m);

/// Values and colon classes of every contiguous subword of one root word,
/// keyed by (start, length) and filled bottom-up by length.
///
/// Cost is O(m^3) table lookups and O(m^2) entries. Entries of one length
/// depend only on shorter ones, so each length tier may be split across
/// workers.
class SubwordTable {
 public:
  explicit SubwordTable(Word root, unsigned workers = 1);

  const Word& root() const noexcept { return root_; }
  Nimber epsilon(std::size_t begin, std::size_t end) const { return eps_[index(begin, end - begin)]; }
  Nimber value() const { return epsilon(0, root_.size()); }
  /// Class of the colon whose tail is root[begin, end), read forwards or reversed.
  MoveClass colon_forward(bool underlined, std::size_t begin, std::size_t end) const;
  MoveClass colon_backward(bool underlined, std::size_t begin, std::size_t end) const;
  /// Class of the move on file k of the root word.
  MoveClass move_class(std::size_t k) const;
  std::vector<MoveClass> move_classes() const;

 private:
  class View;
  std::size_t index(std::size_t start, std::size_t len) const noexcept {
    return offsets_[len] + start;
  }
  void fill_entry(std::size_t start, std::size_t len, MexScratch& scratch);

  Word root_;
  std::vector<std::size_t> offsets_;
  std::vector<Nimber> eps_;
  // [underlined][index]
  std::vector<MoveClass> colon_fwd_[2];
  std::vector<MoveClass> colon_bwd_[2];
};

/// Content-keyed memo of word values, shared across many queries.
class GrundyTable {
 public:
  /// Value of w, computed through a SubwordTable on a miss. Every subword of
  /// w is recorded as well.
  Nimber epsilon(const Word& w);
  std::optional<Nimber> find(const Word& w) const;
  std::size_t size() const noexcept { return memo_.size(); }
  /// Callable view for the reference classifiers in the engine.
  EpsilonFn as_function();

 private:
  std::unordered_map<Word, Nimber> memo_;
};

Nimber epsilon(const Word& w, GrundyTable& table);
Nimber epsilon(const Word& w);

/// Per-move classes of w, via a SubwordTable.
std::vector<MoveClass> classify_moves(const Word& w);

/// Values for every subword of every member of a periodic family, keyed by
/// (start phase, length). A subword starting on file f has phase f mod p.
class PeriodicTable {
 public:
  explicit PeriodicTable(PeriodicPattern pattern);

  const PeriodicPattern& pattern() const noexcept { return pattern_; }
  std::size_t period() const noexcept { return pattern_.period; }
  /// Largest length computed for every phase.
  std::size_t length() const noexcept { return length_; }

  /// Computes all phases through the given length; cost O(p * n^2).
  void extend(std::size_t length);

  Nimber epsilon(std::size_t phase, std::size_t len) const { return eps_[phase][len]; }
  /// Value of the family member word_from_pattern(pattern, len).
  Nimber family_value(std::size_t len) const { return eps_[family_phase()][len]; }
  std::size_t family_phase() const noexcept { return pattern_.file_origin % pattern_.period; }

  /// Writes the "#phase-table:" checkpoint line (no trailing newline).
  void write_checkpoint(std::ostream& os) const;
  /// Rebuilds a table from a checkpoint line; throws Error(IoFailure) on bad input.
  static PeriodicTable from_checkpoint(const std::string& line);

 private:
  class View;
  void fill(std::size_t phase, std::size_t len, MexScratch& scratch);

  PeriodicPattern pattern_;
  std::size_t length_ = 0;
  std::vector<std::vector<Nimber>> eps_;                 // [phase][len]
  std::vector<std::vector<MoveClass>> colon_fwd_[2];     // [u][phase][len]
  std::vector<std::vector<MoveClass>> colon_bwd_[2];     // [u][phase][len]
};

/// Family values for lengths 0..max_length.
std::vector<Nimber> epsilon_periodic(const PeriodicPattern& pattern, std::size_t max_length);

struct PeriodReport {
  PeriodicPattern pattern;
  std::size_t preperiod = 0;  // n0: values repeat from this length on
  std::size_t period = 1;     // P
  bool verified = false;
  std::size_t window_begin = 0;  // lengths checked by the window rule
  std::size_t window_end = 0;
};

/// Last length the window rule inspects for (n0, P): twice (n0 + P) plus the
/// three files one compound move can remove.
constexpr std::size_t period_window_end(std::size_t preperiod, std::size_t period) {
  return 2 * (preperiod + period) + 3;
}

/// True iff every phase satisfies eps(q, l) == eps(q, l - P) for
/// n0 + P <= l <= 2(n0 + P) + 3. Throws Error(InsufficientTable) if the table
/// is shorter than the window.
bool verify_period_window(const PeriodicTable& table, std::size_t preperiod, std::size_t period);

/// Smallest period P (a multiple of the pattern period) with its least
/// preperiod n0 such that values[l] == values[l + P] for all n0 <= l and the
/// window 2(n0 + P) + 3 still fits in the data. Returns nullopt if none.
/// Without a table the report is observed only (verified == false).
std::optional<PeriodReport> detect_period(std::span<const Nimber> values, const PeriodicPattern& pattern);
/// As above, then runs verify_period_window on the table with the preperiod
/// common to all phases.
std::optional<PeriodReport> detect_period(std::span<const Nimber> values, const PeriodicTable& table);

/// "length,value" lines for lengths 1..values.size()-1.
void write_value_dump(std::ostream& os, std::span<const Nimber> values);
/// Parses a value dump (lines starting with '#' are skipped); index 0 is 0.
std::vector<Nimber> read_value_dump(std::istream& in);

}  // namespace pawns
