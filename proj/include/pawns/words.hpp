#pragma once

// Component words: strings of file flags, '0' for an unstopped file and '1'
// for a stopped one. No two stopped files may be adjacent.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pawns/error.hpp"

namespace pawns {

using Nimber = std::uint32_t;

/// Index of the first character that breaks the word rules, or nullopt.
/// A non-binary character is reported at its own index; an adjacent pair of
/// stopped flags is reported at the index of the first flag of the pair.
std::optional<std::size_t> validate(std::string_view text);

/// An immutable, always-valid component word, packed 64 flags per limb.
class Word {
 public:
  Word() = default;

  /// Throws Error(InvalidWord) if validate(text) fails.
  static Word parse(std::string_view text);
  static Word zeros(std::size_t length);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool stopped(std::size_t i) const noexcept {
    return (limbs_[i / 64] >> (i % 64)) & 1U;
  }

  /// Flags [begin, end).
  Word subword(std::size_t begin, std::size_t end) const;
  Word reversed() const;
  std::string str() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  friend class WordBuilder;
  std::vector<std::uint64_t> limbs_;
  std::size_t size_ = 0;
};

/// Appends flags one at a time; build() enforces the adjacency rule.
class WordBuilder {
 public:
  void reserve(std::size_t n) { word_.limbs_.reserve((n + 63) / 64); }
  WordBuilder& push(bool stopped);
  Word build() &&;

 private:
  Word word_;
  bool adjacent_ = false;
};

Word reverse(const Word& word);

std::ostream& operator<<(std::ostream& os, const Word& word);

// Counting and ranking. Words of one length are ordered lexicographically
// with 0 < 1; the rank of a word is its index in that order. A run of ranks
// [lo, hi) is exactly the set of words sharing some prefix, so rank ranges
// double as prefix partitions.

/// Number of valid words of length m; Fibonacci(m + 2) with F1 = F2 = 1.
std::uint64_t word_count(std::size_t m);
std::uint64_t word_rank(const Word& word);
Word word_unrank(std::uint64_t rank, std::size_t length);
/// Rank range [lo, hi) of the length-m words starting with `prefix`.
std::pair<std::uint64_t, std::uint64_t> prefix_range(const Word& prefix, std::size_t m);

/// All valid words of length m in lexicographic order.
std::vector<Word> enumerate_words(std::size_t m);

/// Calls fn on every word with rank in [lo, hi); stops early if fn returns false.
void for_each_word(std::size_t m, std::uint64_t lo, std::uint64_t hi,
                   const std::function<bool(const Word&)>& fn);

/// Reads one word per line; blank lines and lines starting with '#' are skipped.
std::vector<Word> read_word_batch(std::istream& in);

/// Files whose 1-based index f satisfies (f mod period) in stopped_residues
/// are stopped. file_origin is the 1-based index of the first component file.
struct PeriodicPattern {
  std::size_t period = 1;
  std::vector<std::size_t> stopped_residues;
  std::size_t file_origin = 1;

  bool stopped_residue(std::size_t residue) const;
  bool file_stopped(std::size_t file) const { return stopped_residue(file % period); }
  std::string str() const;
};

/// Normalizes residues (sorted, deduplicated, reduced mod period) and throws
/// Error(InvalidPattern) on period 0 or cyclically adjacent stopped residues.
PeriodicPattern make_pattern(std::size_t period, std::vector<std::size_t> residues,
                             std::size_t file_origin = 1);

Word word_from_pattern(const PeriodicPattern& pattern, std::size_t length);

}  // namespace pawns

template <>
struct std::hash<pawns::Word> {
  std::size_t operator()(const pawns::Word& w) const noexcept { return w.hash(); }
};
