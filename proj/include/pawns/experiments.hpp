#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pawns/grundy.hpp"
#include "pawns/words.hpp"

namespace pawns {

/// Value and colon-class tables for every valid word up to some length, keyed
/// by content: a word of length L is stored at index word_rank(w) of tier L.
///
/// The value of a length-m word then costs O(m) lookups: every piece a move
/// leaves behind is a prefix or a suffix of the word, and the rank of every
/// suffix and of every reversed prefix falls out of one pass of running sums.
/// Values of prefixes are read through their reversals, which have the same
/// value by mirror symmetry.
class ExhaustiveScanner {
 public:
  static constexpr std::size_t kDefaultMemoryLimit = std::size_t{3} << 30;

  explicit ExhaustiveScanner(unsigned workers = 1, std::size_t memory_limit = kDefaultMemoryLimit);

  /// Fills value and colon tiers through length L. Throws Error(ResourceLimit)
  /// if the tables would exceed the memory limit.
  void build_through(std::size_t length);
  std::size_t built_length() const noexcept { return tiers_.size() - 1; }

  /// Value of the stored word of the given length and rank.
  Nimber value(std::size_t length, std::uint64_t rank) const { return tiers_.at(length).eps[rank]; }

  /// Computes the values of all length-m words without storing them; needs
  /// tiers through m - 1. Calls sink(rank, value, worker) with worker in
  /// [0, workers); the rank ranges handed to workers are disjoint prefix
  /// partitions and each worker sees its ranks in increasing order.
  using Sink = std::function<void(std::uint64_t rank, Nimber value, unsigned worker)>;
  void scan(std::size_t m, const Sink& sink) const;

  unsigned workers() const noexcept { return workers_; }

 private:
  friend struct ScanView;
  struct Tier {
    std::vector<std::uint8_t> eps;
    std::vector<std::uint8_t> colon[2];
  };

  void scan_range(std::size_t m, std::uint64_t lo, std::uint64_t hi, unsigned worker, const Sink& sink) const;
  void fill_colon(std::size_t length);

  unsigned workers_;
  std::size_t memory_limit_;
  std::vector<Tier> tiers_;
};

struct DistributionRow {
  std::size_t length = 0;
  std::vector<std::uint64_t> counts;  // counts[v] = number of words with value v
  std::uint64_t total = 0;

  double proportion(Nimber v) const {
    return v < counts.size() && total ? static_cast<double>(counts[v]) / static_cast<double>(total) : 0.0;
  }
};

struct FirstOccurrence {
  std::size_t length = 0;
  Word witness;  // lexicographically first word of that length with the value
};

struct FirstOccurrenceTable {
  std::size_t max_length = 0;  // longest length scanned
  std::map<Nimber, FirstOccurrence> entries;
};

/// Scans lengths 1..max_m (stopping once 1..max_k are all found).
FirstOccurrenceTable first_occurrence(Nimber max_k, std::size_t max_m, unsigned workers = 1);

/// Exact value counts over all word_count(m) words of length m.
DistributionRow value_distribution(std::size_t m, unsigned workers = 1);

struct PowerMilestone {
  unsigned alpha = 0;
  std::size_t length = 0;  // first family length whose value is exactly 2^alpha
};

struct PeriodicScanResult {
  PeriodicPattern pattern;
  std::vector<Nimber> values;  // index = length, 0..max_length
  std::vector<PowerMilestone> powers;
  std::optional<PeriodReport> period;
};

/// Family values through max_length, the first length reaching each power of
/// two, and (optionally) the detected period.
PeriodicScanResult periodic_scan(const PeriodicPattern& pattern, std::size_t max_length, bool detect = true);
/// Same, continuing from an existing table (e.g. one restored from a checkpoint).
PeriodicScanResult periodic_scan(PeriodicTable& table, std::size_t max_length, bool detect = true);

std::vector<PowerMilestone> power_milestones(const std::vector<Nimber>& values);

/// Round to the given number of significant figures.
double round_significant(double x, int digits);
/// Percentage rounded to two significant figures, printed without a leading
/// zero: 24, 5.4, 3.0, .51
std::string format_percent_2sig(double fraction);

enum class ExportFormat { Csv, JsonLines };

/// Every export starts with a '#' provenance line naming the tool version and
/// the scan parameters. Throws Error(IoFailure) if the stream fails.
void export_report(std::ostream& os, const DistributionRow& row, ExportFormat format);
void export_report(std::ostream& os, const FirstOccurrenceTable& table, ExportFormat format);
void export_report(std::ostream& os, const PeriodicScanResult& scan, ExportFormat format);

const char* tool_version();

}  // namespace pawns
