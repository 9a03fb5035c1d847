#include "pawns/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "parallel.hpp"
#include "pawns/error.hpp"

#ifndef PAWNS_VERSION
#define PAWNS_VERSION "dev"
#endif

namespace pawns {

namespace {

constexpr std::uint8_t kLoonyByte = 0xFF;
constexpr std::size_t kMaxScanLength = 64;

const std::array<std::uint64_t, kMaxScanLength + 1>& counts() {
  static const auto table = [] {
    std::array<std::uint64_t, kMaxScanLength + 1> t{};
    for (std::size_t i = 0; i <= kMaxScanLength; ++i) t[i] = word_count(i);
    return t;
  }();
  return table;
}

MoveClass decode(std::uint8_t b) { return b == kLoonyByte ? MoveClass::loony() : MoveClass::value(b); }

std::uint8_t encode(MoveClass c) {
  if (c.is_loony()) return kLoonyByte;
  if (c.value() >= kLoonyByte) throw Error(ErrorKind::ResourceLimit, "value " + c.str() + " does not fit a byte table");
  return static_cast<std::uint8_t>(c.value());
}

}  // namespace

// View of one length-m word held as bits plus running rank sums.
//   suf[s]: rank of w[s, m) in tier m - s
//   pre[n]: rank of reverse(w[0, n)) in tier n
struct ScanView {
  const std::vector<ExhaustiveScanner::Tier>* tiers;
  std::size_t m;
  std::array<std::uint8_t, kMaxScanLength> bit;
  std::array<std::uint64_t, kMaxScanLength + 1> suf;
  std::array<std::uint64_t, kMaxScanLength + 1> pre;

  void load(std::uint64_t rank) {
    const auto& N = counts();
    std::uint64_t r = rank;
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint64_t n = N[m - 1 - i];
      bit[i] = r >= n;
      if (bit[i]) r -= n;
    }
    suf[m] = 0;
    for (std::size_t s = m; s-- > 0;) suf[s] = suf[s + 1] + (bit[s] ? N[m - 1 - s] : 0);
    pre[0] = 0;
    for (std::size_t n = 0; n < m; ++n) pre[n + 1] = pre[n] + (bit[n] ? N[n] : 0);
  }

  std::size_t size() const { return m; }
  bool stopped(std::size_t i) const { return bit[i]; }
  Nimber eps_prefix(std::size_t n) const { return (*tiers)[n].eps[pre[n]]; }
  Nimber eps_suffix(std::size_t s) const { return (*tiers)[m - s].eps[suf[s]]; }
  MoveClass colon_suffix(bool u, std::size_t s) const { return decode((*tiers)[m - s].colon[u][suf[s]]); }
  MoveClass colon_rprefix(bool u, std::size_t n) const { return decode((*tiers)[n].colon[u][pre[n]]); }
};

ExhaustiveScanner::ExhaustiveScanner(unsigned workers, std::size_t memory_limit)
    : workers_(std::max(1U, workers)), memory_limit_(memory_limit) {
  Tier empty;
  empty.eps = {0};
  empty.colon[0] = {kLoonyByte};
  empty.colon[1] = {kLoonyByte};
  tiers_.push_back(std::move(empty));
}

void ExhaustiveScanner::scan_range(std::size_t m, std::uint64_t lo, std::uint64_t hi, unsigned worker,
                                   const Sink& sink) const {
  ScanView view{&tiers_, m, {}, {}, {}};
  MexScratch scratch;
  for (std::uint64_t r = lo; r < hi; ++r) {
    view.load(r);
    sink(r, epsilon_in(view, scratch), worker);
  }
}

void ExhaustiveScanner::scan(std::size_t m, const Sink& sink) const {
  if (m == 0) throw Error(ErrorKind::IndexOutOfRange, "scan length must be positive");
  if (m > kMaxScanLength) throw Error(ErrorKind::ResourceLimit, "scan length " + std::to_string(m) + " too large");
  if (built_length() + 1 < m) {
    throw Error(ErrorKind::InsufficientTable,
                "scan of length " + std::to_string(m) + " needs tiers through " + std::to_string(m - 1));
  }
  detail::parallel_chunks<std::uint64_t>(0, word_count(m), workers_,
                                         [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
                                           scan_range(m, lo, hi, w, sink);
                                         });
}

void ExhaustiveScanner::build_through(std::size_t length) {
  if (length > kMaxScanLength) {
    throw Error(ErrorKind::ResourceLimit, "table length " + std::to_string(length) + " too large");
  }
  std::size_t bytes = 0;
  for (std::size_t L = 0; L <= length; ++L) bytes += 3 * word_count(L);
  if (bytes > memory_limit_) {
    throw Error(ErrorKind::ResourceLimit, "tables through length " + std::to_string(length) + " need " +
                                              std::to_string(bytes) + " bytes, limit " +
                                              std::to_string(memory_limit_));
  }
  while (built_length() < length) {
    const std::size_t L = built_length() + 1;
    Tier tier;
    tier.eps.assign(word_count(L), 0);
    scan(L, [&tier](std::uint64_t rank, Nimber v, unsigned) {
      if (v >= kLoonyByte) throw Error(ErrorKind::ResourceLimit, "value " + std::to_string(v) + " does not fit a byte table");
      tier.eps[rank] = static_cast<std::uint8_t>(v);
    });
    tiers_.push_back(std::move(tier));
    fill_colon(L);
  }
}

void ExhaustiveScanner::fill_colon(std::size_t L) {
  Tier& t = tiers_[L];
  const std::uint64_t count = word_count(L);
  t.colon[0].assign(count, kLoonyByte);
  t.colon[1].assign(count, kLoonyByte);
  const Tier& t1 = tiers_[L - 1];
  const Tier* t2 = L >= 2 ? &tiers_[L - 2] : nullptr;
  const std::uint64_t n1 = word_count(L - 1);
  const std::uint64_t n2 = L >= 2 ? word_count(L - 2) : 0;
  for (std::uint64_t r = 0; r < count; ++r) {
    const bool first = r >= n1;
    const std::uint64_t r1 = first ? r - n1 : r;  // rank of tail[1:]
    auto capture = [&] { return Nimber{t1.eps[r1]}; };
    t.colon[0][r] = encode(colon_rule(false, L, capture, [&] { return decode(t1.colon[first][r1]); }));
    if (first) continue;  // an underlined tail cannot start on a stopped file
    t.colon[1][r] = encode(colon_rule(true, L, capture, [&] {
      const bool second = r1 >= n2;
      return decode(t2->colon[second][second ? r1 - n2 : r1]);
    }));
  }
}

FirstOccurrenceTable first_occurrence(Nimber max_k, std::size_t max_m, unsigned workers) {
  FirstOccurrenceTable table;
  ExhaustiveScanner scanner(workers);
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  auto done = [&] {
    for (Nimber k = 1; k <= max_k; ++k)
      if (!table.entries.count(k)) return false;
    return true;
  };
  for (std::size_t m = 1; m <= max_m && !done(); ++m) {
    scanner.build_through(m - 1);
    // first[w][v]: least rank with value v seen by worker w
    std::vector<std::vector<std::uint64_t>> first(scanner.workers(), std::vector<std::uint64_t>(m + 1, kNone));
    scanner.scan(m, [&](std::uint64_t rank, Nimber v, unsigned w) {
      auto& slot = first[w][v];
      if (slot == kNone) slot = rank;
    });
    for (Nimber v = 0; v <= m; ++v) {
      std::uint64_t best = kNone;
      for (const auto& f : first) best = std::min(best, f[v]);
      if (best != kNone && !table.entries.count(v)) table.entries.emplace(v, FirstOccurrence{m, word_unrank(best, m)});
    }
    table.max_length = m;
  }
  return table;
}

DistributionRow value_distribution(std::size_t m, unsigned workers) {
  ExhaustiveScanner scanner(workers);
  scanner.build_through(m - 1);
  std::vector<std::vector<std::uint64_t>> counts(scanner.workers(), std::vector<std::uint64_t>(m + 1, 0));
  scanner.scan(m, [&](std::uint64_t, Nimber v, unsigned w) { ++counts[w][v]; });
  DistributionRow row;
  row.length = m;
  row.counts.assign(m + 1, 0);
  for (const auto& c : counts)
    for (std::size_t v = 0; v <= m; ++v) row.counts[v] += c[v];
  while (row.counts.size() > 1 && row.counts.back() == 0) row.counts.pop_back();
  for (auto c : row.counts) row.total += c;
  if (row.total != word_count(m)) throw Error(ErrorKind::InvariantViolation, "distribution total mismatch");
  return row;
}

std::vector<PowerMilestone> power_milestones(const std::vector<Nimber>& values) {
  std::vector<PowerMilestone> out;
  for (unsigned alpha = 0; alpha < 32; ++alpha) {
    const Nimber target = Nimber{1} << alpha;
    auto it = std::find(values.begin(), values.end(), target);
    if (it == values.end()) continue;
    out.push_back({alpha, static_cast<std::size_t>(it - values.begin())});
  }
  return out;
}

PeriodicScanResult periodic_scan(PeriodicTable& table, std::size_t max_length, bool detect) {
  table.extend(max_length);
  PeriodicScanResult result;
  result.pattern = table.pattern();
  result.values.resize(max_length + 1);
  for (std::size_t n = 0; n <= max_length; ++n) result.values[n] = table.family_value(n);
  result.powers = power_milestones(result.values);
  if (detect) result.period = detect_period(result.values, table);
  return result;
}

PeriodicScanResult periodic_scan(const PeriodicPattern& pattern, std::size_t max_length, bool detect) {
  PeriodicTable table(pattern);
  return periodic_scan(table, max_length, detect);
}

double round_significant(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  const double scale = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::fabs(x)))));
  return std::round(x * scale) / scale;
}

std::string format_percent_2sig(double fraction) {
  const double pct = round_significant(100.0 * fraction, 2);
  if (pct == 0.0) return "0";
  const int magnitude = static_cast<int>(std::floor(std::log10(pct)));
  const int decimals = std::max(0, 1 - magnitude);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, pct);
  std::string s = buf;
  if (s.rfind("0.", 0) == 0) s.erase(0, 1);
  return s;
}

const char* tool_version() { return PAWNS_VERSION; }

namespace {

void check(std::ostream& os) {
  if (!os) throw Error(ErrorKind::IoFailure, "failed writing report");
}

}  // namespace

void export_report(std::ostream& os, const DistributionRow& row, ExportFormat format) {
  os << "# pawns " << tool_version() << " distribution length=" << row.length << '\n';
  if (format == ExportFormat::JsonLines) {
    nlohmann::ordered_json rec;
    rec["length"] = row.length;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (std::size_t v = 0; v < row.counts.size(); ++v) counts[std::to_string(v)] = row.counts[v];
    rec["counts"] = counts;
    rec["total"] = row.total;
    os << rec.dump() << '\n';
  } else {
    os << "value,count,percent\n";
    for (std::size_t v = 0; v < row.counts.size(); ++v)
      os << v << ',' << row.counts[v] << ',' << format_percent_2sig(row.proportion(static_cast<Nimber>(v))) << '\n';
  }
  check(os);
}

void export_report(std::ostream& os, const FirstOccurrenceTable& table, ExportFormat format) {
  os << "# pawns " << tool_version() << " first-occurrence max-length=" << table.max_length << '\n';
  if (format == ExportFormat::JsonLines) {
    for (const auto& [k, occ] : table.entries) {
      nlohmann::ordered_json rec;
      rec["k"] = k;
      rec["m"] = occ.length;
      rec["witness"] = occ.witness.str();
      os << rec.dump() << '\n';
    }
  } else {
    os << "k,m,witness\n";
    for (const auto& [k, occ] : table.entries) os << k << ',' << occ.length << ',' << occ.witness.str() << '\n';
  }
  check(os);
}

void export_report(std::ostream& os, const PeriodicScanResult& scan, ExportFormat format) {
  const std::size_t max_length = scan.values.empty() ? 0 : scan.values.size() - 1;
  os << "# pawns " << tool_version() << " periodic pattern=" << scan.pattern.str() << " max-length=" << max_length;
  if (scan.period) {
    os << " preperiod=" << scan.period->preperiod << " period=" << scan.period->period
       << " verified=" << (scan.period->verified ? "yes" : "no");
  }
  os << '\n';
  if (format == ExportFormat::JsonLines) {
    for (std::size_t n = 1; n <= max_length; ++n) {
      nlohmann::ordered_json rec;
      rec["length"] = n;
      rec["value"] = scan.values[n];
      os << rec.dump() << '\n';
    }
  } else {
    write_value_dump(os, scan.values);
  }
  check(os);
}

}  // namespace pawns
