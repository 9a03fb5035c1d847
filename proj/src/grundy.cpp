#include "pawns/grundy.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "parallel.hpp"

namespace pawns {

Nimber mex(std::span<const Nimber> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (Nimber v : values)
    if (v < seen.size()) seen[v] = true;
  Nimber v = 0;
  while (seen[v]) ++v;
  return v;
}

Nimber epsilon_plain(std::size_t m) {
  switch (m % 10) {
    case 0:
    case 2:
    case 3:
    case 6:
    case 9:
      return 0;
    default:
      return 1;
  }
}

bool loony_plain(std::size_t m) { return m % 5 == 1 || m % 5 == 4; }

// ---------------------------------------------------------------------------
// SubwordTable

class SubwordTable::View {
 public:
  View(const SubwordTable& t, std::size_t start, std::size_t len) : t_(t), s_(start), n_(len) {}

  std::size_t size() const { return n_; }
  bool stopped(std::size_t i) const { return t_.root_.stopped(s_ + i); }
  Nimber eps_prefix(std::size_t l) const { return t_.eps_[t_.index(s_, l)]; }
  Nimber eps_suffix(std::size_t st) const { return t_.eps_[t_.index(s_ + st, n_ - st)]; }
  MoveClass colon_suffix(bool u, std::size_t st) const { return t_.colon_fwd_[u][t_.index(s_ + st, n_ - st)]; }
  MoveClass colon_rprefix(bool u, std::size_t l) const { return t_.colon_bwd_[u][t_.index(s_, l)]; }

 private:
  const SubwordTable& t_;
  std::size_t s_;
  std::size_t n_;
};

SubwordTable::SubwordTable(Word root, unsigned workers) : root_(std::move(root)) {
  const std::size_t m = root_.size();
  offsets_.resize(m + 2);
  offsets_[0] = 0;
  for (std::size_t len = 0; len <= m; ++len) offsets_[len + 1] = offsets_[len] + (m - len + 1);
  const std::size_t total = offsets_[m + 1];
  eps_.assign(total, 0);
  for (int u = 0; u < 2; ++u) {
    colon_fwd_[u].assign(total, MoveClass::loony());
    colon_bwd_[u].assign(total, MoveClass::loony());
  }

  std::vector<MexScratch> scratch(std::max(1U, workers));
  for (std::size_t len = 0; len <= m; ++len) {
    const std::size_t starts = m - len + 1;
    // Small tiers are not worth a thread hand-off.
    const unsigned w = starts * len < 4096 ? 1U : workers;
    detail::parallel_chunks(std::size_t{0}, starts, w, [&](std::size_t lo, std::size_t hi, unsigned worker) {
      for (std::size_t s = lo; s < hi; ++s) fill_entry(s, len, scratch[worker]);
    });
  }
}

void SubwordTable::fill_entry(std::size_t s, std::size_t len, MexScratch& scratch) {
  const std::size_t idx = index(s, len);
  eps_[idx] = epsilon_in(View(*this, s, len), scratch);

  for (int u = 0; u < 2; ++u) {
    const bool underlined = u == 1;
    if (underlined && len > 0 && root_.stopped(s)) {
      // Never consulted; left loony.
    } else {
      colon_fwd_[u][idx] = colon_rule(
          underlined, len, [&] { return eps_[index(s + 1, len - 1)]; },
          [&] {
            if (!underlined) return colon_fwd_[root_.stopped(s)][index(s + 1, len - 1)];
            return colon_fwd_[root_.stopped(s + 1)][index(s + 2, len - 2)];
          });
    }
    if (underlined && len > 0 && root_.stopped(s + len - 1)) {
      // Never consulted; left loony.
    } else {
      colon_bwd_[u][idx] = colon_rule(
          underlined, len, [&] { return eps_[index(s, len - 1)]; },
          [&] {
            if (!underlined) return colon_bwd_[root_.stopped(s + len - 1)][index(s, len - 1)];
            return colon_bwd_[root_.stopped(s + len - 2)][index(s, len - 2)];
          });
    }
  }
}

MoveClass SubwordTable::colon_forward(bool underlined, std::size_t begin, std::size_t end) const {
  if (underlined && end > begin && root_.stopped(begin))
    throw Error(ErrorKind::InvariantViolation, "underlined colon with stopped tail");
  return colon_fwd_[underlined][index(begin, end - begin)];
}

MoveClass SubwordTable::colon_backward(bool underlined, std::size_t begin, std::size_t end) const {
  if (underlined && end > begin && root_.stopped(end - 1))
    throw Error(ErrorKind::InvariantViolation, "underlined colon with stopped tail");
  return colon_bwd_[underlined][index(begin, end - begin)];
}

MoveClass SubwordTable::move_class(std::size_t k) const {
  if (k >= root_.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "file " + std::to_string(k) + " of word '" + root_.str() + "'");
  }
  return classify_move_in(View(*this, 0, root_.size()), k);
}

std::vector<MoveClass> SubwordTable::move_classes() const {
  std::vector<MoveClass> out;
  out.reserve(root_.size());
  for (std::size_t k = 0; k < root_.size(); ++k) out.push_back(move_class(k));
  return out;
}

// ---------------------------------------------------------------------------
// GrundyTable

namespace {
// Recording every subword costs O(m^3) bits; only worth it for short roots.
constexpr std::size_t kRecordSubwordsUpTo = 64;
}  // namespace

Nimber GrundyTable::epsilon(const Word& w) {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  const SubwordTable table(w);
  const std::size_t m = w.size();
  if (m <= kRecordSubwordsUpTo) {
    for (std::size_t b = 0; b <= m; ++b)
      for (std::size_t e = b; e <= m; ++e) memo_.try_emplace(w.subword(b, e), table.epsilon(b, e));
  } else {
    memo_.emplace(w, table.value());
  }
  return table.value();
}

std::optional<Nimber> GrundyTable::find(const Word& w) const {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  return std::nullopt;
}

EpsilonFn GrundyTable::as_function() {
  return [this](const Word& w) { return epsilon(w); };
}

Nimber epsilon(const Word& w, GrundyTable& table) { return table.epsilon(w); }

Nimber epsilon(const Word& w) { return SubwordTable(w).value(); }

std::vector<MoveClass> classify_moves(const Word& w) { return SubwordTable(w).move_classes(); }

// ---------------------------------------------------------------------------
// PeriodicTable

class PeriodicTable::View {
 public:
  View(const PeriodicTable& t, std::size_t phase, std::size_t len) : t_(t), q_(phase), n_(len) {}

  std::size_t size() const { return n_; }
  bool stopped(std::size_t i) const { return t_.pattern_.stopped_residue((q_ + i) % t_.period()); }
  Nimber eps_prefix(std::size_t l) const { return t_.eps_[q_][l]; }
  Nimber eps_suffix(std::size_t st) const { return t_.eps_[(q_ + st) % t_.period()][n_ - st]; }
  MoveClass colon_suffix(bool u, std::size_t st) const {
    return t_.colon_fwd_[u][(q_ + st) % t_.period()][n_ - st];
  }
  MoveClass colon_rprefix(bool u, std::size_t l) const { return t_.colon_bwd_[u][q_][l]; }

 private:
  const PeriodicTable& t_;
  std::size_t q_;
  std::size_t n_;
};

PeriodicTable::PeriodicTable(PeriodicPattern pattern)
    : pattern_(make_pattern(pattern.period, std::move(pattern.stopped_residues), pattern.file_origin)) {
  const std::size_t p = pattern_.period;
  eps_.assign(p, std::vector<Nimber>(1, 0));
  for (int u = 0; u < 2; ++u) {
    colon_fwd_[u].assign(p, std::vector<MoveClass>(1, MoveClass::loony()));
    colon_bwd_[u].assign(p, std::vector<MoveClass>(1, MoveClass::loony()));
  }
}

void PeriodicTable::extend(std::size_t length) {
  if (length <= length_) return;
  const std::size_t p = period();
  for (std::size_t q = 0; q < p; ++q) {
    eps_[q].resize(length + 1, 0);
    for (int u = 0; u < 2; ++u) {
      colon_fwd_[u][q].resize(length + 1, MoveClass::loony());
      colon_bwd_[u][q].resize(length + 1, MoveClass::loony());
    }
  }
  MexScratch scratch;
  for (std::size_t len = length_ + 1; len <= length; ++len) {
    for (std::size_t q = 0; q < p; ++q) fill(q, len, scratch);
    length_ = len;
  }
}

void PeriodicTable::fill(std::size_t q, std::size_t len, MexScratch& scratch) {
  const std::size_t p = period();
  auto stopped = [&](std::size_t offset) { return pattern_.stopped_residue((q + offset) % p); };
  if (len > 0) eps_[q][len] = epsilon_in(View(*this, q, len), scratch);

  for (int u = 0; u < 2; ++u) {
    const bool underlined = u == 1;
    if (!(underlined && len > 0 && stopped(0))) {
      colon_fwd_[u][q][len] = colon_rule(
          underlined, len, [&] { return eps_[(q + 1) % p][len - 1]; },
          [&] {
            if (!underlined) return colon_fwd_[stopped(0)][(q + 1) % p][len - 1];
            return colon_fwd_[stopped(1)][(q + 2) % p][len - 2];
          });
    }
    if (!(underlined && len > 0 && stopped(len - 1))) {
      colon_bwd_[u][q][len] = colon_rule(
          underlined, len, [&] { return eps_[q][len - 1]; },
          [&] {
            if (!underlined) return colon_bwd_[stopped(len - 1)][q][len - 1];
            return colon_bwd_[stopped(len - 2)][q][len - 2];
          });
    }
  }
}

void PeriodicTable::write_checkpoint(std::ostream& os) const {
  os << "#phase-table: period=" << pattern_.period << " stopped=";
  for (std::size_t i = 0; i < pattern_.stopped_residues.size(); ++i)
    os << (i ? "," : "") << pattern_.stopped_residues[i];
  os << " origin=" << pattern_.file_origin << " length=" << length_ << " values=";
  for (std::size_t q = 0; q < period(); ++q) {
    if (q) os << '/';
    for (std::size_t len = 0; len <= length_; ++len) os << (len ? "," : "") << eps_[q][len];
  }
}

namespace {

std::vector<std::size_t> parse_list(std::string_view text, char sep) {
  std::vector<std::size_t> out;
  while (!text.empty()) {
    const auto cut = text.find(sep);
    const auto item = text.substr(0, cut);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw Error(ErrorKind::IoFailure, "bad number '" + std::string(item) + "' in checkpoint");
    out.push_back(v);
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  return out;
}

}  // namespace

PeriodicTable PeriodicTable::from_checkpoint(const std::string& line) {
  const std::string tag = "#phase-table:";
  if (line.rfind(tag, 0) != 0) throw Error(ErrorKind::IoFailure, "not a phase-table checkpoint line");
  std::istringstream is(line.substr(tag.size()));
  std::string field;
  std::size_t period = 0, origin = 1, length = 0;
  std::vector<std::size_t> stopped;
  std::string values;
  while (is >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::IoFailure, "bad checkpoint field '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string_view val = std::string_view(field).substr(eq + 1);
    if (key == "period") period = parse_list(val, ',').at(0);
    else if (key == "stopped") stopped = parse_list(val, ',');
    else if (key == "origin") origin = parse_list(val, ',').at(0);
    else if (key == "length") length = parse_list(val, ',').at(0);
    else if (key == "values") values = std::string(val);
    else throw Error(ErrorKind::IoFailure, "unknown checkpoint field '" + key + "'");
  }
  PeriodicTable t(make_pattern(period, stopped, origin));
  std::vector<std::vector<Nimber>> eps;
  std::string_view rest(values);
  for (std::size_t q = 0; q < period; ++q) {
    const auto cut = rest.find('/');
    auto list = parse_list(rest.substr(0, cut), ',');
    if (list.size() != length + 1) throw Error(ErrorKind::IoFailure, "checkpoint phase has wrong length");
    eps.emplace_back(list.begin(), list.end());
    rest = cut == std::string_view::npos ? std::string_view{} : rest.substr(cut + 1);
  }
  // Colon classes need no mex; rebuild them tier by tier from the stored values.
  for (std::size_t q = 0; q < period; ++q) {
    t.eps_[q] = eps[q];
    for (int u = 0; u < 2; ++u) {
      t.colon_fwd_[u][q].assign(length + 1, MoveClass::loony());
      t.colon_bwd_[u][q].assign(length + 1, MoveClass::loony());
    }
  }
  for (std::size_t len = 1; len <= length; ++len) {
    for (std::size_t q = 0; q < period; ++q) {
      const std::size_t p = period;
      auto stopped_at = [&](std::size_t offset) { return t.pattern_.stopped_residue((q + offset) % p); };
      for (int u = 0; u < 2; ++u) {
        const bool underlined = u == 1;
        if (!(underlined && stopped_at(0))) {
          t.colon_fwd_[u][q][len] = colon_rule(
              underlined, len, [&] { return t.eps_[(q + 1) % p][len - 1]; },
              [&] {
                if (!underlined) return t.colon_fwd_[stopped_at(0)][(q + 1) % p][len - 1];
                return t.colon_fwd_[stopped_at(1)][(q + 2) % p][len - 2];
              });
        }
        if (!(underlined && stopped_at(len - 1))) {
          t.colon_bwd_[u][q][len] = colon_rule(
              underlined, len, [&] { return t.eps_[q][len - 1]; },
              [&] {
                if (!underlined) return t.colon_bwd_[stopped_at(len - 1)][q][len - 1];
                return t.colon_bwd_[stopped_at(len - 2)][q][len - 2];
              });
        }
      }
    }
  }
  t.length_ = length;
  return t;
}

std::vector<Nimber> epsilon_periodic(const PeriodicPattern& pattern, std::size_t max_length) {
  PeriodicTable t(pattern);
  t.extend(max_length);
  std::vector<Nimber> out(max_length + 1);
  for (std::size_t len = 0; len <= max_length; ++len) out[len] = t.family_value(len);
  return out;
}

// ---------------------------------------------------------------------------
// Periodicity

bool verify_period_window(const PeriodicTable& table, std::size_t preperiod, std::size_t period) {
  if (period == 0) throw Error(ErrorKind::InvalidPattern, "period must be positive");
  const std::size_t end = period_window_end(preperiod, period);
  if (table.length() < end) {
    throw Error(ErrorKind::InsufficientTable, "window reaches length " + std::to_string(end) +
                                                  " but the table stops at " + std::to_string(table.length()));
  }
  for (std::size_t q = 0; q < table.period(); ++q)
    for (std::size_t len = preperiod + period; len <= end; ++len)
      if (table.epsilon(q, len) != table.epsilon(q, len - period)) return false;
  return true;
}

namespace {

// Least n0 with values[l] == values[l + P] for every l >= n0 in range.
template <class At>
std::size_t least_preperiod(std::size_t last, std::size_t period, At&& at) {
  std::size_t n0 = 0;
  for (std::size_t l = last - period + 1; l-- > 0;) {
    if (at(l) != at(l + period)) {
      n0 = l + 1;
      break;
    }
  }
  return n0;
}

}  // namespace

std::optional<PeriodReport> detect_period(std::span<const Nimber> values, const PeriodicPattern& pattern) {
  if (values.empty()) return std::nullopt;
  const std::size_t last = values.size() - 1;
  for (std::size_t P = pattern.period; period_window_end(0, P) <= last; P += pattern.period) {
    const std::size_t n0 = least_preperiod(last, P, [&](std::size_t l) { return values[l]; });
    if (period_window_end(n0, P) <= last) {
      PeriodReport r{pattern, n0, P, false, n0 + P, period_window_end(n0, P)};
      return r;
    }
  }
  return std::nullopt;
}

std::optional<PeriodReport> detect_period(std::span<const Nimber> values, const PeriodicTable& table) {
  const PeriodicPattern& pattern = table.pattern();
  if (values.empty()) return std::nullopt;
  const std::size_t last = std::min(values.size() - 1, table.length());
  std::optional<PeriodReport> first_observed;
  for (std::size_t P = pattern.period; period_window_end(0, P) <= last; P += pattern.period) {
    const std::size_t n0 = least_preperiod(last, P, [&](std::size_t l) { return values[l]; });
    if (period_window_end(n0, P) > last) continue;
    PeriodReport r{pattern, n0, P, false, n0 + P, period_window_end(n0, P)};
    // The window argument needs every start phase, not just the family's.
    std::size_t common = n0;
    for (std::size_t q = 0; q < table.period(); ++q)
      common = std::max(common, least_preperiod(last, P, [&](std::size_t l) { return table.epsilon(q, l); }));
    if (period_window_end(common, P) <= table.length() && verify_period_window(table, common, P)) {
      r.verified = true;
      r.window_begin = common + P;
      r.window_end = period_window_end(common, P);
      return r;
    }
    if (!first_observed) first_observed = r;
  }
  return first_observed;
}

void write_value_dump(std::ostream& os, std::span<const Nimber> values) {
  for (std::size_t len = 1; len < values.size(); ++len) os << len << ',' << values[len] << '\n';
}

std::vector<Nimber> read_value_dump(std::istream& in) {
  std::vector<Nimber> out{0};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::IoFailure, "bad dump line '" + line + "'");
    const auto nums = parse_list(line.substr(0, comma), ',');
    const auto vals = parse_list(line.substr(comma + 1), ',');
    if (nums.size() != 1 || vals.size() != 1 || nums[0] != out.size())
      throw Error(ErrorKind::IoFailure, "dump lengths must run 1, 2, 3, ... (line '" + line + "')");
    out.push_back(static_cast<Nimber>(vals[0]));
  }
  return out;
}

}  // namespace pawns
