#include "pawns/words.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <sstream>

namespace pawns {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidWord: return "invalid-word";
    case ErrorKind::InvalidPattern: return "invalid-pattern";
    case ErrorKind::MalformedComponent: return "malformed-component";
    case ErrorKind::InvariantViolation: return "invariant-violation";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::InsufficientTable: return "insufficient-table";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::NonUniqueHeap: return "non-unique-P-heap";
    case ErrorKind::DimensionTooSmall: return "dimension-too-small";
    case ErrorKind::StoppedFileNeedsHeight9: return "stopped-file-needs-height-9";
    case ErrorKind::IoFailure: return "io-failure";
  }
  return "unknown";
}

std::optional<std::size_t> validate(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') return i;
    if (text[i] == '1' && i + 1 < text.size() && text[i + 1] == '1') return i;
  }
  return std::nullopt;
}

WordBuilder& WordBuilder::push(bool stopped) {
  const std::size_t i = word_.size_;
  if (i % 64 == 0) word_.limbs_.push_back(0);
  if (stopped) {
    if (i > 0 && word_.stopped(i - 1)) adjacent_ = true;
    word_.limbs_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  ++word_.size_;
  return *this;
}

Word WordBuilder::build() && {
  if (adjacent_) throw Error(ErrorKind::InvalidWord, "adjacent stopped files in " + word_.str());
  return std::move(word_);
}

Word Word::parse(std::string_view text) {
  if (auto bad = validate(text)) {
    throw Error(ErrorKind::InvalidWord,
                "'" + std::string(text) + "' violates the word rules at index " + std::to_string(*bad));
  }
  WordBuilder b;
  b.reserve(text.size());
  for (char c : text) b.push(c == '1');
  return std::move(b).build();
}

Word Word::zeros(std::size_t length) {
  Word w;
  w.size_ = length;
  w.limbs_.assign((length + 63) / 64, 0);
  return w;
}

Word Word::subword(std::size_t begin, std::size_t end) const {
  if (begin > end || end > size_) {
    throw Error(ErrorKind::IndexOutOfRange, "subword [" + std::to_string(begin) + "," +
                                                std::to_string(end) + ") of length " +
                                                std::to_string(size_));
  }
  WordBuilder b;
  b.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) b.push(stopped(i));
  return std::move(b).build();
}

Word Word::reversed() const {
  WordBuilder b;
  b.reserve(size_);
  for (std::size_t i = size_; i-- > 0;) b.push(stopped(i));
  return std::move(b).build();
}

std::string Word::str() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (stopped(i)) s[i] = '1';
  return s;
}

std::size_t Word::hash() const noexcept {
  std::size_t h = std::hash<std::size_t>{}(size_);
  for (auto limb : limbs_) h ^= std::hash<std::uint64_t>{}(limb) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.stopped(i) != b.stopped(i)) return a.stopped(i) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.size() <=> b.size();
}

Word reverse(const Word& word) { return word.reversed(); }

std::ostream& operator<<(std::ostream& os, const Word& word) { return os << word.str(); }

namespace {

constexpr std::size_t kMaxCountedLength = 90;

constexpr std::array<std::uint64_t, kMaxCountedLength + 1> make_counts() {
  std::array<std::uint64_t, kMaxCountedLength + 1> n{};
  n[0] = 1;
  n[1] = 2;
  for (std::size_t i = 2; i < n.size(); ++i) n[i] = n[i - 1] + n[i - 2];
  return n;
}

constexpr auto kCounts = make_counts();

}  // namespace

std::uint64_t word_count(std::size_t m) {
  if (m > kMaxCountedLength) throw Error(ErrorKind::ResourceLimit, "word count overflows at length " + std::to_string(m));
  return kCounts[m];
}

std::uint64_t word_rank(const Word& word) {
  const std::size_t m = word.size();
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (word.stopped(i)) r += word_count(m - 1 - i);
  return r;
}

Word word_unrank(std::uint64_t rank, std::size_t length) {
  if (rank >= word_count(length)) {
    throw Error(ErrorKind::IndexOutOfRange, "rank " + std::to_string(rank) + " at length " + std::to_string(length));
  }
  WordBuilder b;
  b.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const std::uint64_t below = kCounts[length - 1 - i];
    const bool bit = rank >= below;
    if (bit) rank -= below;
    b.push(bit);
  }
  return std::move(b).build();
}

std::pair<std::uint64_t, std::uint64_t> prefix_range(const Word& prefix, std::size_t m) {
  if (prefix.size() > m) return {0, 0};
  const std::size_t rest = m - prefix.size();
  std::uint64_t lo = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (prefix.stopped(i)) lo += word_count(m - 1 - i);
  // A prefix ending in a stopped flag forces the next flag to 0.
  const bool forced = !prefix.empty() && prefix.stopped(prefix.size() - 1) && rest > 0;
  const std::uint64_t span = forced ? word_count(rest - 1) : word_count(rest);
  return {lo, lo + span};
}

void for_each_word(std::size_t m, std::uint64_t lo, std::uint64_t hi,
                   const std::function<bool(const Word&)>& fn) {
  hi = std::min(hi, word_count(m));
  for (std::uint64_t r = lo; r < hi; ++r)
    if (!fn(word_unrank(r, m))) return;
}

std::vector<Word> enumerate_words(std::size_t m) {
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(word_count(m)));
  for_each_word(m, 0, word_count(m), [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::vector<Word> read_word_batch(std::istream& in) {
  std::vector<Word> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(Word::parse(std::string_view(line).substr(first, last - first + 1)));
  }
  return out;
}

bool PeriodicPattern::stopped_residue(std::size_t residue) const {
  return std::binary_search(stopped_residues.begin(), stopped_residues.end(), residue);
}

std::string PeriodicPattern::str() const {
  std::ostringstream os;
  os << "p=" << period << " stopped={";
  for (std::size_t i = 0; i < stopped_residues.size(); ++i) os << (i ? "," : "") << stopped_residues[i];
  os << "} origin=" << file_origin;
  return os.str();
}

PeriodicPattern make_pattern(std::size_t period, std::vector<std::size_t> residues, std::size_t file_origin) {
  if (period == 0) throw Error(ErrorKind::InvalidPattern, "period must be positive");
  if (file_origin == 0) throw Error(ErrorKind::InvalidPattern, "file origin is 1-based");
  for (auto& r : residues) r %= period;
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  PeriodicPattern p{period, std::move(residues), file_origin};
  for (auto r : p.stopped_residues) {
    if (p.stopped_residue((r + 1) % period)) {
      throw Error(ErrorKind::InvalidPattern, "stopped residues " + std::to_string(r) + " and " +
                                                 std::to_string((r + 1) % period) + " are adjacent (" +
                                                 p.str() + ")");
    }
  }
  return p;
}

Word word_from_pattern(const PeriodicPattern& pattern, std::size_t length) {
  // Re-run the checks so hand-built patterns are rejected too.
  const PeriodicPattern p = make_pattern(pattern.period, pattern.stopped_residues, pattern.file_origin);
  WordBuilder b;
  b.reserve(length);
  for (std::size_t j = 0; j < length; ++j) b.push(p.file_stopped(p.file_origin + j));
  return std::move(b).build();
}

}  // namespace pawns
