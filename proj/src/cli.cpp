#include "pawns/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "pawns/embed.hpp"
#include "pawns/experiments.hpp"
#include "pawns/grundy.hpp"
#include "pawns/oracle.hpp"
#include "pawns/reference_tables.hpp"

namespace pawns::cli {

unsigned default_workers() {
  if (const char* env = std::getenv("PAWNS_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

bool is_usage_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidWord:
    case ErrorKind::InvalidPattern:
    case ErrorKind::MalformedComponent:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::DimensionTooSmall:
    case ErrorKind::StoppedFileNeedsHeight9:
      return true;
    default:
      return false;
  }
}

// Output sink honouring "-" for the default stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw Error(ErrorKind::IoFailure, "cannot open '" + path + "' for writing");
    stream_ = file_.get();
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

ExportFormat parse_format(const std::string& name) {
  return name == "jsonl" ? ExportFormat::JsonLines : ExportFormat::Csv;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

struct Options {
  unsigned workers = 1;
  std::string output = "-";
  std::string format = "csv";

  // eval
  std::string word;
  std::string batch;
  bool moves = false;

  // scan
  std::size_t length = 0;
  bool distribution = false;
  bool first = false;
  Nimber max_k = 12;

  // periodic
  std::size_t period = 0;
  std::string stopped;
  std::size_t origin = 1;
  std::size_t max_length = 0;
  bool powers = false;
  bool detect = false;
  std::string checkpoint;
  std::string resume;

  // oracle
  Nimber max_heap = 3;
  bool check_loony = false;

  // tables
  std::string which;
  std::size_t table_limit = 0;

  // embed
  std::string words;
  std::size_t height = 9;
  std::size_t width = 0;
  std::string diagram_format = "ascii";
};

int cmd_eval(const Options& o, std::ostream& out) {
  std::vector<Word> words;
  if (!o.batch.empty()) {
    if (o.batch == "-") {
      words = read_word_batch(std::cin);
    } else {
      std::ifstream in(o.batch);
      if (!in) throw Error(ErrorKind::IoFailure, "cannot open '" + o.batch + "'");
      words = read_word_batch(in);
    }
  } else {
    words.push_back(Word::parse(o.word));
  }
  GrundyTable table;
  for (const auto& w : words) {
    out << w.str() << " value " << table.epsilon(w) << '\n';
    if (!o.moves) continue;
    const auto classes = classify_moves(w);
    for (std::size_t k = 0; k < classes.size(); ++k) {
      out << "  file " << k + 1 << ' '
          << (classes[k].is_loony() ? std::string("loony") : "value " + std::to_string(classes[k].value())) << '\n';
    }
  }
  return kOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  if (o.distribution == o.first) throw Error(ErrorKind::InvalidWord, "choose one of --distribution or --first-occurrence");
  if (o.length == 0) throw Error(ErrorKind::InvalidWord, "--length must be positive");
  if (o.distribution) {
    export_report(out, value_distribution(o.length, o.workers), parse_format(o.format));
  } else {
    export_report(out, first_occurrence(o.max_k, o.length, o.workers), parse_format(o.format));
  }
  return kOk;
}

PeriodicTable load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoFailure, "cannot open checkpoint '" + path + "'");
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("#phase-table:", 0) == 0) return PeriodicTable::from_checkpoint(line);
  throw Error(ErrorKind::IoFailure, "no phase-table line in '" + path + "'");
}

int cmd_periodic(const Options& o, std::ostream& out, std::ostream& err) {
  std::optional<PeriodicTable> table;
  if (!o.resume.empty()) {
    table.emplace(load_checkpoint(o.resume));
    err << "resumed " << table->pattern().str() << " at length " << table->length() << '\n';
  } else {
    if (o.period == 0) throw Error(ErrorKind::InvalidPattern, "--period is required unless resuming");
    std::vector<std::size_t> residues;
    for (const auto& r : split(o.stopped, ',')) {
      if (r.empty()) continue;
      try {
        residues.push_back(std::stoul(r));
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidPattern, "bad residue '" + r + "'");
      }
    }
    table.emplace(make_pattern(o.period, residues, o.origin));
  }
  const std::size_t max_length = std::max(o.max_length, table->length());
  const auto result = periodic_scan(*table, max_length, o.detect);

  if (!o.checkpoint.empty()) {
    std::ofstream ck(o.checkpoint);
    table->write_checkpoint(ck);
    ck << '\n';
    if (!ck) throw Error(ErrorKind::IoFailure, "cannot write checkpoint '" + o.checkpoint + "'");
  }

  if (o.powers || o.detect) {
    out << "# pawns " << tool_version() << " periodic pattern=" << result.pattern.str()
        << " max-length=" << max_length << '\n';
    if (o.powers) {
      out << "alpha,length\n";
      for (const auto& m : result.powers) out << m.alpha << ',' << m.length << '\n';
    }
    if (o.detect) {
      if (result.period) {
        out << "preperiod " << result.period->preperiod << " period " << result.period->period << " verified "
            << (result.period->verified ? "yes" : "no") << " window " << result.period->window_begin << ".."
            << result.period->window_end << '\n';
      } else {
        out << "no period found through length " << max_length << '\n';
      }
    }
    return kOk;
  }
  export_report(out, result, parse_format(o.format));
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Word w = Word::parse(o.word);
  if (w.size() == 0) throw Error(ErrorKind::InvalidWord, "--word must be non-empty");
  const Nimber eps = oracle_epsilon(w, o.max_heap);
  const Nimber engine = epsilon(w);
  out << w.str() << " oracle " << eps << " engine " << engine << '\n';
  int status = eps == engine ? kOk : kFailure;
  if (o.check_loony) {
    const auto classes = classify_moves(w);
    for (std::size_t k = 0; k < w.size(); ++k) {
      const bool oracle_loony = oracle_is_loony(w, k, o.max_heap);
      const bool agree = oracle_loony == classes[k].is_loony();
      out << "  file " << k + 1 << " oracle " << (oracle_loony ? "loony" : "non-loony") << " engine "
          << classes[k].str() << (agree ? "" : "  MISMATCH") << '\n';
      if (!agree) status = kFailure;
    }
  }
  return status;
}

int report(std::ostream& out, bool pass, const std::string& name) {
  out << (pass ? "PASS " : "FAIL ") << name << '\n';
  return pass ? kOk : kFailure;
}

int table_open(const Options& o, std::ostream& out) {
  const std::size_t limit = o.table_limit ? o.table_limit : 2000;
  const auto values = epsilon_periodic(make_pattern(1, {}), limit);
  std::size_t mismatches = 0;
  for (std::size_t m = 0; m <= limit; ++m) {
    bool zero = false;
    for (auto r : reference::kPlainZeroResidues) zero = zero || m % reference::kPlainPeriod == r;
    const bool ok = values[m] == epsilon_plain(m) && (values[m] == 0) == zero;
    if (!ok) {
      out << "length " << m << ": computed " << values[m] << " closed form " << epsilon_plain(m) << '\n';
      ++mismatches;
    }
  }
  return report(out, mismatches == 0, "open component closed form through length " + std::to_string(limit));
}

int table_first(const Options& o, std::ostream& out) {
  const Nimber max_k = o.table_limit ? static_cast<Nimber>(o.table_limit) : 12;
  if (max_k > reference::kFirstOccurrence.size()) throw Error(ErrorKind::IndexOutOfRange, "at most 16 values are tabulated");
  const auto table = first_occurrence(max_k, reference::kFirstOccurrence[max_k - 1], o.workers);
  bool pass = true;
  out << "k,expected,computed,witness\n";
  for (Nimber k = 1; k <= max_k; ++k) {
    const auto it = table.entries.find(k);
    const std::size_t expected = reference::kFirstOccurrence[k - 1];
    out << k << ',' << expected << ',';
    if (it == table.entries.end()) {
      out << "none,\n";
      pass = false;
      continue;
    }
    out << it->second.length << ',' << it->second.witness.str() << '\n';
    pass = pass && it->second.length == expected;
  }
  return report(out, pass, "first occurrences for k = 1.." + std::to_string(max_k));
}

int table_distribution(const Options& o, std::ostream& out) {
  const std::size_t m = o.table_limit ? o.table_limit : 35;
  const reference::DistributionReference* ref = nullptr;
  for (const auto& row : reference::kDistribution)
    if (row.length == m) ref = &row;
  if (!ref) throw Error(ErrorKind::IndexOutOfRange, "no reference row for length " + std::to_string(m));
  const auto row = value_distribution(m, o.workers);
  bool pass = true;
  out << "value,count,expected,computed\n";
  for (Nimber v = 0; v < ref->percent.size(); ++v) {
    const std::string computed = format_percent_2sig(row.proportion(v));
    const bool ok = computed == ref->percent[v];
    pass = pass && ok;
    out << v << ',' << (v < row.counts.size() ? row.counts[v] : 0) << ',' << ref->percent[v] << ',' << computed
        << (ok ? "" : ",MISMATCH") << '\n';
  }
  return report(out, pass, "value distribution at length " + std::to_string(m));
}

int table_p6(const Options& o, std::ostream& out) {
  const std::size_t limit = o.table_limit ? o.table_limit : 3545;
  const auto pattern = make_pattern(reference::kSixthFilePeriod, {reference::kSixthFileResidue});
  const auto result = periodic_scan(pattern, limit, false);
  bool pass = true;
  out << "alpha,expected,computed\n";
  for (const auto& ms : reference::kSixthFileMilestones) {
    if (ms.length > limit) break;
    std::size_t got = 0;
    for (const auto& p : result.powers)
      if (p.alpha == ms.alpha) got = p.length;
    const bool ok = got == ms.length;
    pass = pass && ok;
    out << ms.alpha << ',' << ms.length << ',' << (got ? std::to_string(got) : "none") << (ok ? "" : ",MISMATCH")
        << '\n';
  }
  return report(out, pass, "every sixth file stopped, power-of-two milestones through length " +
                               std::to_string(limit));
}

int cmd_tables(const Options& o, std::ostream& out) {
  if (o.which == "open" || o.which == "thm2") return table_open(o, out);
  if (o.which == "first-occurrence") return table_first(o, out);
  if (o.which == "distribution35") return table_distribution(o, out);
  if (o.which == "p6") return table_p6(o, out);
  throw Error(ErrorKind::InvalidWord, "unknown table '" + o.which + "'");
}

int cmd_embed(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<Word> words;
  for (const auto& w : split(o.words, ',')) words.push_back(Word::parse(w));
  std::size_t width = o.width;
  if (width == 0) {
    for (const auto& w : words) width += w.size() + (width ? 1 : 0);
    width += 7;
  }
  std::vector<std::string> warnings;
  const auto diagram = embed(words, o.height, width, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  const auto format = o.diagram_format == "fen" ? DiagramFormat::FenLike : DiagramFormat::Ascii;
  out << render(diagram, format);
  if (format == DiagramFormat::FenLike) out << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Values of the pawns game with stopped files", "pawns"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);
  Options o;
  o.workers = default_workers();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Output path ('-' for standard output)");
    sub->add_option("-j,--workers", o.workers, "Worker threads (default: PAWNS_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
  };

  auto* eval = app.add_subcommand("eval", "Value of a word, optionally with the class of each move");
  eval->add_option("word", o.word, "Word of '0' (open) and '1' (stopped) files");
  eval->add_option("--batch", o.batch, "File with one word per line ('-' for standard input)");
  eval->add_flag("--moves", o.moves, "Print the class of every move");
  add_common(eval);

  auto* scan = app.add_subcommand("scan", "Exhaustive scans over all words of a length");
  scan->add_option("--length", o.length, "Word length (maximum length for --first-occurrence)")->required();
  scan->add_flag("--distribution", o.distribution, "Count words by value");
  scan->add_flag("--first-occurrence", o.first, "Least length attaining each value");
  scan->add_option("--max-k", o.max_k, "Stop once values 1..K are found")->check(CLI::PositiveNumber);
  scan->add_option("--format", o.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
  add_common(scan);

  auto* periodic = app.add_subcommand("periodic", "Values of a periodic family of words");
  periodic->add_option("--period", o.period, "Pattern period")->check(CLI::PositiveNumber);
  periodic->add_option("--stopped", o.stopped, "Comma-separated stopped residues of file numbers");
  periodic->add_option("--origin", o.origin, "File number of the first file")->check(CLI::PositiveNumber);
  periodic->add_option("--max-length", o.max_length, "Longest family member")->check(CLI::PositiveNumber);
  periodic->add_flag("--powers-of-two", o.powers, "First length reaching each power of two");
  periodic->add_flag("--detect-period", o.detect, "Search for and verify a period");
  periodic->add_option("--checkpoint", o.checkpoint, "Write the phase table here when done");
  periodic->add_option("--resume", o.resume, "Continue from a checkpoint file");
  periodic->add_option("--format", o.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
  add_common(periodic);

  auto* oracle = app.add_subcommand("oracle", "Solve [w] + *j by brute force");
  oracle->add_option("--word", o.word, "Word (at most 12 files)")->required();
  oracle->add_option("--max-heap", o.max_heap, "Largest heap tried");
  oracle->add_flag("--check-loony", o.check_loony, "Compare every opening move with the engine");
  add_common(oracle);

  auto* tables = app.add_subcommand("tables", "Recompute a published table and compare");
  tables->add_option("--which", o.which, "open, first-occurrence, distribution35 or p6")
      ->required()
      ->check(CLI::IsMember({"open", "thm2", "first-occurrence", "distribution35", "p6"}));
  tables->add_option("--limit", o.table_limit,
                     "open: max length; first-occurrence: max k; distribution35: row length; p6: max length");
  add_common(tables);

  auto* emb = app.add_subcommand("embed", "Chess diagram realizing a sum of components");
  emb->add_option("--words", o.words, "Comma-separated component words")->required();
  emb->add_option("--height", o.height, "Board height (odd)");
  emb->add_option("--width", o.width, "Board width (default: smallest that fits)");
  emb->add_option("--format", o.diagram_format, "ascii or fen")->check(CLI::IsMember({"ascii", "fen"}));
  add_common(emb);

  std::vector<const char*> argv{"pawns"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (eval->parsed() && o.word.empty() == o.batch.empty()) {
      err << "eval: give either a word or --batch\n";
      return kUsage;
    }
    Output sink(o.output, out);
    if (eval->parsed()) return cmd_eval(o, *sink);
    if (scan->parsed()) return cmd_scan(o, *sink);
    if (periodic->parsed()) return cmd_periodic(o, *sink, err);
    if (oracle->parsed()) return cmd_oracle(o, *sink);
    if (tables->parsed()) return cmd_tables(o, *sink);
    if (emb->parsed()) return cmd_embed(o, *sink, err);
  } catch (const Error& e) {
    err << "pawns: " << e.what() << '\n';
    return is_usage_error(e.kind()) ? kUsage : kFailure;
  } catch (const std::exception& e) {
    err << "pawns: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace pawns::cli
