#include "pawns/embed.hpp"

#include "pawns/error.hpp"

namespace pawns {

ChessDiagram::ChessDiagram(std::size_t height, std::size_t width)
    : height_(height), width_(width), cells_(height * width, Cell::Empty) {
  if (height == 0 || width == 0) throw Error(ErrorKind::DimensionTooSmall, "empty board");
}

std::size_t ChessDiagram::index(std::size_t file, std::size_t row) const {
  if (file < 1 || file > width_ || row < 1 || row > height_) {
    throw Error(ErrorKind::IndexOutOfRange, "square " + std::to_string(file) + "," + std::to_string(row));
  }
  return (row - 1) * width_ + (file - 1);
}

Cell ChessDiagram::at(std::size_t file, std::size_t row) const { return cells_[index(file, row)]; }

void ChessDiagram::set(std::size_t file, std::size_t row, Cell cell) { cells_[index(file, row)] = cell; }

std::vector<std::string> ChessDiagram::rows() const {
  std::vector<std::string> out;
  for (std::size_t r = height_; r >= 1; --r) {
    std::string line;
    for (std::size_t f = 1; f <= width_; ++f) line += static_cast<char>(at(f, r));
    out.push_back(std::move(line));
  }
  return out;
}

namespace {

constexpr std::size_t kFrameFiles = 7;  // separator, Zugzwang pair, two empty files, two lock files
constexpr std::size_t kGoldenHeight = 9;

std::size_t white_row(std::size_t h) { return (h - 1) / 2; }
std::size_t black_row(std::size_t h) { return (h + 3) / 2; }

void place_file(ChessDiagram& d, std::size_t file, bool stopped) {
  const std::size_t h = d.height();
  d.set(file, white_row(h), Cell::WhitePawn);
  d.set(file, black_row(h), Cell::BlackPawn);
  if (!stopped) return;
  d.set(file, h - 1, Cell::BlackPawn);
  d.set(file, h - 2, Cell::WhitePawn);
  d.set(file, 3, Cell::BlackPawn);
  d.set(file, 2, Cell::WhitePawn);
}

void place_frame(ChessDiagram& d) {
  const std::size_t h = d.height();
  const std::size_t n = d.width();
  const std::size_t c = (h + 1) / 2;
  d.set(n - 5, c + 2, Cell::BlackPawn);
  d.set(n - 5, c, Cell::BlackPawn);
  d.set(n - 5, c - 1, Cell::WhitePawn);
  d.set(n - 4, c + 1, Cell::BlackPawn);
  d.set(n - 4, c, Cell::WhitePawn);
  d.set(n - 4, c - 2, Cell::WhitePawn);

  d.set(n - 1, h - 1, Cell::BlackPawn);
  d.set(n - 1, h - 2, Cell::WhitePawn);
  d.set(n, h - 1, Cell::WhitePawn);
  d.set(n, h, Cell::BlackKing);

  d.set(n - 1, 2, Cell::WhitePawn);
  d.set(n - 1, 3, Cell::BlackPawn);
  d.set(n, 2, Cell::BlackPawn);
  d.set(n, 1, Cell::WhiteKing);
}

bool is_single_open_file(const Word& w) { return w.size() == 1 && !w.stopped(0); }

}  // namespace

ChessDiagram embed(const std::vector<Word>& components, std::size_t height, std::size_t width,
                   std::vector<std::string>* warnings) {
  if (height % 2 == 0 || height < 7) {
    throw Error(ErrorKind::DimensionTooSmall, "height must be odd and at least 7, got " + std::to_string(height));
  }
  bool any_stopped = false;
  for (const auto& w : components) {
    if (w.size() == 0) throw Error(ErrorKind::MalformedComponent, "empty component");
    for (std::size_t i = 0; i < w.size(); ++i) any_stopped = any_stopped || w.stopped(i);
  }
  if (any_stopped && height < 9) {
    throw Error(ErrorKind::StoppedFileNeedsHeight9, "height " + std::to_string(height) + " with stopped files");
  }
  if (width < kFrameFiles + 1) throw Error(ErrorKind::DimensionTooSmall, "width " + std::to_string(width));

  const std::size_t region = width - kFrameFiles;
  std::size_t used = 0;
  for (const auto& w : components) used += w.size() + (used ? 1 : 0);

  // When everything but a trailing single open file fits, that file goes
  // into the slot between the Zugzwang pair and the locks.
  bool use_slot = false;
  if (used > region) {
    const std::size_t without_last = components.empty() ? 0 : used - components.back().size() - (components.size() > 1);
    if (!is_single_open_file(components.back()) || without_last > region) {
      throw Error(ErrorKind::DimensionTooSmall, std::to_string(used) + " component files and separators need width " +
                                                    std::to_string(used + kFrameFiles) + ", got " +
                                                    std::to_string(width));
    }
    use_slot = true;
  }

  ChessDiagram d(height, width);
  std::size_t file = 1;
  const std::size_t placed = use_slot ? components.size() - 1 : components.size();
  for (std::size_t c = 0; c < placed; ++c) {
    if (c) ++file;
    for (std::size_t i = 0; i < components[c].size(); ++i, ++file) place_file(d, file, components[c].stopped(i));
  }
  if (use_slot) place_file(d, width - 2, false);
  place_frame(d);

  if (warnings && height != kGoldenHeight) {
    warnings->push_back("frame for height " + std::to_string(height) +
                        " is extrapolated from the height-9 layout and has not been checked by play");
  }
  return d;
}

std::vector<Word> extract_components(const ChessDiagram& d) {
  const std::size_t h = d.height();
  const std::size_t n = d.width();
  if (h % 2 == 0 || h < 7 || n < kFrameFiles + 1) {
    throw Error(ErrorKind::DimensionTooSmall, "diagram too small to hold the frame");
  }
  auto component_file = [&](std::size_t f) {
    return d.at(f, white_row(h)) == Cell::WhitePawn && d.at(f, black_row(h)) == Cell::BlackPawn;
  };
  auto stopped_file = [&](std::size_t f) {
    return h >= 9 && d.at(f, h - 1) == Cell::BlackPawn && d.at(f, h - 2) == Cell::WhitePawn &&
           d.at(f, 3) == Cell::BlackPawn && d.at(f, 2) == Cell::WhitePawn;
  };

  std::vector<Word> out;
  WordBuilder current;
  std::size_t run = 0;
  for (std::size_t f = 1; f <= n - kFrameFiles + 1; ++f) {
    if (f <= n - kFrameFiles && component_file(f)) {
      current.push(stopped_file(f));
      ++run;
    } else if (run) {
      out.push_back(std::move(current).build());
      current = WordBuilder{};
      run = 0;
    }
  }
  if (component_file(n - 2)) out.push_back(Word::parse("0"));
  return out;
}

void check_diagram(const ChessDiagram& d) {
  std::size_t white_kings = 0;
  std::size_t black_kings = 0;
  for (std::size_t r = 1; r <= d.height(); ++r) {
    for (std::size_t f = 1; f <= d.width(); ++f) {
      const Cell c = d.at(f, r);
      white_kings += c == Cell::WhiteKing;
      black_kings += c == Cell::BlackKing;
      const bool pawn = c == Cell::WhitePawn || c == Cell::BlackPawn;
      if (pawn && (r == 1 || r == d.height())) {
        throw Error(ErrorKind::InvariantViolation, "pawn on an edge row at file " + std::to_string(f));
      }
    }
  }
  if (white_kings != 1 || black_kings != 1) {
    throw Error(ErrorKind::InvariantViolation, "expected one king per colour, found " + std::to_string(white_kings) +
                                                   " White and " + std::to_string(black_kings) + " Black");
  }
}

std::string render(const ChessDiagram& d, DiagramFormat format) {
  const auto rows = d.rows();
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (format == DiagramFormat::Ascii) {
      out += rows[i];
      out += '\n';
      continue;
    }
    if (i) out += '/';
    std::size_t empties = 0;
    for (char ch : rows[i]) {
      if (ch == '.') {
        ++empties;
        continue;
      }
      if (empties) out += std::to_string(empties);
      empties = 0;
      out += ch;
    }
    if (empties) out += std::to_string(empties);
  }
  return out;
}

}  // namespace pawns
