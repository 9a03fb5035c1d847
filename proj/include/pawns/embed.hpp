#pragma once

// King-and-pawn chess positions that realize a sum of pawn-game components.
//
// Layout on an h x n board (files 1..n left to right, rows 1..h from White's
// side, h odd):
//   files 1..n-7   components, one empty file between neighbours
//   file  n-6      separator
//   files n-5,n-4  mutual Zugzwang pair around the middle rank
//   file  n-2      room for one extra single unstopped file when the left
//                  region is full
//   files n-1,n    corner locks holding both kings
// A component file has a White pawn one row below the middle rank and a
// Black pawn one row above it; a stopped file adds stopper pawns next to the
// top and bottom edges.

#include <cstddef>
#include <string>
#include <vector>

#include "pawns/words.hpp"

namespace pawns {

enum class Cell : char {
  Empty = '.',
  WhitePawn = 'P',
  BlackPawn = 'p',
  WhiteKing = 'K',
  BlackKing = 'k',
};

class ChessDiagram {
 public:
  ChessDiagram(std::size_t height, std::size_t width);

  std::size_t height() const noexcept { return height_; }
  std::size_t width() const noexcept { return width_; }
  /// 1-based file and row; throws Error(IndexOutOfRange).
  Cell at(std::size_t file, std::size_t row) const;
  void set(std::size_t file, std::size_t row, Cell cell);

  /// Rows top to bottom, one string per row.
  std::vector<std::string> rows() const;

  friend bool operator==(const ChessDiagram&, const ChessDiagram&) = default;

 private:
  std::size_t index(std::size_t file, std::size_t row) const;

  std::size_t height_;
  std::size_t width_;
  std::vector<Cell> cells_;
};

/// Builds the diagram for the given components.
/// Throws Error(DimensionTooSmall) if h is even or below 7, or the components
/// do not fit; Error(StoppedFileNeedsHeight9) if a stopped file is present
/// and h < 9. Heights other than 9 are supported but the frame there is
/// extrapolated; a note is appended to *warnings when it is given.
ChessDiagram embed(const std::vector<Word>& components, std::size_t height, std::size_t width,
                   std::vector<std::string>* warnings = nullptr);

/// Reads the components back out of a diagram produced by embed.
std::vector<Word> extract_components(const ChessDiagram& diagram);

/// Throws Error(InvariantViolation) unless the diagram has exactly one king
/// of each colour and no pawn on the first or last row.
void check_diagram(const ChessDiagram& diagram);

enum class DiagramFormat { Ascii, FenLike };

/// Ascii: rows top to bottom separated by newlines. Fen-like: rows top to
/// bottom joined by '/', runs of empty squares written as decimal counts.
std::string render(const ChessDiagram& diagram, DiagramFormat format);

}  // namespace pawns
