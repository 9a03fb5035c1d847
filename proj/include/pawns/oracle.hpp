#pragma once

// Brute-force play of the raw 3-row pawns game, used as ground truth for the
// engine. Nothing here knows about components, colons or loony moves.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pawns/words.hpp"

namespace pawns {

/// First moves the row-1 (White) pawns upward; Second moves the row-3 pawns down.
enum class Side : std::uint8_t { First, Second };

constexpr Side other(Side s) { return s == Side::First ? Side::Second : Side::First; }

enum class Piece : std::uint8_t { None = 0, FirstPawn = 1, SecondPawn = 2 };

/// 3 x width board. Files are 1-based, rows 1..3 from First's home row.
class BoardPosition {
 public:
  static constexpr std::size_t kMaxWidth = 12;

  BoardPosition(std::size_t width, std::vector<bool> stopped, Side to_move = Side::First);

  std::size_t width() const noexcept { return width_; }
  bool stopped(std::size_t file) const { return stopped_.at(file - 1); }
  Piece at(std::size_t file, int row) const;
  void set(std::size_t file, int row, Piece piece);
  Side to_move() const noexcept { return to_move_; }
  void set_to_move(Side s) noexcept { to_move_ = s; }
  std::size_t count(Piece piece) const;

  /// Five bits per file; the side to move is not included.
  std::uint64_t squares() const noexcept { return squares_; }
  /// Rows top to bottom, 'P' First, 'p' Second, '.' empty.
  std::string str() const;

  friend bool operator==(const BoardPosition&, const BoardPosition&) = default;

 private:
  std::size_t width_;
  std::vector<bool> stopped_;
  std::uint64_t squares_ = 0;
  Side to_move_;
};

struct PawnMove {
  std::size_t file = 0;  // origin file
  int from_row = 0;
  int to_row = 0;
  std::size_t to_file = 0;
  bool capture = false;

  /// "file,from-row,to-row" with ",x<to-file>" appended for captures.
  std::string str() const;
  friend bool operator==(const PawnMove&, const PawnMove&) = default;
};

struct SumPosition {
  BoardPosition board;
  Nimber heap = 0;
  /// Set once a pawn has reached its far row on an unstopped file.
  std::optional<Side> terminal_winner;
};

enum class Outcome { SideToMoveWins, SideToMoveLoses };

/// Components left to right, one empty file between neighbours; every file
/// of a component starts with a First pawn on row 1 and a Second pawn on row 3.
BoardPosition initial_position(std::span<const Word> components);

/// Every one-square advance to an empty square and every diagonal capture
/// for the side to move. Moves onto the far row of a stopped file are
/// included; the pawn then sits there inert.
std::vector<PawnMove> legal_moves(const BoardPosition& pos);

/// Plays the move and hands the turn over. Sets terminal_winner when the
/// move reaches the far row on an unstopped file.
SumPosition apply(const SumPosition& pos, const PawnMove& move);

/// Either a pawn move or a reduction of the Nim-heap.
struct SumMove {
  std::optional<PawnMove> pawn;
  Nimber heap_to = 0;
  std::string str() const;
};

/// Exact memoized solver. One solver per (board family, stopped set); entries
/// are keyed by the full square occupancy, side to move and heap.
class Solver {
 public:
  explicit Solver(std::size_t max_entries = std::size_t{1} << 24) : max_entries_(max_entries) {}

  /// Throws Error(ResourceLimit) if the table would exceed max_entries.
  Outcome outcome(const SumPosition& pos);
  /// Best play from pos until the game ends: a winning move whenever one
  /// exists, otherwise the first legal move.
  std::vector<SumMove> principal_variation(const SumPosition& pos);
  std::size_t entries() const noexcept { return memo_.size(); }

 private:
  struct Key {
    std::uint64_t squares;
    std::uint32_t heap;
    std::uint8_t side;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  bool wins(const BoardPosition& board, Nimber heap);
  std::optional<SumMove> winning_move(const SumPosition& pos);

  std::size_t max_entries_;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

Outcome outcome(const SumPosition& pos);

/// The unique heap size j <= max_heap for which [w] + *j is lost by the side
/// to move. Throws Error(NonUniqueHeap) if there is no such j or more than one.
Nimber oracle_epsilon(const Word& w, Nimber max_heap = 3);

/// True iff, for every heap j <= max_heap, First's opening advance on file k
/// (0-based) of [w] + *j leaves a position the opponent wins. This is a
/// necessary condition for a loony move, tested over finitely many contexts.
bool oracle_is_loony(const Word& w, std::size_t k, Nimber max_heap = 3);

}  // namespace pawns
