#include "pawns/oracle.hpp"

namespace pawns {

namespace {

// Each file is one base-3 digit per row (rows 1..3 weigh 1, 3, 9) in 5 bits.
constexpr std::uint64_t kFileMask = 31;
constexpr unsigned kRowWeight[4] = {0, 1, 3, 9};

std::size_t file_shift(std::size_t file) { return 5 * (file - 1); }

int forward(Side s) { return s == Side::First ? 1 : -1; }
int far_row(Side s) { return s == Side::First ? 3 : 1; }
Piece pawn_of(Side s) { return s == Side::First ? Piece::FirstPawn : Piece::SecondPawn; }

bool is_touchdown(const BoardPosition& board, Side mover, const PawnMove& m) {
  return m.to_row == far_row(mover) && !board.stopped(m.to_file);
}

}  // namespace

BoardPosition::BoardPosition(std::size_t width, std::vector<bool> stopped, Side to_move)
    : width_(width), stopped_(std::move(stopped)), to_move_(to_move) {
  if (width_ > kMaxWidth) {
    throw Error(ErrorKind::ResourceLimit, "oracle boards are limited to " + std::to_string(kMaxWidth) + " files");
  }
  if (stopped_.size() != width_) throw Error(ErrorKind::InvalidWord, "stopped flags must match the board width");
}

Piece BoardPosition::at(std::size_t file, int row) const {
  const auto code = static_cast<unsigned>((squares_ >> file_shift(file)) & kFileMask);
  return static_cast<Piece>(code / kRowWeight[row] % 3);
}

void BoardPosition::set(std::size_t file, int row, Piece piece) {
  if (file < 1 || file > width_ || row < 1 || row > 3) {
    throw Error(ErrorKind::IndexOutOfRange, "square " + std::to_string(file) + "," + std::to_string(row));
  }
  const auto shift = file_shift(file);
  auto code = static_cast<unsigned>((squares_ >> shift) & kFileMask);
  code -= (code / kRowWeight[row] % 3) * kRowWeight[row];
  code += static_cast<unsigned>(piece) * kRowWeight[row];
  squares_ = (squares_ & ~(kFileMask << shift)) | (std::uint64_t{code} << shift);
}

std::size_t BoardPosition::count(Piece piece) const {
  std::size_t n = 0;
  for (std::size_t f = 1; f <= width_; ++f)
    for (int r = 1; r <= 3; ++r) n += at(f, r) == piece;
  return n;
}

std::string BoardPosition::str() const {
  std::string out;
  for (int r = 3; r >= 1; --r) {
    for (std::size_t f = 1; f <= width_; ++f) {
      const Piece p = at(f, r);
      out += p == Piece::FirstPawn ? 'P' : p == Piece::SecondPawn ? 'p' : '.';
    }
    out += '\n';
  }
  return out;
}

std::string PawnMove::str() const {
  std::string s = std::to_string(file) + "," + std::to_string(from_row) + "," + std::to_string(to_row);
  if (capture) s += ",x" + std::to_string(to_file);
  return s;
}

std::string SumMove::str() const { return pawn ? pawn->str() : "heap," + std::to_string(heap_to); }

BoardPosition initial_position(std::span<const Word> components) {
  std::size_t width = 0;
  for (std::size_t i = 0; i < components.size(); ++i) width += components[i].size() + (i ? 1 : 0);
  std::vector<bool> stopped(width, false);
  std::vector<std::size_t> files;
  std::size_t file = 1;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) ++file;  // separator
    for (std::size_t j = 0; j < components[i].size(); ++j, ++file) {
      stopped[file - 1] = components[i].stopped(j);
      files.push_back(file);
    }
  }
  BoardPosition pos(width, std::move(stopped));
  for (auto f : files) {
    pos.set(f, 1, Piece::FirstPawn);
    pos.set(f, 3, Piece::SecondPawn);
  }
  return pos;
}

std::vector<PawnMove> legal_moves(const BoardPosition& pos) {
  std::vector<PawnMove> moves;
  const Side side = pos.to_move();
  const Piece own = pawn_of(side);
  const Piece enemy = pawn_of(other(side));
  const int dir = forward(side);
  for (std::size_t f = 1; f <= pos.width(); ++f) {
    for (int r = 1; r <= 3; ++r) {
      if (pos.at(f, r) != own) continue;
      const int nr = r + dir;
      if (nr < 1 || nr > 3) continue;
      if (pos.at(f, nr) == Piece::None) moves.push_back({f, r, nr, f, false});
      if (f > 1 && pos.at(f - 1, nr) == enemy) moves.push_back({f, r, nr, f - 1, true});
      if (f < pos.width() && pos.at(f + 1, nr) == enemy) moves.push_back({f, r, nr, f + 1, true});
    }
  }
  return moves;
}

SumPosition apply(const SumPosition& pos, const PawnMove& move) {
  SumPosition next = pos;
  const Side mover = pos.board.to_move();
  next.board.set(move.file, move.from_row, Piece::None);
  next.board.set(move.to_file, move.to_row, pawn_of(mover));
  next.board.set_to_move(other(mover));
  if (is_touchdown(pos.board, mover, move)) next.terminal_winner = mover;
  return next;
}

std::size_t Solver::KeyHash::operator()(const Key& k) const noexcept {
  std::uint64_t h = k.squares * 0x9e3779b97f4a7c15ULL;
  h ^= (std::uint64_t{k.heap} << 1 | k.side) + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h ^ (h >> 29));
}

bool Solver::wins(const BoardPosition& board, Nimber heap) {
  const Key key{board.squares(), heap, static_cast<std::uint8_t>(board.to_move())};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const Side mover = board.to_move();
  const auto moves = legal_moves(board);
  bool result = false;
  for (const auto& m : moves) {
    if (is_touchdown(board, mover, m)) {
      result = true;
      break;
    }
  }
  if (!result) {
    for (const auto& m : moves) {
      BoardPosition child = board;
      child.set(m.file, m.from_row, Piece::None);
      child.set(m.to_file, m.to_row, pawn_of(mover));
      child.set_to_move(other(mover));
      if (!wins(child, heap)) {
        result = true;
        break;
      }
    }
  }
  if (!result) {
    BoardPosition same = board;
    same.set_to_move(other(mover));
    for (Nimber h = 0; h < heap && !result; ++h) result = !wins(same, h);
  }

  if (memo_.size() >= max_entries_) {
    throw Error(ErrorKind::ResourceLimit, "transposition table exceeded " + std::to_string(max_entries_) + " entries");
  }
  memo_.emplace(key, result);
  return result;
}

Outcome Solver::outcome(const SumPosition& pos) {
  if (pos.terminal_winner) {
    return *pos.terminal_winner == pos.board.to_move() ? Outcome::SideToMoveWins : Outcome::SideToMoveLoses;
  }
  return wins(pos.board, pos.heap) ? Outcome::SideToMoveWins : Outcome::SideToMoveLoses;
}

std::optional<SumMove> Solver::winning_move(const SumPosition& pos) {
  for (const auto& m : legal_moves(pos.board)) {
    const SumPosition next = apply(pos, m);
    if (next.terminal_winner || outcome(next) == Outcome::SideToMoveLoses) return SumMove{m, pos.heap};
  }
  for (Nimber h = 0; h < pos.heap; ++h) {
    SumPosition next = pos;
    next.heap = h;
    next.board.set_to_move(other(pos.board.to_move()));
    if (outcome(next) == Outcome::SideToMoveLoses) return SumMove{std::nullopt, h};
  }
  return std::nullopt;
}

std::vector<SumMove> Solver::principal_variation(const SumPosition& start) {
  std::vector<SumMove> line;
  SumPosition pos = start;
  while (!pos.terminal_winner) {
    auto move = winning_move(pos);
    if (!move) {
      const auto moves = legal_moves(pos.board);
      if (!moves.empty())
        move = SumMove{moves.front(), pos.heap};
      else if (pos.heap > 0)
        move = SumMove{std::nullopt, 0};
      else
        break;
    }
    line.push_back(*move);
    if (move->pawn) {
      pos = apply(pos, *move->pawn);
    } else {
      pos.heap = move->heap_to;
      pos.board.set_to_move(other(pos.board.to_move()));
    }
  }
  return line;
}

Outcome outcome(const SumPosition& pos) {
  Solver solver;
  return solver.outcome(pos);
}

Nimber oracle_epsilon(const Word& w, Nimber max_heap) {
  Solver solver;
  const BoardPosition board = initial_position(std::span<const Word>(&w, 1));
  std::vector<Nimber> losing;
  for (Nimber j = 0; j <= max_heap; ++j)
    if (solver.outcome({board, j, std::nullopt}) == Outcome::SideToMoveLoses) losing.push_back(j);
  if (losing.size() != 1) {
    throw Error(ErrorKind::NonUniqueHeap, "[" + w.str() + "] + *j is lost for " + std::to_string(losing.size()) +
                                              " heaps j <= " + std::to_string(max_heap));
  }
  return losing.front();
}

bool oracle_is_loony(const Word& w, std::size_t k, Nimber max_heap) {
  if (k >= w.size()) throw Error(ErrorKind::IndexOutOfRange, "file " + std::to_string(k) + " of '" + w.str() + "'");
  Solver solver;
  const BoardPosition board = initial_position(std::span<const Word>(&w, 1));
  const PawnMove opening{k + 1, 1, 2, k + 1, false};
  for (Nimber j = 0; j <= max_heap; ++j) {
    const SumPosition after = apply({board, j, std::nullopt}, opening);
    if (solver.outcome(after) == Outcome::SideToMoveLoses) return false;
  }
  return true;
}

}  // namespace pawns
