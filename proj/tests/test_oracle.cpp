#include <doctest.h>

#include <algorithm>

#include "naive.hpp"
#include "pawns/grundy.hpp"
#include "pawns/oracle.hpp"

using namespace pawns;

namespace {

BoardPosition board_of(std::vector<Word> words) { return initial_position(words); }

Outcome outcome_of(std::vector<Word> words, Nimber heap) {
  Solver solver;
  return solver.outcome({board_of(std::move(words)), heap, std::nullopt});
}

// Same position with the colours exchanged: rows flipped, pawns swapped and
// the other side to move.
BoardPosition colour_swap(const BoardPosition& b) {
  std::vector<bool> stopped;
  for (std::size_t f = 1; f <= b.width(); ++f) stopped.push_back(b.stopped(f));
  BoardPosition out(b.width(), stopped, other(b.to_move()));
  for (std::size_t f = 1; f <= b.width(); ++f) {
    for (int r = 1; r <= 3; ++r) {
      const Piece p = b.at(f, r);
      const Piece q = p == Piece::FirstPawn ? Piece::SecondPawn : p == Piece::SecondPawn ? Piece::FirstPawn : p;
      out.set(f, 4 - r, q);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("initial positions") {
  const auto one = board_of({Word::parse("0")});
  CHECK(one.width() == 1);
  CHECK(one.at(1, 1) == Piece::FirstPawn);
  CHECK(one.at(1, 3) == Piece::SecondPawn);
  CHECK(one.at(1, 2) == Piece::None);

  const auto two = board_of({Word::parse("0000000"), Word::parse("0000")});
  CHECK(two.width() == 12);
  CHECK(two.at(8, 1) == Piece::None);
  CHECK(two.at(9, 1) == Piece::FirstPawn);
  CHECK(two.count(Piece::SecondPawn) == 11);

  const auto stopped = board_of({Word::parse("1000")});
  CHECK(stopped.stopped(1));
  CHECK_FALSE(stopped.stopped(2));
  CHECK(stopped.str() == "pppp\n....\nPPPP\n");

  CHECK_THROWS_AS(BoardPosition(13, std::vector<bool>(13)), Error);
  CHECK_THROWS_AS(BoardPosition(2, std::vector<bool>(3)), Error);
}

TEST_CASE("legal moves") {
  const auto one = board_of({Word::parse("0")});
  const auto m = legal_moves(one);
  REQUIRE(m.size() == 1);
  CHECK(m[0].str() == "1,1,2");

  SumPosition pos{board_of({Word::parse("00")}), 0, std::nullopt};
  pos = apply(pos, PawnMove{1, 1, 2, 1, false});
  const auto replies = legal_moves(pos.board);
  CHECK(replies.size() == 2);
  CHECK(std::count_if(replies.begin(), replies.end(), [](const PawnMove& p) { return p.capture; }) == 1);
}

TEST_CASE("touchdown on an open file ends the game, on a stopped file it does not") {
  BoardPosition b(2, {false, true});
  b.set(1, 2, Piece::FirstPawn);
  b.set(2, 2, Piece::FirstPawn);
  SumPosition pos{b, 0, std::nullopt};
  CHECK(apply(pos, PawnMove{1, 2, 3, 1, false}).terminal_winner == Side::First);
  CHECK_FALSE(apply(pos, PawnMove{2, 2, 3, 2, false}).terminal_winner);
}

TEST_CASE("outcomes of small sums") {
  CHECK(outcome_of({Word::parse("000")}, 0) == Outcome::SideToMoveLoses);
  CHECK(outcome_of({Word::parse("000")}, 1) == Outcome::SideToMoveWins);
  CHECK(outcome_of({Word::parse("1000")}, 2) == Outcome::SideToMoveLoses);
  CHECK(outcome(SumPosition{board_of({Word::parse("0")}), 1, std::nullopt}) == Outcome::SideToMoveLoses);
}

TEST_CASE("oracle values and loony moves") {
  CHECK(oracle_epsilon(Word::parse("0")) == 1);
  CHECK(oracle_epsilon(Word::parse("10")) == 0);
  CHECK(oracle_epsilon(Word::parse("1000")) == 2);
  CHECK(oracle_is_loony(Word::parse("00"), 0));
  CHECK_FALSE(oracle_is_loony(Word::parse("1000"), 1));
  CHECK(oracle_is_loony(Word::parse("1000"), 0));
  CHECK_THROWS_AS(oracle_is_loony(Word::parse("10"), 2), Error);
  // Heaps 0..1 cannot include the value 2.
  CHECK_THROWS_AS(oracle_epsilon(Word::parse("1000"), 1), Error);
}

TEST_CASE("oracle agrees with the engine through length 6") {
  for (std::size_t m = 1; m <= 6; ++m)
    for (const auto& w : enumerate_words(m)) CHECK(oracle_epsilon(w) == epsilon(w));
}

TEST_CASE("loony classes agree on length-6 words") {
  for (const auto& w : enumerate_words(6)) {
    const auto classes = classify_moves(w);
    for (std::size_t k = 0; k < w.size(); ++k) CHECK(oracle_is_loony(w, k) == classes[k].is_loony());
  }
}

TEST_CASE("two-component sums behave like the nim sum") {
  for (std::size_t a = 1; a <= 5; ++a) {
    for (std::size_t b = 1; a + b <= 6; ++b) {
      for (const auto& w1 : enumerate_words(a)) {
        for (const auto& w2 : enumerate_words(b)) {
          Solver solver;
          const auto board = board_of({w1, w2});
          const Nimber expect = epsilon(w1) ^ epsilon(w2);
          for (Nimber j = 0; j <= 3; ++j) {
            const bool loses = solver.outcome({board, j, std::nullopt}) == Outcome::SideToMoveLoses;
            CHECK(loses == (j == expect));
          }
        }
      }
    }
  }
}

TEST_CASE("outcomes are symmetric under exchanging colours") {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (const auto& w : enumerate_words(m)) {
      SumPosition pos{board_of({w}), 0, std::nullopt};
      // Play a few plies down the first legal line and compare at each step.
      for (int ply = 0; ply < 4 && !pos.terminal_winner; ++ply) {
        for (Nimber j = 0; j <= 2; ++j) {
          SumPosition here = pos;
          here.heap = j;
          SumPosition swapped{colour_swap(pos.board), j, std::nullopt};
          CHECK(outcome(here) == outcome(swapped));
        }
        const auto moves = legal_moves(pos.board);
        if (moves.empty()) break;
        pos = apply(pos, moves[ply % moves.size()]);
      }
    }
  }
}

TEST_CASE("principal variation ends the game") {
  Solver solver;
  SumPosition start{board_of({Word::parse("000")}), 1, std::nullopt};
  const auto line = solver.principal_variation(start);
  REQUIRE_FALSE(line.empty());
  SumPosition pos = start;
  for (const auto& mv : line) {
    if (mv.pawn) {
      pos = apply(pos, *mv.pawn);
    } else {
      pos.heap = mv.heap_to;
      pos.board.set_to_move(other(pos.board.to_move()));
    }
  }
  CHECK((pos.terminal_winner || (legal_moves(pos.board).empty() && pos.heap == 0)));
}

TEST_CASE("solver respects its entry limit") {
  Solver tiny(10);
  CHECK_THROWS_AS(tiny.outcome({board_of({Word::parse("0000000")}), 0, std::nullopt}), Error);
}
