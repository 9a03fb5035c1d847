#pragma once

// Component taxonomy and move classification for the pawns game with
// stopped files.
//
// A move inside a quiescent component [w] either loses in every context
// (loony) or behaves exactly like a move to a Nim-heap. The rules below decide
// which, given the values of shorter components. They are written once, as
// templates over a "view" of a word, so that the dense single-word table, the
// content-keyed exhaustive scan and the periodic table all run the same code.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "pawns/words.hpp"

namespace pawns {

class MoveClass {
 public:
  static constexpr MoveClass loony() noexcept { return MoveClass(kLoony); }
  static constexpr MoveClass value(Nimber v) noexcept { return MoveClass(v); }

  constexpr bool is_loony() const noexcept { return raw_ == kLoony; }
  /// Nim-value of the equivalent non-entailing move. Meaningless when loony.
  constexpr Nimber value() const noexcept { return raw_; }
  constexpr bool is_value(Nimber v) const noexcept { return raw_ == v && raw_ != kLoony; }

  std::string str() const { return is_loony() ? "loony" : "*" + std::to_string(raw_); }

  friend constexpr bool operator==(MoveClass, MoveClass) = default;

 private:
  static constexpr Nimber kLoony = std::numeric_limits<Nimber>::max();
  constexpr explicit MoveClass(Nimber raw) : raw_(raw) {}
  Nimber raw_;
};

// ---------------------------------------------------------------------------
// Components

/// [w]: m consecutive initial files.
struct Quiescent {
  Word word;
};

/// [:w] or, when the colon file is stopped, [:̲w]. The tail lists the initial
/// files inward from the colon file.
struct ColonContext {
  bool underlined = false;
  Word tail;
};

/// [.:w] / [.:̲w]
struct DotColon {
  bool underlined = false;
  Word tail;
};

/// A stopped, already blocked file next to a colon file.
struct BlockedColon {
  Word tail;
};

/// [:.] / [:̲.]
struct ColonDot {
  bool underlined = false;
};

/// [w1 : w2] with both sides non-empty.
struct Interior {
  Word left;
  bool underlined = false;
  Word right;
};

using Component = std::variant<Quiescent, ColonContext, DotColon, BlockedColon, ColonDot, Interior>;

/// Sum of components produced by one forced reply; empty means 0.
using EntailedOption = std::vector<Component>;

/// Forced replies available from an entailing component. Throws
/// Error(MalformedComponent) for quiescent components and impossible shapes.
std::vector<EntailedOption> entailed_options(const Component& component);

std::string notation(const Component& component);
std::string notation(const EntailedOption& option);

struct MoveSite {
  Word word;
  std::size_t file = 0;  // 0-based
};

// ---------------------------------------------------------------------------
// Rules

/// Classification of the colon component with the given tail.
///
/// capture_value() must return the value of the tail minus its first file.
/// advance_class() must return, for a plain colon, the class of the colon
/// whose file is tail[0] with tail tail[1:]; for an underlined colon, the class
/// of the colon on tail[1] with tail tail[2:]. Neither is called for the short
/// tails that are loony outright.
template <class Capture, class Advance>
MoveClass colon_rule(bool underlined, std::size_t tail_len, Capture&& capture_value,
                     Advance&& advance_class) {
  if (!underlined) {
    if (tail_len <= 1) return MoveClass::loony();
    const Nimber cap = capture_value();
    // Loony when the opponent may instead advance into a non-loony colon worth
    // exactly the capture value.
    if (advance_class().is_value(cap)) return MoveClass::loony();
    return MoveClass::value(cap);
  }
  // An underlined tail of length 1 is loony as well: a component "10" has value 0.
  if (tail_len <= 2) return MoveClass::loony();
  const Nimber cap = capture_value();
  // Polarity is inverted relative to the plain colon.
  if (advance_class().is_value(cap)) return MoveClass::value(cap);
  return MoveClass::loony();
}

/// Lookups a word view must offer, in coordinates local to the word:
///   size(), stopped(i)
///   eps_prefix(n)        value of flags [0, n)
///   eps_suffix(s)        value of flags [s, size)
///   colon_suffix(u, s)   class of the colon whose tail is flags [s, size)
///   colon_rprefix(u, n)  class of the colon whose tail is flags [0, n) reversed
/// where u selects the underlined variant.
template <class V>
concept WordView = requires(const V& v, std::size_t i, bool u) {
  { v.size() } -> std::convertible_to<std::size_t>;
  { v.stopped(i) } -> std::convertible_to<bool>;
  { v.eps_prefix(i) } -> std::convertible_to<Nimber>;
  { v.eps_suffix(i) } -> std::convertible_to<Nimber>;
  { v.colon_suffix(u, i) } -> std::same_as<MoveClass>;
  { v.colon_rprefix(u, i) } -> std::same_as<MoveClass>;
};

/// Class of the move by the pawn on file k (0-based) of the word viewed by w.
template <WordView V>
MoveClass classify_move_in(const V& w, std::size_t k) {
  const std::size_t m = w.size();
  if (m == 1) return MoveClass::value(0);
  if (k == 0) return w.colon_suffix(w.stopped(0), 1);
  if (k == m - 1) return w.colon_rprefix(w.stopped(m - 1), m - 1);

  const bool left_stopped = w.stopped(k - 1);
  const bool right_stopped = w.stopped(k + 1);
  auto sum = [&] { return MoveClass::value(w.eps_prefix(k - 1) ^ w.eps_suffix(k + 2)); };

  if (left_stopped && right_stopped) return sum();
  if (left_stopped) return w.colon_suffix(false, k + 1).is_loony() ? MoveClass::loony() : sum();
  if (right_stopped) return w.colon_rprefix(false, k).is_loony() ? MoveClass::loony() : sum();

  const bool u = w.stopped(k);
  if (w.colon_suffix(u, k + 1).is_loony() || w.colon_rprefix(u, k).is_loony()) return MoveClass::loony();
  return sum();
}

/// Marks values seen by the mex; reused across calls to avoid reallocation.
class MexScratch {
 public:
  void reset(std::size_t bound) {
    if (marks_.size() < bound + 1) marks_.assign(bound + 1, 0);
    if (++epoch_ == 0) {
      std::fill(marks_.begin(), marks_.end(), 0);
      epoch_ = 1;
    }
    bound_ = bound;
  }
  void add(Nimber v) {
    if (v <= bound_) marks_[v] = epoch_;
  }
  Nimber mex() const {
    Nimber v = 0;
    while (v <= bound_ && marks_[v] == epoch_) ++v;
    return v;
  }

 private:
  std::vector<std::uint32_t> marks_;
  std::uint32_t epoch_ = 0;
  std::size_t bound_ = 0;
};

/// Value of the viewed word: mex over the Nim-values of its non-loony moves.
template <WordView V>
Nimber epsilon_in(const V& w, MexScratch& scratch) {
  const std::size_t m = w.size();
  if (m == 0) return 0;
  if (m == 1) return 1;
  // At most m candidates, so the mex never exceeds m.
  scratch.reset(m);
  for (std::size_t k = 0; k < m; ++k) {
    const MoveClass c = classify_move_in(w, k);
    if (!c.is_loony()) scratch.add(c.value());
  }
  return scratch.mex();
}

// ---------------------------------------------------------------------------
// Reference evaluation over explicit words. Recursion is direct (no tables
// for colon classes), so these are slow but easy to audit; the grundy module
// checks its tables against them.

using EpsilonFn = std::function<Nimber(const Word&)>;

/// Throws Error(InvariantViolation) if an underlined tail starts stopped.
MoveClass classify_colon(const ColonContext& ctx, const EpsilonFn& epsilon);

/// Throws Error(IndexOutOfRange) for a bad file index or an empty word.
MoveClass classify_move(const MoveSite& site, const EpsilonFn& epsilon);

}  // namespace pawns
