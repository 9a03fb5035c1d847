#include <doctest.h>

#include "naive.hpp"
#include "pawns/engine.hpp"
#include "pawns/grundy.hpp"

using namespace pawns;

namespace {

std::vector<std::string> notations(const std::vector<EntailedOption>& options) {
  std::vector<std::string> out;
  for (const auto& o : options) out.push_back(notation(o));
  return out;
}

MoveClass colon(bool underlined, const char* tail) {
  GrundyTable table;
  return classify_colon({underlined, Word::parse(tail)}, table.as_function());
}

MoveClass move(const char* word, std::size_t k) {
  GrundyTable table;
  return classify_move({Word::parse(word), k}, table.as_function());
}

}  // namespace

TEST_CASE("move classes") {
  CHECK(MoveClass::loony().is_loony());
  CHECK(MoveClass::value(3).value() == 3);
  CHECK(MoveClass::value(3).is_value(3));
  CHECK_FALSE(MoveClass::loony().is_value(0));
  CHECK(MoveClass::value(0).str() == "*0");
  CHECK(MoveClass::loony().str() == "loony");
}

TEST_CASE("entailed options") {
  CHECK(notations(entailed_options(ColonContext{false, Word::parse("00")})) ==
        std::vector<std::string>{"[:.]+[0]", "[:0]"});
  CHECK(notations(entailed_options(BlockedColon{Word::parse("0")})) == std::vector<std::string>{"0"});
  CHECK(notations(entailed_options(DotColon{false, Word::parse("00")})) == std::vector<std::string>{"[:00]"});
  CHECK(notations(entailed_options(ColonContext{true, Word::parse("010")})) ==
        std::vector<std::string>{"[:_.]+[10]", "[#:10]"});
  CHECK(notations(entailed_options(Interior{Word::parse("00"), false, Word::parse("0")})) ==
        std::vector<std::string>{"[0]+[.:0]", "[.:00]"});
  CHECK(notations(entailed_options(ColonDot{true})) == std::vector<std::string>{"0"});

  CHECK_THROWS_AS(entailed_options(Quiescent{Word::parse("000")}), Error);
  CHECK_THROWS_AS(entailed_options(ColonContext{true, Word::parse("10")}), Error);
  CHECK_THROWS_AS(entailed_options(Interior{Word::parse(""), false, Word::parse("0")}), Error);
}

TEST_CASE("colon classes") {
  CHECK(colon(false, "0").is_loony());
  CHECK(colon(false, "0000").is_loony());
  CHECK(colon(false, "00").is_value(1));
  CHECK(colon(true, "00").is_loony());
  CHECK(colon(true, "0").is_loony());
  CHECK(colon(true, "000").is_loony());
  CHECK_THROWS_AS(colon(true, "100"), Error);
}

TEST_CASE("colon_rule short tails never consult the callbacks") {
  auto boom = [] () -> Nimber { throw std::logic_error("called"); };
  auto boom_class = [] () -> MoveClass { throw std::logic_error("called"); };
  CHECK(colon_rule(false, 0, boom, boom_class).is_loony());
  CHECK(colon_rule(false, 1, boom, boom_class).is_loony());
  CHECK(colon_rule(true, 2, boom, boom_class).is_loony());
}

TEST_CASE("moves of the four-file component with a stopped end") {
  CHECK(move("1000", 0).is_loony());
  CHECK(move("1000", 1).is_value(1));
  CHECK(move("1000", 2).is_loony());
  CHECK(move("1000", 3).is_value(0));
  CHECK(move("00000", 2).is_value(0));
  CHECK(move("00", 0).is_loony());
  CHECK(move("0", 0).is_value(0));
  CHECK_THROWS_AS(move("000", 3), Error);
  CHECK_THROWS_AS(move("", 0), Error);
}

TEST_CASE("plain colon classes follow the residue rule") {
  GrundyTable table;
  const auto fn = table.as_function();
  for (std::size_t m = 1; m <= 60; ++m) {
    const MoveClass c = classify_colon({false, Word::zeros(m)}, fn);
    CHECK(c.is_loony() == loony_plain(m));
  }
}

TEST_CASE("reference classifier agrees with the string evaluator") {
  naive::Evaluator ref;
  GrundyTable table;
  const auto fn = table.as_function();
  for (std::size_t m = 1; m <= 9; ++m) {
    for (const auto& s : naive::all_words(m)) {
      const Word w = Word::parse(s);
      for (std::size_t k = 0; k < m; ++k) {
        const MoveClass got = classify_move({w, k}, fn);
        const naive::Class want = ref.move(s, k);
        CHECK(got.is_loony() == !want.has_value());
        if (want && !got.is_loony()) CHECK(got.value() == *want);
      }
    }
  }
}

TEST_CASE("mex scratch") {
  MexScratch s;
  s.reset(3);
  CHECK(s.mex() == 0);
  s.add(0);
  s.add(1);
  s.add(7);  // out of range, ignored
  CHECK(s.mex() == 2);
  s.reset(3);
  CHECK(s.mex() == 0);
}
