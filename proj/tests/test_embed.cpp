#include <doctest.h>

#include "goldens.hpp"
#include "pawns/embed.hpp"

using namespace pawns;

namespace {

std::vector<Word> words(std::initializer_list<const char*> list) {
  std::vector<Word> out;
  for (const char* s : list) out.push_back(Word::parse(s));
  return out;
}

}  // namespace

TEST_CASE("golden diagrams") {
  CHECK(embed(words({"00000"}), 9, 12).rows() == goldens::kOpenFive);
  CHECK(embed(words({"1000", "0"}), 9, 12).rows() == goldens::kStoppedFourPlusOne);
  CHECK(embed(words({"1000"}), 9, 12).rows() == goldens::kStoppedFour);
}

TEST_CASE("rendering") {
  const auto d = embed(words({"00000"}), 9, 12);
  const std::string fen = render(d, DiagramFormat::FenLike);
  CHECK(fen.substr(0, fen.find('/')) == "11k");
  CHECK(fen == "11k/10pP/6p3P1/ppppp2p4/6pP4/PPPPP1P5/7P2p1/10Pp/11K");
  CHECK(render(embed(words({"1000", "0"}), 9, 12), DiagramFormat::Ascii).substr(13, 12) == "p.........pP");

  ChessDiagram king(1, 1);
  king.set(1, 1, Cell::WhiteKing);
  CHECK(render(king, DiagramFormat::FenLike) == "K");
  CHECK(render(king, DiagramFormat::Ascii) == "K\n");

  const auto wide = embed(words({"0000000000000000"}), 9, 23);
  CHECK(render(wide, DiagramFormat::FenLike).substr(0, 3) == "22k");
}

TEST_CASE("extraction inverts embedding") {
  for (const auto& list : std::vector<std::vector<Word>>{
           words({"00000"}), words({"1000", "0"}), words({"1000"}), words({"0", "00", "101"}),
           words({"0100100", "00"}), words({"1"})}) {
    std::size_t width = 0;
    for (const auto& w : list) width += w.size() + (width ? 1 : 0);
    for (std::size_t h : {9, 11, 13}) {
      const auto d = embed(list, h, width + 7);
      check_diagram(d);
      CHECK(extract_components(d) == list);
      const auto roomy = embed(list, h, width + 10);
      CHECK(extract_components(roomy) == list);
    }
  }
}

TEST_CASE("dimension checks") {
  try {
    embed(words({"0100"}), 7, 20);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::StoppedFileNeedsHeight9);
  }
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::IoFailure;
  };
  CHECK(kind_of([] { embed(words({"000"}), 8, 20); }) == ErrorKind::DimensionTooSmall);
  CHECK(kind_of([] { embed(words({"000"}), 5, 20); }) == ErrorKind::DimensionTooSmall);
  CHECK(kind_of([] { embed(words({"000000"}), 9, 12); }) == ErrorKind::DimensionTooSmall);
  // A trailing stopped single file cannot use the slot next to the locks.
  CHECK(kind_of([] { embed(words({"1000", "1"}), 9, 12); }) == ErrorKind::DimensionTooSmall);
  CHECK(kind_of([] { embed(words({"1000", "00"}), 9, 12); }) == ErrorKind::DimensionTooSmall);

  const auto open7 = embed(words({"000"}), 7, 10);
  check_diagram(open7);
  CHECK(extract_components(open7) == words({"000"}));
}

TEST_CASE("warnings for heights without reference diagrams") {
  std::vector<std::string> warnings;
  embed(words({"000"}), 9, 12, &warnings);
  CHECK(warnings.empty());
  embed(words({"000"}), 11, 12, &warnings);
  CHECK(warnings.size() == 1);
}

TEST_CASE("diagram invariants") {
  ChessDiagram d(9, 12);
  CHECK_THROWS_AS(check_diagram(d), Error);
  d.set(12, 9, Cell::BlackKing);
  d.set(12, 1, Cell::WhiteKing);
  check_diagram(d);
  d.set(3, 1, Cell::WhitePawn);
  CHECK_THROWS_AS(check_diagram(d), Error);
  CHECK_THROWS_AS(d.at(13, 1), Error);
  CHECK_THROWS_AS(ChessDiagram(0, 3), Error);
}
