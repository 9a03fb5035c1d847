#include <doctest.h>

#include <sstream>

#include "json.hpp"
#include "naive.hpp"
#include "pawns/experiments.hpp"

using namespace pawns;

TEST_CASE("scanner tables match the string evaluator through length 14") {
  naive::Evaluator ref;
  ExhaustiveScanner scanner(2);
  scanner.build_through(14);
  for (std::size_t m = 1; m <= 14; ++m) {
    const auto words = naive::all_words(m);
    for (std::size_t r = 0; r < words.size(); ++r) REQUIRE(scanner.value(m, r) == ref.eps(words[r]));
  }
}

TEST_CASE("scanner rejects scans past its tables") {
  ExhaustiveScanner scanner;
  scanner.build_through(3);
  CHECK_THROWS_AS(scanner.scan(6, [](std::uint64_t, Nimber, unsigned) {}), Error);
  ExhaustiveScanner small(1, 1000);
  CHECK_THROWS_AS(small.build_through(20), Error);
}

TEST_CASE("scan ranks are handed out once each") {
  ExhaustiveScanner scanner(3);
  scanner.build_through(11);
  std::vector<int> hits(word_count(12), 0);
  std::vector<std::uint64_t> last(3, 0);
  bool ordered = true;
  scanner.scan(12, [&](std::uint64_t r, Nimber, unsigned w) {
    ++hits[r];
    if (r < last[w]) ordered = false;
    last[w] = r;
  });
  CHECK(ordered);
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}

TEST_CASE("distribution rows") {
  const auto one = value_distribution(1);
  CHECK(one.total == 2);
  CHECK(one.counts == std::vector<std::uint64_t>{0, 2});
  for (std::size_t m = 2; m <= 20; ++m) {
    const auto row = value_distribution(m);
    CHECK(row.total == word_count(m));
  }
  const auto a = value_distribution(18, 1);
  const auto b = value_distribution(18, 4);
  CHECK(a.counts == b.counts);
  CHECK(a.proportion(99) == 0.0);
}

TEST_CASE("first occurrences") {
  const auto t = first_occurrence(4, 20);
  CHECK(t.max_length == 9);
  CHECK(t.entries.at(1).length == 1);
  CHECK(t.entries.at(2).length == 4);
  CHECK(t.entries.at(2).witness.str() == "0001");
  CHECK(t.entries.at(3).length == 6);
  CHECK(t.entries.at(4).length == 9);
  CHECK(t.entries.at(4).witness.str() == "000100101");
  // Witnesses re-verified by direct evaluation, with no shorter word attaining the value.
  for (const auto& [k, occ] : t.entries) {
    CHECK(epsilon(occ.witness) == k);
    for (std::size_t m = 1; m < occ.length; ++m)
      for (const auto& w : enumerate_words(m)) CHECK(epsilon(w) != k);
  }
  const auto par = first_occurrence(5, 20, 3);
  CHECK(par.entries.at(5).witness == first_occurrence(5, 20, 1).entries.at(5).witness);
}

TEST_CASE("periodic scans") {
  const auto plain = periodic_scan(make_pattern(1, {}), 200);
  CHECK(*std::max_element(plain.values.begin(), plain.values.end()) == 1);
  REQUIRE(plain.period);
  CHECK(plain.period->period == 10);
  CHECK(plain.period->verified);

  const auto sixth = periodic_scan(make_pattern(6, {4}), 210, false);
  CHECK_FALSE(sixth.period);
  std::vector<std::size_t> at(6, 0);
  for (const auto& p : sixth.powers)
    if (p.alpha < 6) at[p.alpha] = p.length;
  CHECK(at[3] == 51);
  CHECK(at[4] == 111);
  CHECK(at[5] == 202);

  CHECK(power_milestones({0, 1, 2, 3, 1, 4}).size() == 3);
  CHECK(power_milestones({0, 1, 2, 3, 1, 4})[2].length == 5);
}

TEST_CASE("two significant figures") {
  CHECK(round_significant(0.0051234, 2) == doctest::Approx(0.0051));
  CHECK(round_significant(24.6, 2) == doctest::Approx(25));
  CHECK(round_significant(0.0, 2) == 0.0);
  CHECK(format_percent_2sig(0.2403) == "24");
  CHECK(format_percent_2sig(0.054) == "5.4");
  CHECK(format_percent_2sig(0.0302) == "3.0");
  CHECK(format_percent_2sig(0.0051) == ".51");
  CHECK(format_percent_2sig(0.00251) == ".25");
  CHECK(format_percent_2sig(0.000251) == ".025");
  CHECK(format_percent_2sig(0.0) == "0");
  CHECK(format_percent_2sig(0.996) == "100");
}

TEST_CASE("exports") {
  const auto row = value_distribution(6);
  std::ostringstream js;
  export_report(js, row, ExportFormat::JsonLines);
  std::istringstream lines(js.str());
  std::string header, record;
  std::getline(lines, header);
  std::getline(lines, record);
  CHECK(header.rfind("# pawns ", 0) == 0);
  const auto j = nlohmann::json::parse(record);
  CHECK(j["length"] == 6);
  CHECK(j["total"] == 21);
  std::uint64_t sum = 0;
  for (auto& [k, v] : j["counts"].items()) sum += v.get<std::uint64_t>();
  CHECK(sum == 21);

  std::ostringstream csv;
  export_report(csv, first_occurrence(2, 10), ExportFormat::Csv);
  CHECK(csv.str().find("k,m,witness\n") != std::string::npos);
  CHECK(csv.str().find("\n2,4,0001\n") != std::string::npos);

  std::ostringstream per;
  export_report(per, periodic_scan(make_pattern(1, {}), 5), ExportFormat::Csv);
  std::istringstream back(per.str());
  const auto values = read_value_dump(back);
  CHECK(values == std::vector<Nimber>{0, 1, 0, 0, 1, 1});

  std::ostringstream bad;
  bad.setstate(std::ios::badbit);
  CHECK_THROWS_AS(export_report(bad, row, ExportFormat::Csv), Error);
}
