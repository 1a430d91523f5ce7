#include <doctest.h>

#include <sstream>
#include <string>

#include "wtcensus/census.hpp"
#include "wtcensus/oeis.hpp"

using namespace wtcensus;

namespace {

BFile parse(const std::string& text) {
  std::istringstream in(text);
  return parse_b_file(in);
}

}  // namespace

TEST_CASE("b-file parsing is tolerant of comments, blanks, and order") {
  auto file = parse("# header\n\n2 3\n0 1\n1 1\n   # indented comment\n3 10\n");
  REQUIRE(file.entries.size() == 4);
  CHECK(file.entries[0] == std::pair<long long, BigInt>{0, 1});
  CHECK(file.entries[3] == std::pair<long long, BigInt>{3, 10});
  CHECK(file.prefix(3) == std::vector<BigInt>{1, 1, 3, 10});
}

TEST_CASE("b-file parse errors name the line") {
  try {
    parse("0 1\n1 one\n");
    FAIL("expected a parse error");
  } catch (const BFileParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("0 1 extra\n"), BFileParseError);
  CHECK_THROWS_AS(parse("zero 1\n"), BFileParseError);
  // conflicting duplicates are rejected, exact duplicates collapse
  CHECK_THROWS_AS(parse("0 1\n0 2\n"), BFileParseError);
  CHECK(parse("0 1\n0 1\n1 1\n").prefix(1) == std::vector<BigInt>{1, 1});
}

TEST_CASE("prefix demands a contiguous run from zero") {
  auto file = parse("0 1\n1 1\n2 3\n3 10\n4 36\n5 137\n");
  CHECK(file.prefix(5).size() == 6);
  try {
    file.prefix(8);
    FAIL("expected exhaustion");
  } catch (const FixtureExhausted& e) {
    CHECK(e.last_index() == 5);
    CHECK(std::string(e.what()) == "fixture exhausted at 5");
  }
  // a gap truncates the usable prefix
  auto gappy = parse("0 1\n1 1\n3 10\n");
  CHECK_THROWS_AS(gappy.prefix(3), FixtureExhausted);
  // missing row zero means no usable prefix at all
  auto no_zero = parse("1 1\n2 3\n");
  try {
    no_zero.prefix(1);
    FAIL("expected exhaustion");
  } catch (const FixtureExhausted& e) {
    CHECK(e.last_index() == -1);
  }
}

TEST_CASE("compare_sequence") {
  auto file = parse("0 1\n1 1\n2 3\n3 10\n4 36\n");
  auto good = compare_sequence(a_rec(4), file);
  CHECK(good.match);
  CHECK(good.compared == 5);
  CHECK(good.first_mismatch == -1);

  auto shifted = parse("0 1\n1 1\n2 3\n3 11\n4 36\n");
  auto bad = compare_sequence(a_rec(4), shifted);
  CHECK(!bad.match);
  CHECK(bad.first_mismatch == 3);
  CHECK(bad.detail.find("computed 10") != std::string::npos);
  CHECK(bad.detail.find("reference 11") != std::string::npos);

  CHECK_THROWS_AS(compare_sequence(a_rec(6), file), FixtureExhausted);
}

TEST_CASE("the bundled fixture matches the recurrence row for row") {
  auto file = load_b_file(std::string(WTCENSUS_DATA_DIR) + "/b002212.txt");
  auto check30 = compare_sequence(a_rec(30), file);
  CHECK(check30.match);
  CHECK(check30.compared == 31);
  auto check100 = compare_sequence(a_rec(100), file);
  CHECK(check100.match);
  CHECK_THROWS_AS(compare_sequence(a_rec(101), file), FixtureExhausted);
}

TEST_CASE("load_b_file rejects missing paths") {
  CHECK_THROWS_AS(load_b_file("/nonexistent/b.txt"), std::runtime_error);
}

TEST_CASE("fetch serves from a warm cache without touching the network") {
  // the bundled data directory doubles as a cache: cache_dir/b002212.txt
  std::string error;
  auto body = fetch_a002212(WTCENSUS_DATA_DIR, error);
  REQUIRE(body);
  std::istringstream in(*body);
  auto file = parse_b_file(in);
  CHECK(compare_sequence(a_rec(30), file).match);
}
