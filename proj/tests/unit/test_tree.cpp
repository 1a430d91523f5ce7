#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "wtcensus/numbers.hpp"
#include "wtcensus/tree.hpp"

using namespace wtcensus;

TEST_CASE("dyck round-trip for every word of weight <= 7") {
  for (int n = 0; n <= 7; ++n) {
    for_each_word(n, [&](const WeightedDyckWord& w) {
      auto tree = RootedTree::from_dyck(w);
      CHECK(tree.to_dyck() == w);
      CHECK(tree.weight() == n);
      CHECK(tree.edge_count() == w.edge_count());
    });
  }
}

TEST_CASE("edgeless tree") {
  RootedTree t;
  CHECK(t.edgeless());
  CHECK(t.weight() == 0);
  CHECK(t.edge_count() == 0);
  CHECK(t == RootedTree::from_dyck(WeightedDyckWord{}));
  CHECK_THROWS_AS(t.black_count(), std::domain_error);
  CHECK_THROWS_AS(t.passport(), std::domain_error);
  CHECK_THROWS_AS(t.weight_distribution(), std::domain_error);
  CHECK_THROWS_AS(t.reroot_all(), std::domain_error);
}

TEST_CASE("a worked decode: (2 (1 ) ) (3 )") {
  auto tree = RootedTree::from_dyck(parse_text("(2 (1 ) ) (3 )"));
  CHECK(tree.weight() == 6);
  CHECK(tree.edge_count() == 3);
  CHECK(tree.black_count() == 2);
  CHECK(tree.white_count() == 2);
  auto pass = tree.passport();
  CHECK(pass.alpha.parts() == std::vector<int>{5, 1});
  CHECK(pass.beta.parts() == std::vector<int>{3, 3});
  CHECK(tree.weight_distribution().parts() == std::vector<int>{3, 2, 1});
  CHECK(tree.aut_order() == 1);
}

TEST_CASE("a large worked decode: weight 18, ten edges") {
  auto tree =
      RootedTree::from_dyck(parse_text("(5 (1 ) (1 (1 (3 (2 (1 (1 ) ) (1 ) ) ) (2 ) ) ) )"));
  CHECK(tree.weight() == 18);
  CHECK(tree.edge_count() == 10);
  CHECK(tree.black_count() == 7);
  CHECK(tree.white_count() == 4);
  auto pass = tree.passport();
  CHECK(pass.alpha == Partition::parse("5^2 2^3 1^2"));
  CHECK(pass.beta == Partition::parse("7,6,4,1"));
  CHECK(tree.weight_distribution() == Partition::parse("5^1 3^1 2^2 1^6"));
}

TEST_CASE("vertex counts satisfy m = p + q - 1 and degrees sum to n") {
  for (int n = 1; n <= 6; ++n) {
    for_each_word(n, [&](const WeightedDyckWord& w) {
      auto tree = RootedTree::from_dyck(w);
      CHECK(tree.edge_count() == tree.black_count() + tree.white_count() - 1);
      auto pass = tree.passport();
      CHECK(pass.alpha.total() == n);
      CHECK(pass.beta.total() == n);
      CHECK(pass.alpha.size() == tree.black_count());
      CHECK(pass.beta.size() == tree.white_count());
      CHECK(tree.weight_distribution().total() == n);
    });
  }
}

TEST_CASE("automorphism orders of small named trees") {
  auto aut = [](const char* code) {
    return RootedTree::from_dyck(parse_text(code)).aut_order();
  };
  CHECK(aut("(1 )") == 1);
  CHECK(aut("(4 )") == 1);
  CHECK(aut("(1 ) (1 )") == 2);          // black-centered 2-star
  CHECK(aut("(1 (1 ) )") == 2);          // path B-W-B
  CHECK(aut("(2 (2 ) )") == 2);          // same path, weight-2 edges
  CHECK(aut("(1 ) (1 ) (1 ) (1 )") == 4);    // black-centered 4-star
  CHECK(aut("(1 (1 ) (1 ) (1 ) )") == 4);    // white-centered 4-star
  CHECK(aut("(2 (1 ) ) (3 )") == 1);
  CHECK(aut("(1 ) (2 )") == 1);          // unequal weights break the swap
  CHECK(aut("(1 (1 ) ) (1 (1 ) )") == 2);    // two equal arms
}

TEST_CASE("re-rooting preserves the tree invariants") {
  for (int n = 1; n <= 5; ++n) {
    for_each_word(n, [&](const WeightedDyckWord& w) {
      auto tree = RootedTree::from_dyck(w);
      auto orbit = tree.reroot_all();
      REQUIRE(static_cast<int>(orbit.size()) == tree.edge_count());
      CHECK(orbit.front() == w);  // first entry is the original rooting
      auto canon = tree.canonical_code();
      auto pass = tree.passport();
      for (const auto& rerooted : orbit) {
        auto other = RootedTree::from_dyck(rerooted);
        CHECK(other.weight() == n);
        CHECK(other.edge_count() == tree.edge_count());
        CHECK(other.passport() == pass);
        CHECK(other.canonical_code() == canon);  // orbit is closed
        CHECK(other.aut_order() == tree.aut_order());
      }
      CHECK(tree.edge_count() % tree.aut_order() == 0);
    });
  }
}

TEST_CASE("canonical code is minimal and lies in the orbit") {
  for (int n = 1; n <= 5; ++n) {
    for_each_word(n, [&](const WeightedDyckWord& w) {
      auto tree = RootedTree::from_dyck(w);
      auto canon = tree.canonical_code();
      bool found = false;
      for (const auto& rerooted : tree.reroot_all()) {
        CHECK(!word_less(rerooted, canon));
        if (rerooted == canon) found = true;
      }
      CHECK(found);
    });
  }
}

TEST_CASE("unrooted census at weight 4 matches the worked example") {
  auto classes = unrooted_census(4);
  CHECK(classes.size() == 16);

  std::map<int, int> profile;
  BigInt rooted_total = 0;
  BigRat mass = 0;
  for (const auto& cls : classes) {
    ++profile[cls.aut_order];
    CHECK(cls.weight == 4);
    CHECK(cls.edge_count % cls.aut_order == 0);
    rooted_total += cls.edge_count / cls.aut_order;
    mass += BigRat(1, cls.aut_order);
  }
  CHECK(profile == std::map<int, int>{{1, 10}, {2, 4}, {4, 2}});
  CHECK(rooted_total == 36);
  CHECK(mass == BigRat(25, 2));

  // classes arrive sorted by canonical code and are pairwise distinct
  for (std::size_t i = 1; i < classes.size(); ++i)
    CHECK(word_less(classes[i - 1].canonical_code, classes[i].canonical_code));
}

TEST_CASE("unrooted census away from the worked example") {
  auto one = unrooted_census(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].aut_order == 1);

  // n = 2: (2 ), B-W-B path (aut 2), 2-star (aut 2) -> a_2 = 1 + 1 + 1 = 3 rootings
  auto two = unrooted_census(2);
  CHECK(two.size() == 3);
  BigInt rooted = 0;
  for (const auto& cls : two) rooted += cls.edge_count / cls.aut_order;
  CHECK(rooted == 3);
}
