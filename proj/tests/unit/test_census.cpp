#include <doctest.h>

#include <map>
#include <vector>

#include "wtcensus/census.hpp"
#include "wtcensus/tree.hpp"

using namespace wtcensus;

TEST_CASE("recurrence values") {
  auto a = a_rec(8);
  CHECK(a == std::vector<BigInt>{1, 1, 3, 10, 36, 137, 543, 2219, 9285});
  CHECK(a_rec(0) == std::vector<BigInt>{1});
  CHECK(a_rec(30).back() == BigInt("3423448247477293431"));
  CHECK_THROWS_AS(a_rec(-1), std::domain_error);
}

TEST_CASE("catalan numbers") {
  std::vector<BigInt> want{1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int m = 0; m <= 8; ++m) CHECK(catalan(m) == want[static_cast<std::size_t>(m)]);
  CHECK(catalan(20) == BigInt("6564120420"));
}

TEST_CASE("explicit edge-refined counts") {
  CHECK(b_row(3) == std::vector<BigInt>{1, 4, 5});
  CHECK(b_row(4) == std::vector<BigInt>{1, 6, 15, 14});
  CHECK(b_explicit(3, 4) == 15);
  CHECK(b_explicit(1, 9) == 1);       // the single edge of weight n
  CHECK(b_explicit(9, 9) == catalan(9));  // all weights 1
  CHECK_THROWS_AS(b_explicit(0, 4), std::domain_error);
  CHECK_THROWS_AS(b_explicit(5, 4), std::domain_error);

  // rows sum to a_n
  auto a = a_rec(12);
  for (int n = 1; n <= 12; ++n) {
    BigInt sum = 0;
    for (const auto& b : b_row(n)) sum += b;
    CHECK(sum == a[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("unrooted mass c_n") {
  CHECK(c_exact(1) == BigRat(1));
  CHECK(c_exact(2) == BigRat(2));
  CHECK(c_exact(3) == BigRat(14, 3));
  CHECK(c_exact(4) == BigRat(25, 2));
  CHECK_THROWS_AS(c_exact(0), std::domain_error);
}

TEST_CASE("c_n equals the census mass at n = 8") {
  BigRat mass = 0;
  for (const auto& cls : unrooted_census(8)) mass += BigRat(1, cls.aut_order);
  CHECK(mass == c_exact(8));
}

TEST_CASE("census_row ties the columns together") {
  auto row = census_row(6);
  CHECK(row.n == 6);
  CHECK(row.a == 543);
  CHECK(row.b == b_row(6));
  CHECK(row.c == c_exact(6));
  CHECK(row.estimate == doctest::Approx(asymptotic_estimate(6)));
}

TEST_CASE("asymptotic estimate and ratio") {
  // the estimate is within an order of magnitude early on
  CHECK(asymptotic_estimate(8) == doctest::Approx(10888.5).epsilon(0.01));
  CHECK(asymptotic_ratio(8, BigInt(9285)) == doctest::Approx(0.8527).epsilon(0.001));

  auto a = a_rec(60);
  double prev = 0.0;
  for (int n = 1; n <= 60; ++n) {
    double r = asymptotic_ratio(n, a[static_cast<std::size_t>(n)]);
    CHECK(r > 0.0);
    CHECK(r < 1.0);
    if (n >= 8) CHECK(r > prev);  // settles into monotone growth quickly
    prev = r;
  }
}

TEST_CASE("scientific form agrees with the direct estimate") {
  for (int n : {1, 5, 20, 100}) {
    auto [mantissa, exponent] = asymptotic_estimate_sci(n);
    CHECK(mantissa >= 1.0);
    CHECK(mantissa < 10.0);
    if (n <= 100) {
      double direct = asymptotic_estimate(n);
      CHECK(mantissa * std::pow(10.0, static_cast<double>(exponent)) ==
            doctest::Approx(direct).epsilon(1e-9));
    }
  }
  // far beyond double range the sci form still works
  auto [mantissa, exponent] = asymptotic_estimate_sci(1000);
  CHECK(mantissa >= 1.0);
  CHECK(mantissa < 10.0);
  CHECK(exponent > 600);
}

TEST_CASE("ordinary passport formulas") {
  Passport star(Partition({4}), Partition({1, 1, 1, 1}));
  CHECK(ordinary_rooted_count(star) == 1);
  CHECK(ordinary_unrooted_mass(star) == BigRat(1, 4));

  Passport diamond(Partition({2, 1, 1}), Partition({2, 1, 1}));
  CHECK(ordinary_rooted_count(diamond) == 4);
  CHECK(ordinary_unrooted_mass(diamond) == BigRat(1));

  for (int n = 1; n <= 8; ++n) {
    Passport chain(Partition(std::vector<int>{n}),
                   Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    CHECK(ordinary_rooted_count(chain) == 1);
    CHECK(ordinary_unrooted_mass(chain) == BigRat(1, n));
  }
}

TEST_CASE("passport census against the formulas for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    auto census = brute_force_passport_census(n);
    BigInt rooted_total = 0;
    BigRat mass_total = 0;
    for (const auto& [passport, entry] : census) {
      CHECK(entry.rooted == ordinary_rooted_count(passport));
      CHECK(entry.mass == ordinary_unrooted_mass(passport));
      rooted_total += entry.rooted;
      mass_total += entry.mass;
    }
    CHECK(rooted_total == catalan(n));
    CHECK(mass_total == BigRat(catalan(n), n));
    // realizable passports are exactly the pairs with |alpha| + |beta| = n + 1
    // (p black and q white vertices of a tree with n edges satisfy p + q = n + 1)
    std::size_t realizable = 0;
    for (const auto& alpha : partitions_of(n))
      for (const auto& beta : partitions_of(n))
        if (alpha.size() + beta.size() == n + 1) ++realizable;
    CHECK(census.size() == realizable);
  }
}

TEST_CASE("cross_verify passes at small sizes") {
  auto report = cross_verify(4);
  CHECK(report.pass());
  CHECK(report.n_max == 4);
  CHECK(report.bound == 8);
  bool saw_example = false;
  for (const auto& leg : report.legs) {
    CHECK(leg.pass);
    if (leg.detail.find("rooted weight-4 total = 36") != std::string::npos) saw_example = true;
  }
  CHECK(saw_example);

  auto tiny = cross_verify(0);
  CHECK(tiny.pass());
  CHECK(tiny.legs.size() == 5);  // the weight-4 leg needs n_max >= 4
}
