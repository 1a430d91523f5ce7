#include <doctest.h>

#include "wtcensus/numbers.hpp"

using namespace wtcensus;

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(factorial(30) == BigInt("265252859812191058636308480000000"));
}

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 10) == 1);
  CHECK(binomial(10, 11) == 0);
  CHECK(binomial(52, 5) == 2598960);
  // Pascal row n = 64 against the factorial quotient, exact at full width
  for (unsigned k = 0; k <= 64; ++k)
    CHECK(binomial(64, k) == factorial(64) / (factorial(k) * factorial(64 - k)));
}

TEST_CASE("rational helpers") {
  BigRat half(1, 2);
  CHECK(rat_num(half) == 1);
  CHECK(rat_den(half) == 2);
  CHECK(!is_integer(half));
  CHECK(is_integer(BigRat(6, 3)));
  CHECK(to_string(BigRat(6, 3)) == "2");
  CHECK(to_string(BigRat(25, 2)) == "25/2");
  CHECK(to_string(BigRat(-3, 6)) == "-1/2");
  CHECK(to_string(BigInt("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
}

TEST_CASE("ratio_as_double") {
  CHECK(ratio_as_double(1, 2) == doctest::Approx(0.5));
  CHECK(ratio_as_double(1, 3) == doctest::Approx(1.0 / 3.0));
  // both operands far beyond double range, quotient modest
  BigInt big = factorial(60);
  CHECK(ratio_as_double(big * 7, big * 2) == doctest::Approx(3.5));
  CHECK(ratio_as_double(big, big * 1000) == doctest::Approx(0.001));
}
