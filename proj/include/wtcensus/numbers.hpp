#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace wtcensus {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);

// 0 when k > n
BigInt binomial(unsigned n, unsigned k);

BigInt rat_num(const BigRat& r);
BigInt rat_den(const BigRat& r);
bool is_integer(const BigRat& r);

std::string to_string(const BigInt& v);

// "p" when the denominator is 1, otherwise "p/q"
std::string to_string(const BigRat& r);

// num/den as a double via a 64-bit scaled integer quotient; exact inputs of
// any magnitude are fine as long as the quotient itself fits a double.
// Intended for ratios of moderate size (num, den > 0).
double ratio_as_double(const BigInt& num, const BigInt& den);

}  // namespace wtcensus
