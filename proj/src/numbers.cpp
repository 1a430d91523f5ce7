#include "wtcensus/numbers.hpp"

#include <cmath>
#include <stdexcept>

namespace wtcensus {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

BigInt rat_num(const BigRat& r) { return boost::multiprecision::numerator(r); }
BigInt rat_den(const BigRat& r) { return boost::multiprecision::denominator(r); }

bool is_integer(const BigRat& r) { return rat_den(r) == 1; }

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const BigRat& r) {
  if (is_integer(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

double ratio_as_double(const BigInt& num, const BigInt& den) {
  if (den <= 0 || num < 0) throw std::domain_error("ratio_as_double: need num >= 0, den > 0");
  BigInt q = (num << 64) / den;
  return std::ldexp(q.convert_to<double>(), -64);
}

}  // namespace wtcensus
