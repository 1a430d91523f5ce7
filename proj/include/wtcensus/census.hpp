#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wtcensus/numbers.hpp"
#include "wtcensus/partition.hpp"

namespace wtcensus {

// a_0..a_N from the recurrence a_0 = a_1 = 1,
// a_{n+1} = a_n + sum_{k=0}^{n} a_k a_{n-k} for n >= 1.
std::vector<BigInt> a_rec(int N);

BigInt catalan(int m);  // C(2m, m) / (m + 1)

// b_{m,n} = C(n-1, m-1) * Cat_m: rooted trees of weight n with m edges.
BigInt b_explicit(int m, int n);  // needs 1 <= m <= n
std::vector<BigInt> b_row(int n); // m = 1..n

// c_n = sum_{m=1}^{n} b_{m,n}/m: unrooted trees weighted by 1/|Aut|.
BigRat c_exact(int n);  // n >= 1

// Leading-order estimate (1/2) sqrt(5/pi) 5^n n^{-3/2}. Overflows to +inf
// around n = 440; use the sci form beyond that.
double asymptotic_estimate(int n);  // n >= 1

// (mantissa in [1,10), decimal exponent), computed in log space.
std::pair<double, long> asymptotic_estimate_sci(int n);

// a_n divided by the estimate, overflow-safe at any n.
double asymptotic_ratio(int n, const BigInt& a_n);

struct CensusRow {
  int n;
  BigInt a;
  std::vector<BigInt> b;  // b_{1,n}..b_{n,n}
  BigRat c;
  double estimate;
};

CensusRow census_row(int n);  // n >= 1; checks a = sum b and c = sum b/m

// Rooted ordinary (all weights 1) trees with this passport: n N(alpha) N(beta).
// The product is asserted to be a whole number.
BigInt ordinary_rooted_count(const Passport& p);

// Unrooted mass sum 1/|Aut| over the passport: N(alpha) N(beta).
BigRat ordinary_unrooted_mass(const Passport& p);

struct PassportCensusEntry {
  BigInt rooted;  // rooted ordinary trees with this passport
  BigRat mass;    // sum of 1/aut over unrooted classes with it
};

// Exhaustive census of ordinary trees of weight n, grouped by passport.
std::map<Passport, PassportCensusEntry> brute_force_passport_census(int n);

struct VerifyLeg {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerifyReport {
  int n_max;
  int bound;  // cap for the enumeration-backed legs
  std::vector<VerifyLeg> legs;
  bool pass() const;
};

// Runs every counting path against every other:
//   - a_n: recurrence vs series expansion vs exhaustive enumeration
//   - b_{m,n}: explicit formula vs bivariate series vs filtered enumeration
//   - h: closed form vs functional-equation fixed point; h(1,t) vs f(t)
//   - c_n and a_n vs the unrooted census orbit counts
//   - passport formulas vs the brute-force ordinary census
//   - the weight-4 worked example (36 rootings, 16 classes, c_4 = 25/2)
// Formula-only legs run to n_max; enumeration legs to min(n_max, bound).
VerifyReport cross_verify(int n_max, int bound = 8);

}  // namespace wtcensus
