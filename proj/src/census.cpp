#include "wtcensus/census.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wtcensus/dyck.hpp"
#include "wtcensus/series.hpp"
#include "wtcensus/tree.hpp"

namespace wtcensus {

std::vector<BigInt> a_rec(int N) {
  if (N < 0) throw std::domain_error("a_rec: N must be >= 0");
  std::vector<BigInt> a(static_cast<std::size_t>(N) + 1);
  a[0] = 1;
  if (N >= 1) a[1] = 1;
  for (int n = 1; n < N; ++n) {
    BigInt conv = 0;
    for (int k = 0; k <= n; ++k) conv += a[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(n - k)];
    a[static_cast<std::size_t>(n) + 1] = a[static_cast<std::size_t>(n)] + conv;
  }
  return a;
}

BigInt catalan(int m) {
  if (m < 0) throw std::domain_error("catalan: m must be >= 0");
  return binomial(2 * static_cast<unsigned>(m), static_cast<unsigned>(m)) / (m + 1);
}

BigInt b_explicit(int m, int n) {
  if (m < 1 || m > n) throw std::domain_error("b_explicit: need 1 <= m <= n");
  return binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(m - 1)) * catalan(m);
}

std::vector<BigInt> b_row(int n) {
  std::vector<BigInt> row;
  row.reserve(static_cast<std::size_t>(n));
  for (int m = 1; m <= n; ++m) row.push_back(b_explicit(m, n));
  return row;
}

BigRat c_exact(int n) {
  if (n < 1) throw std::domain_error("c_exact: n must be >= 1");
  BigRat c = 0;
  for (int m = 1; m <= n; ++m) c += BigRat(b_explicit(m, n), m);
  return c;
}

namespace {

const double kLeadFactor = 0.5 * std::sqrt(5.0 / std::numbers::pi);

}  // namespace

double asymptotic_estimate(int n) {
  if (n < 1) throw std::domain_error("asymptotic_estimate: n must be >= 1");
  return kLeadFactor * std::pow(5.0, n) * std::pow(static_cast<double>(n), -1.5);
}

std::pair<double, long> asymptotic_estimate_sci(int n) {
  if (n < 1) throw std::domain_error("asymptotic_estimate_sci: n must be >= 1");
  double log10e = std::log10(kLeadFactor) + n * std::log10(5.0) - 1.5 * std::log10(static_cast<double>(n));
  long exponent = static_cast<long>(std::floor(log10e));
  return {std::pow(10.0, log10e - static_cast<double>(exponent)), exponent};
}

double asymptotic_ratio(int n, const BigInt& a_n) {
  if (n < 1) throw std::domain_error("asymptotic_ratio: n must be >= 1");
  // a_n / (k 5^n n^-1.5) = (a_n / 5^n) * n^1.5 / k, with a_n/5^n exact
  BigInt pow5 = boost::multiprecision::pow(BigInt(5), static_cast<unsigned>(n));
  double scaled = ratio_as_double(a_n, pow5);
  return scaled * std::pow(static_cast<double>(n), 1.5) / kLeadFactor;
}

CensusRow census_row(int n) {
  if (n < 1) throw std::domain_error("census_row: n must be >= 1");
  CensusRow row{n, a_rec(n).back(), b_row(n), c_exact(n), asymptotic_estimate(n)};
  BigInt sum = 0;
  BigRat mass = 0;
  for (int m = 1; m <= n; ++m) {
    sum += row.b[static_cast<std::size_t>(m) - 1];
    mass += BigRat(row.b[static_cast<std::size_t>(m) - 1], m);
  }
  if (sum != row.a) throw std::logic_error("census_row: sum of b_{m,n} != a_n");
  if (mass != row.c) throw std::logic_error("census_row: sum of b_{m,n}/m != c_n");
  return row;
}

BigInt ordinary_rooted_count(const Passport& p) {
  if (p.total() < 1) throw std::domain_error("ordinary_rooted_count: weight must be >= 1");
  BigRat count = BigRat(p.total()) * big_n(p.alpha) * big_n(p.beta);
  if (!is_integer(count))
    throw std::logic_error("ordinary_rooted_count: n N(alpha) N(beta) = " + to_string(count) +
                           " is not an integer for " + p.str());
  return rat_num(count);
}

BigRat ordinary_unrooted_mass(const Passport& p) {
  if (p.total() < 1) throw std::domain_error("ordinary_unrooted_mass: weight must be >= 1");
  return big_n(p.alpha) * big_n(p.beta);
}

std::map<Passport, PassportCensusEntry> brute_force_passport_census(int n) {
  if (n < 1) throw std::domain_error("brute_force_passport_census: n must be >= 1");
  std::map<Passport, PassportCensusEntry> out;
  // rooted counts: one pass over the ordinary words (weight n, n edges)
  std::set<std::vector<Token>> assigned;
  for_each_word_with_edges(n, n, [&](const WeightedDyckWord& w) {
    RootedTree t = RootedTree::from_dyck(w);
    Passport p = t.passport();
    auto [it, inserted] = out.try_emplace(p, PassportCensusEntry{0, 0});
    it->second.rooted += 1;
    // unrooted mass: charge 1/aut once per class, at its first rooting seen
    if (!assigned.contains(w.tokens())) {
      auto codes = t.reroot_all();
      std::set<std::vector<Token>> distinct;
      for (const auto& c : codes) distinct.insert(c.tokens());
      const int m = static_cast<int>(codes.size());
      const int k = static_cast<int>(distinct.size());
      if (m % k != 0)
        throw std::logic_error("brute_force_passport_census: orbit size does not divide m");
      it->second.mass += BigRat(1, m / k);
      for (auto& toks : distinct) assigned.insert(std::move(toks));
    }
  });
  return out;
}

bool VerifyReport::pass() const {
  for (const auto& leg : legs)
    if (!leg.pass) return false;
  return true;
}

namespace {

// first line of mismatch detail, or empty when the leg passed
struct LegBuilder {
  std::string failure;
  std::ostringstream note;

  void fail(const std::string& what) {
    if (failure.empty()) failure = what;
  }
  VerifyLeg finish(const std::string& name) {
    bool ok = failure.empty();
    return VerifyLeg{name, ok, ok ? note.str() : failure};
  }
};

}  // namespace

VerifyReport cross_verify(int n_max, int bound) {
  if (n_max < 0) throw std::domain_error("cross_verify: n_max must be >= 0");
  if (bound < 0) throw std::domain_error("cross_verify: bound must be >= 0");
  const int enum_max = std::min(n_max, bound);
  VerifyReport report{n_max, bound, {}};

  auto a = a_rec(n_max);
  BivariateSeries h = h_closed_form(n_max);

  {  // a_n: recurrence vs series expansion vs enumeration
    LegBuilder leg;
    auto f = integer_coefficients(f_series(n_max));
    for (int n = 0; n <= n_max; ++n) {
      if (f[static_cast<std::size_t>(n)] != a[static_cast<std::size_t>(n)])
        leg.fail("a_" + std::to_string(n) + ": series " + to_string(f[static_cast<std::size_t>(n)]) +
                 " != recurrence " + to_string(a[static_cast<std::size_t>(n)]));
    }
    for (int n = 0; n <= enum_max; ++n) {
      BigInt count = 0;
      for_each_word(n, [&](const WeightedDyckWord&) { count += 1; });
      if (count != a[static_cast<std::size_t>(n)])
        leg.fail("a_" + std::to_string(n) + ": enumeration " + to_string(count) +
                 " != recurrence " + to_string(a[static_cast<std::size_t>(n)]));
    }
    leg.note << "recurrence = series to n = " << n_max << "; = enumeration to n = " << enum_max;
    report.legs.push_back(leg.finish("a three ways"));
  }

  {  // b_{m,n}: explicit formula vs bivariate series vs filtered enumeration
    LegBuilder leg;
    for (int n = 1; n <= n_max; ++n)
      for (int m = 1; m <= n; ++m)
        if (h.coeff_int(m, n) != b_explicit(m, n))
          leg.fail("b_{" + std::to_string(m) + "," + std::to_string(n) + "}: series " +
                   to_string(h.coeff_int(m, n)) + " != formula " + to_string(b_explicit(m, n)));
    for (int n = 1; n <= enum_max; ++n) {
      std::vector<BigInt> counts(static_cast<std::size_t>(n) + 1);
      for_each_word(n, [&](const WeightedDyckWord& w) {
        counts[static_cast<std::size_t>(w.edge_count())] += 1;
      });
      for (int m = 1; m <= n; ++m)
        if (counts[static_cast<std::size_t>(m)] != b_explicit(m, n))
          leg.fail("b_{" + std::to_string(m) + "," + std::to_string(n) + "}: enumeration " +
                   to_string(counts[static_cast<std::size_t>(m)]) + " != formula " +
                   to_string(b_explicit(m, n)));
    }
    leg.note << "formula = series to n = " << n_max << "; = enumeration to n = " << enum_max;
    report.legs.push_back(leg.finish("b three ways"));
  }

  {  // functional equation: fixed point vs closed form, and h(1,t) = f(t)
    LegBuilder leg;
    try {
      BivariateSeries fixed = h_fixed_point(n_max);
      if (!(h == fixed)) leg.fail("fixed point of h = 1 + st/(1-t) h^2 != closed form");
      auto via_h = integer_coefficients(h.at_s_one());
      auto via_f = integer_coefficients(f_series(n_max));
      if (via_h != via_f) leg.fail("h(1,t) != f(t)");
    } catch (const std::exception& e) {
      leg.fail(e.what());
    }
    leg.note << "fixed point = closed form and h(1,t) = f(t) to order " << n_max;
    report.legs.push_back(leg.finish("functional equation"));
  }

  {  // unrooted census: orbit sums against a_n and c_n
    LegBuilder leg;
    for (int n = 1; n <= enum_max; ++n) {
      auto classes = unrooted_census(n);
      BigInt rooted = 0;
      BigRat mass = 0;
      for (const auto& cls : classes) {
        if (cls.edge_count % cls.aut_order != 0)
          leg.fail("n = " + std::to_string(n) + ": aut order does not divide m");
        rooted += cls.edge_count / cls.aut_order;
        mass += BigRat(1, cls.aut_order);
      }
      if (rooted != a[static_cast<std::size_t>(n)])
        leg.fail("n = " + std::to_string(n) + ": rooting total " + to_string(rooted) +
                 " != a_n " + to_string(a[static_cast<std::size_t>(n)]));
      if (mass != c_exact(n))
        leg.fail("n = " + std::to_string(n) + ": census mass " + to_string(mass) + " != c_n " +
                 to_string(c_exact(n)));
    }
    leg.note << "sum m/aut = a_n and sum 1/aut = c_n to n = " << enum_max;
    report.legs.push_back(leg.finish("unrooted census"));
  }

  if (n_max >= 4) {  // the weight-4 worked example
    LegBuilder leg;
    BigInt rooted4 = 0;
    for_each_word(4, [&](const WeightedDyckWord&) { rooted4 += 1; });
    if (rooted4 != 36) leg.fail("rooted weight-4 total = " + to_string(rooted4) + ", expected 36");
    auto classes = unrooted_census(4);
    if (classes.size() != 16)
      leg.fail("weight-4 classes = " + std::to_string(classes.size()) + ", expected 16");
    std::map<int, int> profile;
    BigRat mass = 0;
    for (const auto& cls : classes) {
      ++profile[cls.aut_order];
      mass += BigRat(1, cls.aut_order);
    }
    std::map<int, int> expected{{1, 10}, {2, 4}, {4, 2}};
    if (profile != expected) leg.fail("weight-4 symmetry profile differs from 10/4/2");
    if (mass != BigRat(25, 2) || c_exact(4) != BigRat(25, 2))
      leg.fail("c_4 != 25/2");
    leg.note << "rooted weight-4 total = 36; 16 classes; aut profile 10x1 4x2 2x4; c_4 = 25/2";
    report.legs.push_back(leg.finish("weight-4 example"));
  }

  {  // passport formulas vs brute force, ordinary trees
    LegBuilder leg;
    for (int n = 1; n <= enum_max; ++n) {
      auto census = brute_force_passport_census(n);
      BigInt total = 0;
      for (const auto& [passport, entry] : census) {
        total += entry.rooted;
        if (entry.rooted != ordinary_rooted_count(passport))
          leg.fail("n = " + std::to_string(n) + " " + passport.str() + ": brute rooted " +
                   to_string(entry.rooted) + " != n N(alpha) N(beta) " +
                   to_string(ordinary_rooted_count(passport)));
        if (entry.mass != ordinary_unrooted_mass(passport))
          leg.fail("n = " + std::to_string(n) + " " + passport.str() + ": brute mass " +
                   to_string(entry.mass) + " != N(alpha) N(beta) " +
                   to_string(ordinary_unrooted_mass(passport)));
      }
      if (n >= 1 && total != catalan(n))
        leg.fail("n = " + std::to_string(n) + ": rooted ordinary total " + to_string(total) +
                 " != Cat_n " + to_string(catalan(n)));
    }
    leg.note << "rooted = n N(a) N(b), mass = N(a) N(b), total = Cat_n to n = " << enum_max;
    report.legs.push_back(leg.finish("passport formulas"));
  }

  return report;
}

}  // namespace wtcensus
