#include "wtcensus/series.hpp"

#include <algorithm>
#include <optional>

namespace wtcensus {

namespace {

int min_order(int a, int b) { return a < b ? a : b; }

// exact square root of a nonnegative rational, or nullopt
std::optional<BigRat> rational_sqrt(const BigRat& r) {
  if (r < 0) return std::nullopt;
  BigInt num = rat_num(r), den = rat_den(r);
  BigInt sn = boost::multiprecision::sqrt(num);
  BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return BigRat(sn, sd);
}

}  // namespace

TruncatedSeries TruncatedSeries::constant(const BigRat& c, int order) {
  TruncatedSeries s(order);
  s.set_coeff(0, c);
  return s;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(min_order(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) r.set_coeff(i, a.coeff(i) + b.coeff(i));
  return r;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(min_order(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) r.set_coeff(i, a.coeff(i) - b.coeff(i));
  return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(min_order(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) {
    BigRat acc = 0;
    for (int j = 0; j <= i; ++j) acc += a.coeff(j) * b.coeff(i - j);
    r.set_coeff(i, acc);
  }
  return r;
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b.coeff(0) == 0) throw DivisionByNonUnit();
  TruncatedSeries r(min_order(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) {
    BigRat acc = a.coeff(i);
    for (int j = 0; j < i; ++j) acc -= r.coeff(j) * b.coeff(i - j);
    r.set_coeff(i, acc / b.coeff(0));
  }
  return r;
}

TruncatedSeries sqrt_series(const TruncatedSeries& a) {
  auto r0 = rational_sqrt(a.coeff(0));
  if (!r0 || *r0 == 0) throw NonSquareConstantTerm();
  TruncatedSeries r(a.order());
  r.set_coeff(0, *r0);
  // r_n = (a_n - sum_{j=1}^{n-1} r_j r_{n-j}) / (2 r_0)
  for (int n = 1; n <= a.order(); ++n) {
    BigRat acc = a.coeff(n);
    for (int j = 1; j < n; ++j) acc -= r.coeff(j) * r.coeff(n - j);
    r.set_coeff(n, acc / (2 * *r0));
  }
  return r;
}

std::vector<BigInt> integer_coefficients(const TruncatedSeries& s) {
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(s.order()) + 1);
  for (int i = 0; i <= s.order(); ++i) {
    if (!is_integer(s.coeff(i)))
      throw std::logic_error("coefficient of t^" + std::to_string(i) +
                             " is not an integer: " + to_string(s.coeff(i)));
    out.push_back(rat_num(s.coeff(i)));
  }
  return out;
}

TruncatedSeries f_series(int N) {
  if (N < 0) throw std::domain_error("f_series: order must be >= 0");
  // numerator to order N+1 so the shift by one t-power lands on order N
  TruncatedSeries radicand(N + 1);
  radicand.set_coeff(0, 1);
  radicand.set_coeff(1, -6);
  if (N + 1 >= 2) radicand.set_coeff(2, 5);
  TruncatedSeries root = sqrt_series(radicand);
  TruncatedSeries numerator(N + 1);
  numerator.set_coeff(0, BigRat(1) - root.coeff(0));
  numerator.set_coeff(1, BigRat(-1) - root.coeff(1));
  for (int i = 2; i <= N + 1; ++i) numerator.set_coeff(i, -root.coeff(i));
  if (numerator.coeff(0) != 0)
    throw std::logic_error("f_series: constant term failed to cancel");
  TruncatedSeries f(N);
  for (int n = 0; n <= N; ++n) f.set_coeff(n, numerator.coeff(n + 1) / 2);
  return f;
}

BigRat BivariateSeries::coeff(int m, int n) const {
  if (n < 0 || n > order()) return 0;
  const SPoly& p = slice(n);
  if (m < 0 || m >= static_cast<int>(p.size())) return 0;
  return p[static_cast<std::size_t>(m)];
}

BigInt BivariateSeries::coeff_int(int m, int n) const {
  BigRat c = coeff(m, n);
  if (!is_integer(c))
    throw std::logic_error("coefficient of s^" + std::to_string(m) + " t^" + std::to_string(n) +
                           " is not an integer: " + to_string(c));
  return rat_num(c);
}

TruncatedSeries BivariateSeries::at_s_one() const {
  TruncatedSeries r(order());
  for (int n = 0; n <= order(); ++n) {
    BigRat acc = 0;
    for (const BigRat& c : slice(n)) acc += c;
    r.set_coeff(n, acc);
  }
  return r;
}

void BivariateSeries::normalize() {
  for (auto& p : slices_)
    while (!p.empty() && p.back() == 0) p.pop_back();
}

namespace {

using SPoly = BivariateSeries::SPoly;

SPoly poly_add(const SPoly& a, const SPoly& b) {
  SPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

SPoly poly_sub(const SPoly& a, const SPoly& b) {
  SPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

SPoly poly_mul(const SPoly& a, const SPoly& b) {
  if (a.empty() || b.empty()) return {};
  SPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

SPoly poly_scale(SPoly p, const BigRat& c) {
  for (auto& x : p) x *= c;
  return p;
}

}  // namespace

BivariateSeries add(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries r(min_order(a.order(), b.order()));
  for (int n = 0; n <= r.order(); ++n) r.slice(n) = poly_add(a.slice(n), b.slice(n));
  r.normalize();
  return r;
}

BivariateSeries sub(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries r(min_order(a.order(), b.order()));
  for (int n = 0; n <= r.order(); ++n) r.slice(n) = poly_sub(a.slice(n), b.slice(n));
  r.normalize();
  return r;
}

BivariateSeries mul(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries r(min_order(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if (a.slice(i).empty()) continue;
    for (int j = 0; i + j <= r.order(); ++j) {
      if (b.slice(j).empty()) continue;
      r.slice(i + j) = poly_add(r.slice(i + j), poly_mul(a.slice(i), b.slice(j)));
    }
  }
  r.normalize();
  return r;
}

BivariateSeries sqrt_series(const BivariateSeries& a) {
  SPoly c0 = a.slice(0);
  while (!c0.empty() && c0.back() == 0) c0.pop_back();
  if (c0 != SPoly{1}) throw NonSquareConstantTerm();
  BivariateSeries r(a.order());
  r.slice(0) = {1};
  for (int n = 1; n <= a.order(); ++n) {
    SPoly acc = a.slice(n);
    for (int j = 1; j < n; ++j) acc = poly_sub(acc, poly_mul(r.slice(j), r.slice(n - j)));
    r.slice(n) = poly_scale(std::move(acc), BigRat(1, 2));
  }
  r.normalize();
  return r;
}

BivariateSeries h_closed_form(int N) {
  if (N < 0) throw std::domain_error("h_closed_form: order must be >= 0");
  // radicand 1 - (2+4s) t + (1+4s) t^2, to t-order N+1
  BivariateSeries radicand(N + 1);
  radicand.slice(0) = {1};
  radicand.slice(1) = {-2, -4};
  if (N + 1 >= 2) radicand.slice(2) = {1, 4};
  BivariateSeries root = sqrt_series(radicand);
  BivariateSeries numerator(N + 1);
  numerator.slice(0) = poly_sub(SPoly{1}, root.slice(0));
  numerator.slice(1) = poly_sub(SPoly{-1}, root.slice(1));
  for (int n = 2; n <= N + 1; ++n) numerator.slice(n) = poly_sub(SPoly{}, root.slice(n));
  numerator.normalize();
  if (!numerator.slice(0).empty())
    throw std::logic_error("h_closed_form: t^0 slice failed to cancel");
  // divide by 2 s t: shift down one t-power, drop the (zero) s^0 coefficient,
  // halve the rest
  BivariateSeries h(N);
  for (int n = 0; n <= N; ++n) {
    const SPoly& src = numerator.slice(n + 1);
    if (!src.empty() && src[0] != 0)
      throw std::logic_error("h_closed_form: s^0 coefficient of t^" + std::to_string(n + 1) +
                             " slice failed to cancel");
    SPoly dst(src.size() > 1 ? src.size() - 1 : 0);
    for (std::size_t m = 1; m < src.size(); ++m) dst[m - 1] = src[m] / 2;
    h.slice(n) = std::move(dst);
  }
  h.normalize();
  return h;
}

BivariateSeries h_fixed_point(int N, std::vector<BivariateSeries>* iterates) {
  if (N < 0) throw std::domain_error("h_fixed_point: order must be >= 0");
  // g = s t / (1 - t) = s (t + t^2 + ... + t^N)
  BivariateSeries g(N);
  g.slice(0) = {};
  for (int n = 1; n <= N; ++n) g.slice(n) = {0, 1};
  BivariateSeries h(N);
  h.slice(0) = {1};
  if (iterates) iterates->push_back(h);
  BivariateSeries one(N);
  one.slice(0) = {1};
  for (int iter = 0; iter <= N + 1; ++iter) {
    BivariateSeries next = add(one, mul(g, mul(h, h)));
    bool stable = next == h;
    h = std::move(next);
    if (iterates) iterates->push_back(h);
    if (stable) return h;
  }
  throw std::logic_error("h_fixed_point: no fixed point within " + std::to_string(N + 2) +
                         " iterations");
}

BivariateSeries h_series(int N) {
  BivariateSeries closed = h_closed_form(N);
  BivariateSeries fixed = h_fixed_point(N);
  if (!(closed == fixed))
    throw std::logic_error("h_series: closed form and functional-equation fixed point disagree");
  return closed;
}

}  // namespace wtcensus
