#pragma once

#include <stdexcept>
#include <vector>

#include "wtcensus/numbers.hpp"

namespace wtcensus {

class DivisionByNonUnit : public std::domain_error {
 public:
  DivisionByNonUnit() : std::domain_error("series division needs a nonzero constant term") {}
};

class NonSquareConstantTerm : public std::domain_error {
 public:
  NonSquareConstantTerm()
      : std::domain_error("series square root needs a perfect-square constant term") {}
};

// Power series in t truncated at a fixed order, with exact rational
// coefficients. Binary operations truncate to the smaller operand order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
  TruncatedSeries(std::initializer_list<BigRat> coeffs) : coeffs_(coeffs) {}

  static TruncatedSeries constant(const BigRat& c, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigRat& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  void set_coeff(int i, const BigRat& v) { coeffs_[static_cast<std::size_t>(i)] = v; }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<BigRat> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);  // b(0) != 0
TruncatedSeries sqrt_series(const TruncatedSeries& a);  // a(0) a rational square

// All coefficients must be integers; throws std::logic_error otherwise.
std::vector<BigInt> integer_coefficients(const TruncatedSeries& s);

// (1 - t - sqrt(1 - 6t + 5t^2)) / (2t) up to order N. The root branch is the
// one regular at t = 0: the numerator's constant term cancels exactly and the
// division by 2t becomes a shift. Coefficient n is a_n.
TruncatedSeries f_series(int N);

// Series in t up to order N whose t^n coefficient is a polynomial in s of
// degree <= n with exact rational coefficients. Slice polynomials are kept
// free of trailing zeros.
class BivariateSeries {
 public:
  using SPoly = std::vector<BigRat>;  // dense in s, index = s-power

  explicit BivariateSeries(int order) : slices_(static_cast<std::size_t>(order) + 1) {}

  int order() const { return static_cast<int>(slices_.size()) - 1; }
  const SPoly& slice(int n) const { return slices_[static_cast<std::size_t>(n)]; }
  SPoly& slice(int n) { return slices_[static_cast<std::size_t>(n)]; }

  BigRat coeff(int m, int n) const;     // of s^m t^n; 0 outside stored range
  BigInt coeff_int(int m, int n) const; // asserts the coefficient is integral

  TruncatedSeries at_s_one() const;     // substitute s = 1

  void normalize();  // strip trailing zero s-coefficients in every slice
  bool operator==(const BivariateSeries&) const = default;

 private:
  std::vector<SPoly> slices_;
};

BivariateSeries add(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries sub(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries mul(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries sqrt_series(const BivariateSeries& a);  // constant slice must be [1]

// Closed form (1 - t - sqrt(1 - (2+4s)t + (1+4s)t^2)) / (2st) up to t-order N;
// the t and s divisions are exact shifts, as for f_series.
BivariateSeries h_closed_form(int N);

// Least fixed point of h = 1 + (st/(1-t)) h^2 in the truncated ring, starting
// from h = 1. Each iteration freezes at least one more t-order; iterates, if
// requested, receive every intermediate value including the initial one.
BivariateSeries h_fixed_point(int N, std::vector<BivariateSeries>* iterates = nullptr);

// Both routes, compared coefficient-for-coefficient; throws std::logic_error
// if they ever disagree. Coefficient of s^m t^n is b_{m,n}.
BivariateSeries h_series(int N);

}  // namespace wtcensus
