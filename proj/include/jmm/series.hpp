// Truncated formal power series in x whose coefficients are polynomials in
// n. The truncation order is an exclusive bound: a series of order d stores
// coefficients of x^0 .. x^{d-1}. Operations never silently extend the
// order, so absent coefficients are never mistaken for true zeros.
#pragma once

#include <cstddef>
#include <vector>

#include "jmm/polynomial.hpp"

namespace jmm {

class Series {
 public:
  explicit Series(std::size_t order) : order_(order), coeffs_(order) {}

  static Series zero(std::size_t order) { return Series(order); }
  static Series one(std::size_t order);

  std::size_t order() const { return order_; }
  const Polynomial& coeff(std::size_t k) const;
  void set_coeff(std::size_t k, Polynomial p);

  Series truncated(std::size_t order) const;

  Series operator+(const Series& other) const;  // order = min of the two
  Series operator*(const Series& other) const;  // order = min of the two
  Series operator*(const Rational& s) const;
  bool operator==(const Series& other) const { return order_ == other.order_ && coeffs_ == other.coeffs_; }

 private:
  std::size_t order_;
  std::vector<Polynomial> coeffs_;
};

// exp of a series with zero constant term; throws InvalidInput otherwise.
Series series_exp(const Series& s);

// log of a series with constant term one; throws InvalidInput otherwise.
Series series_log(const Series& s);

// Multiplies the coefficient of x^k by k! (turns an egf into an ogf).
Series laplace_transform(const Series& s);

// Divides the coefficient of x^m by m! (Hadamard product with exp; the
// inverse of laplace_transform).
Series borel_hadamard(const Series& s);

// Sends the coefficient of x^k to x^{2k}; the result has order 2*order-1
// (callers truncate as needed).
Series substitute_square(const Series& s);

}  // namespace jmm
