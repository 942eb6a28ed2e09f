#include "jmm/series.hpp"

#include <algorithm>

namespace jmm {

Series Series::one(std::size_t order) {
  Series s(order);
  if (order > 0) s.coeffs_[0] = Polynomial(1);
  return s;
}

const Polynomial& Series::coeff(std::size_t k) const {
  static const Polynomial zero;
  return k < coeffs_.size() ? coeffs_[k] : zero;
}

void Series::set_coeff(std::size_t k, Polynomial p) {
  if (k >= order_) throw InvalidInput("series coefficient index beyond truncation order");
  coeffs_[k] = std::move(p);
}

Series Series::truncated(std::size_t order) const {
  Series r(order);
  for (std::size_t k = 0; k < std::min(order, order_); ++k) r.coeffs_[k] = coeffs_[k];
  return r;
}

Series Series::operator+(const Series& other) const {
  Series r(std::min(order_, other.order_));
  for (std::size_t k = 0; k < r.order_; ++k) r.coeffs_[k] = coeff(k) + other.coeff(k);
  return r;
}

Series Series::operator*(const Series& other) const {
  Series r(std::min(order_, other.order_));
  for (std::size_t i = 0; i < order_ && i < r.order_; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.order_ && i + j < r.order_; ++j) {
      if (other.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return r;
}

Series Series::operator*(const Rational& s) const {
  Series r(order_);
  for (std::size_t k = 0; k < order_; ++k) r.coeffs_[k] = coeffs_[k] * s;
  return r;
}

Series series_exp(const Series& s) {
  if (s.order() == 0) return Series(0);
  if (!s.coeff(0).is_zero()) throw InvalidInput("series_exp requires zero constant term");
  const std::size_t d = s.order();
  Series r(d);
  r.set_coeff(0, Polynomial(1));
  // r' = s' r, solved coefficient by coefficient:
  // (k+1) r_{k+1} = sum_{i=0..k} (i+1) s_{i+1} r_{k-i}
  for (std::size_t k = 0; k + 1 < d; ++k) {
    Polynomial acc;
    for (std::size_t i = 0; i <= k; ++i) {
      if (i + 1 >= d) break;
      if (s.coeff(i + 1).is_zero()) continue;
      acc += s.coeff(i + 1) * r.coeff(k - i) * Rational(static_cast<long>(i + 1));
    }
    r.set_coeff(k + 1, acc / Rational(static_cast<long>(k + 1)));
  }
  return r;
}

Series series_log(const Series& s) {
  if (s.order() == 0) return Series(0);
  if (s.coeff(0) != Polynomial(1)) throw InvalidInput("series_log requires constant term one");
  const std::size_t d = s.order();
  // lp = (log s)' from s lp = s', then integrate.
  std::vector<Polynomial> lp(d);
  for (std::size_t k = 0; k + 1 < d; ++k) {
    Polynomial acc = s.coeff(k + 1) * Rational(static_cast<long>(k + 1));
    for (std::size_t i = 1; i <= k; ++i) {
      if (s.coeff(i).is_zero() || lp[k - i].is_zero()) continue;
      acc -= s.coeff(i) * lp[k - i];
    }
    lp[k] = std::move(acc);
  }
  Series r(d);
  for (std::size_t k = 1; k < d; ++k) r.set_coeff(k, lp[k - 1] / Rational(static_cast<long>(k)));
  return r;
}

Series laplace_transform(const Series& s) {
  Series r(s.order());
  for (std::size_t k = 0; k < s.order(); ++k)
    r.set_coeff(k, s.coeff(k) * Rational(factorial(static_cast<unsigned>(k))));
  return r;
}

Series borel_hadamard(const Series& s) {
  Series r(s.order());
  for (std::size_t k = 0; k < s.order(); ++k)
    r.set_coeff(k, s.coeff(k) / Rational(factorial(static_cast<unsigned>(k))));
  return r;
}

Series substitute_square(const Series& s) {
  if (s.order() == 0) return Series(0);
  Series r(2 * s.order() - 1);
  for (std::size_t k = 0; k < s.order(); ++k) r.set_coeff(2 * k, s.coeff(k));
  return r;
}

}  // namespace jmm
