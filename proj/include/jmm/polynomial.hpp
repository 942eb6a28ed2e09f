// Univariate polynomials in the size parameter n with exact rational
// coefficients. Coefficients are stored ascending by power with trailing
// zeros trimmed; the zero polynomial has an empty coefficient list.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jmm/rational.hpp"

namespace jmm {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& constant);
  explicit Polynomial(long constant) : Polynomial(make_rational(constant)) {}
  explicit Polynomial(std::vector<Rational> ascending_coeffs);

  static Polynomial monomial(std::size_t degree, const Rational& coeff);
  // The polynomial n itself.
  static Polynomial n() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as 0.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t power) const;

  Rational eval(const Int& n) const;
  Rational eval_rational(const Rational& n) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& s) const;
  Polynomial operator/(const Rational& s) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  // True when every coefficient is an integer.
  bool is_integral() const;
  // True when the nonzero coefficients strictly alternate in sign from the
  // leading term down.
  bool has_alternating_signs() const;

  // Renders e.g. "4n^2 - 3n" or "n^3 + 21n^2 + 83n + 15"; fractional
  // coefficients appear parenthesised, e.g. "(9/8)n^2".
  std::string to_string() const;
  // Renders p(n)/q with q the least common denominator, e.g. "(15n + 1)/8".
  std::string to_string_common_denominator() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial operator*(const Rational& s, const Polynomial& p);

}  // namespace jmm
