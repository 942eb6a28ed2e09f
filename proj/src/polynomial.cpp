#include "jmm/polynomial.hpp"

#include <sstream>

namespace jmm {

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  trim();
}

Polynomial Polynomial::monomial(std::size_t degree, const Rational& coeff) {
  Polynomial p;
  if (coeff != 0) {
    p.coeffs_.assign(degree + 1, Rational(0));
    p.coeffs_[degree] = coeff;
  }
  return p;
}

Rational Polynomial::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::eval(const Int& n) const { return eval_rational(Rational(n)); }

Rational Polynomial::eval_rational(const Rational& n) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r = *this;
  r += other;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial r = *this;
  r -= other;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return Polynomial();
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  if (s == 0) return Polynomial();
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c *= s;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator/(const Rational& s) const {
  if (s == 0) throw InvalidInput("division of polynomial by zero");
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c /= s;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

bool Polynomial::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

bool Polynomial::has_alternating_signs() const {
  int prev = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (*it == 0) continue;
    int s = sgn(*it);
    if (prev != 0 && s == prev) return false;
    prev = s;
  }
  return true;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

namespace {

void append_term(std::ostringstream& os, bool first, const Rational& c, std::size_t deg) {
  Rational a = c < 0 ? Rational(-c) : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  const bool fractional = a.get_den() != 1;
  if (deg == 0) {
    os << rational_to_string(a);
  } else {
    if (a != 1) {
      if (fractional)
        os << "(" << rational_to_string(a) << ")";
      else
        os << rational_to_string(a);
    }
    os << "n";
    if (deg > 1) os << "^" << deg;
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    append_term(os, first, coeffs_[i], i);
    first = false;
  }
  return os.str();
}

std::string Polynomial::to_string_common_denominator() const {
  if (is_zero()) return "0";
  Int lcm = 1;
  for (const auto& c : coeffs_) {
    Int d = c.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  if (lcm == 1) return to_string();
  Polynomial scaled = *this * Rational(lcm);
  return "(" + scaled.to_string() + ")/" + lcm.get_str();
}

Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

}  // namespace jmm
