// Exact scalar arithmetic: arbitrary-precision rationals plus the small
// combinatorial counting functions used throughout (double factorials,
// binomials). All arithmetic in this project is exact; no floating point.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jmm {

using Int = mpz_class;
using Rational = mpq_class;

// Thrown when an operation's input contract is violated.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an enumeration exceeds its budget and no override was given.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p". Throws InvalidInput on malformed strings.
Rational rational_from_string(const std::string& s);

// Canonical "p/q" form; bare "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

Int factorial(unsigned k);
Int binomial(unsigned n, unsigned k);

// Wick number w(k) = (k-1)!!, the number of perfect pairings of k points;
// zero for odd k. w(0) = 1.
Int wick_number(unsigned k);

// Even double factorial k!! for even k, zero for odd k. 0!! = 1.
Int even_double_factorial(unsigned k);

}  // namespace jmm
