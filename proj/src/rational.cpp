#include "jmm/rational.hpp"

namespace jmm {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw InvalidInput("empty rational string");
  Rational q;
  if (q.set_str(s, 10) != 0) throw InvalidInput("malformed rational: " + s);
  if (q.get_den() == 0) throw InvalidInput("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Int factorial(unsigned k) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int wick_number(unsigned k) {
  if (k % 2 != 0) return 0;
  Int r = 1;
  for (unsigned t = k; t > 1; t -= 2) r *= t - 1;
  return r;
}

Int even_double_factorial(unsigned k) {
  if (k % 2 != 0) return 0;
  Int r = 1;
  for (unsigned t = k; t > 0; t -= 2) r *= t;
  return r;
}

}  // namespace jmm
