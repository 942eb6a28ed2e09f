#include <doctest.h>

#include <random>

#include "jmm/json_io.hpp"
#include "jmm/polynomial.hpp"
#include "jmm/rational.hpp"

using namespace jmm;

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 7);
  return make_rational(num(rng), den(rng));
}

Polynomial random_polynomial(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 5);
  std::vector<Rational> coeffs(deg(rng) + 1);
  for (auto& c : coeffs) c = random_rational(rng);
  return Polynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(rational_to_string(make_rational(-5, 8)) == "-5/8");
  CHECK(rational_to_string(make_rational(6, 3)) == "2");
  CHECK(rational_from_string("-5/8") == make_rational(-5, 8));
  CHECK(rational_from_string("417") == Rational(417));
  CHECK_THROWS_AS(rational_from_string(""), InvalidInput);
  CHECK_THROWS_AS(rational_from_string("x/2"), InvalidInput);
}

TEST_CASE("counting functions") {
  CHECK(wick_number(0) == 1);
  CHECK(wick_number(2) == 1);
  CHECK(wick_number(4) == 3);
  CHECK(wick_number(6) == 15);
  CHECK(wick_number(8) == 105);
  CHECK(wick_number(12) == 10395);
  CHECK(wick_number(5) == 0);
  CHECK(even_double_factorial(0) == 1);
  CHECK(even_double_factorial(2) == 2);
  CHECK(even_double_factorial(6) == 48);
  CHECK(even_double_factorial(3) == 0);
  CHECK(binomial(6, 4) == 15);
}

TEST_CASE("rational ring laws on randomized inputs") {
  std::mt19937 rng(20170611);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a + 0 == a);
    CHECK(a * 1 == a);
  }
}

TEST_CASE("polynomial ring laws on randomized inputs") {
  std::mt19937 rng(20170612);
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial a = random_polynomial(rng), b = random_polynomial(rng),
                     c = random_polynomial(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Polynomial());
    const Rational x = random_rational(rng);
    CHECK((a * b).eval_rational(x) == a.eval_rational(x) * b.eval_rational(x));
  }
}

TEST_CASE("polynomial invariants") {
  const Polynomial p({Rational(0), Rational(-3), Rational(4)});  // 4n^2 - 3n
  CHECK(p.degree() == 2);
  CHECK(p.eval(Int(3)) == 27);
  CHECK(p.eval(Int(0)) == 0);
  CHECK(p.to_string() == "4n^2 - 3n");

  // trailing zeros trimmed; zero polynomial has empty coefficient list
  CHECK(Polynomial({Rational(1), Rational(0)}).coeffs().size() == 1);
  CHECK(Polynomial({Rational(0)}).is_zero());
  CHECK(Polynomial().to_string() == "0");

  const Polynomial mixed({Rational(0), Rational(147), Rational(-324), Rational(192)});
  CHECK(mixed.eval(Int(1)) == 15);
  CHECK(mixed.eval(Int(3)) == 2709);
  CHECK(mixed.is_integral());
  CHECK(mixed.has_alternating_signs());

  CHECK(Polynomial({Rational(3), Rational(8), Rational(1)}).to_string() == "n^2 + 8n + 3");
  const Polynomial half({make_rational(15, 8), make_rational(9, 2), make_rational(9, 8)});
  CHECK(half.to_string() == "(9/8)n^2 + (9/2)n + 15/8");
  CHECK(half.to_string_common_denominator() == "(9n^2 + 36n + 15)/8");
}

TEST_CASE("polynomial json round trip") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial p = random_polynomial(rng);
    CHECK(polynomial_from_json(to_json(p)) == p);
  }
  const Polynomial p({Rational(0), Rational(-3), Rational(4)});
  CHECK(to_json(p).dump() == R"({"coeffs":["0","-3","4"]})");
}
