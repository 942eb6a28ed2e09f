#include <doctest.h>

#include <random>
#include <set>

#include "jmm/octonion.hpp"

using namespace jmm;

namespace {

Octonion<Rational> random_octonion(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  Octonion<Rational> o;
  for (int i = 0; i < 8; ++i) o.coord[i] = make_rational(num(rng), den(rng));
  return o;
}

void check_table_invariants(const UnitTable& t) {
  // identity, squares, anticommutation
  for (int i = 0; i < 8; ++i) {
    CHECK(t.mul({1, 0}, {1, i}) == SignedUnit{1, i});
    CHECK(t.mul({1, i}, {1, 0}) == SignedUnit{1, i});
  }
  for (int i = 1; i < 8; ++i) CHECK(t.mul({1, i}, {1, i}) == SignedUnit{-1, 0});
  for (int i = 1; i < 8; ++i)
    for (int j = 1; j < 8; ++j) {
      if (i == j) continue;
      const SignedUnit ij = t.mul({1, i}, {1, j});
      const SignedUnit ji = t.mul({1, j}, {1, i});
      CHECK(ij.index == ji.index);
      CHECK(ij.sign == -ji.sign);
      CHECK(ij.index != 0);  // off-diagonal imaginary products stay imaginary
    }

  // the 7 lines form a Fano plane: every imaginary pair on exactly one line
  std::set<std::set<int>> lines;
  for (const auto& line : t.lines()) lines.insert({line[0], line[1], line[2]});
  CHECK(lines.size() == 7);
  for (int i = 1; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      int on = 0;
      for (const auto& line : lines)
        if (line.count(i) != 0 && line.count(j) != 0) ++on;
      CHECK(on == 1);
      // the product's index closes the line
      const auto& line = t.line_through(i, j);
      const SignedUnit ij = t.mul({1, i}, {1, j});
      CHECK((ij.index == line[0] || ij.index == line[1] || ij.index == line[2]));
    }

  // line triples associate, off-line triples anti-associate
  auto assoc = [&](int a, int b, int c) {
    const SignedUnit left = t.mul(t.mul({1, a}, {1, b}), {1, c});
    const SignedUnit right = t.mul({1, a}, t.mul({1, b}, {1, c}));
    CHECK(left.index == right.index);
    return left.sign == right.sign;
  };
  for (int a = 1; a < 8; ++a)
    for (int b = 1; b < 8; ++b)
      for (int c = 1; c < 8; ++c) {
        if (a == b || b == c || a == c) {
          CHECK(assoc(a, b, c));  // repeated indices stay in a quaternion subalgebra
          continue;
        }
        const auto& line = t.line_through(a, b);
        const bool on_line = line[0] == c || line[1] == c || line[2] == c;
        CHECK(assoc(a, b, c) == on_line);
      }
}

}  // namespace

TEST_CASE("canonical table invariants") {
  const UnitTable& t = UnitTable::canonical();
  check_table_invariants(t);
  // pinned products
  CHECK(t.mul({1, 1}, {1, 2}) == SignedUnit{1, 3});   // e2 e3 = e4
  CHECK(t.mul({1, 1}, {1, 6}) == SignedUnit{-1, 7});  // e2 e7 = -e8
  CHECK(t.mul({1, 4}, {1, 4}) == SignedUnit{-1, 0});  // e5 e5 = -e1
}

TEST_CASE("reversed table is a valid orientation too") {
  check_table_invariants(UnitTable::reversed());
}

TEST_CASE("sign composition in unit products") {
  const UnitTable& t = UnitTable::canonical();
  CHECK(t.mul({-1, 1}, {1, 2}) == SignedUnit{-1, 3});
  CHECK(t.mul({-1, 1}, {-1, 2}) == SignedUnit{1, 3});
}

TEST_CASE("conjugation, trace and norm") {
  const UnitTable& t = UnitTable::canonical();
  const auto e1 = Octonion<Rational>::unit(0);
  const auto e5 = Octonion<Rational>::unit(4);
  CHECK(conjugate(e1) == e1);
  CHECK(conjugate(e5).coord[4] == -1);

  std::mt19937 rng(90125);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_octonion(rng);
    CHECK(conjugate(conjugate(a)) == a);
    CHECK(oct_trace(a) == a.coord[0] * 2);
    // Norm a = a * conj(a)
    CHECK(oct_mul(a, conjugate(a), t).coord[0] == oct_norm(a));
    const auto b = random_octonion(rng);
    CHECK(oct_norm(oct_mul(a, b, t)) == oct_norm(a) * oct_norm(b));
    CHECK(oct_mul(Octonion<Rational>::unit(0), a, t) == a);
    CHECK(oct_mul_real_part(a, b) == oct_mul(a, b, t).coord[0]);
  }
  for (int i = 0; i < 8; ++i) CHECK(oct_norm(Octonion<Rational>::unit(i)) == 1);
}

TEST_CASE("alternativity on randomized octonions") {
  const UnitTable& t = UnitTable::canonical();
  std::mt19937 rng(90126);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_octonion(rng);
    const auto b = random_octonion(rng);
    CHECK(oct_mul(oct_mul(a, b, t), a, t) == oct_mul(a, oct_mul(b, a, t), t));
    CHECK(oct_mul(a, oct_mul(a, b, t), t) == oct_mul(oct_mul(a, a, t), b, t));
  }
}
