#include <doctest.h>

#include <random>

#include "jmm/barbell.hpp"
#include "jmm/jordan.hpp"

using namespace jmm;

namespace {

Rational random_small(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 2);
  return make_rational(num(rng), den(rng));
}

OctMatrix<Rational> random_hermitian(int n, std::mt19937& rng) {
  OctMatrix<Rational> x = OctMatrix<Rational>::zero(n);
  for (int j = 0; j < n; ++j) x.at(j, j).coord[0] = random_small(rng);
  for (int j = 0; j < n; ++j)
    for (int l = j + 1; l < n; ++l)
      for (int u = 0; u < 8; ++u) {
        const Rational v = random_small(rng);
        x.at(j, l).coord[u] = v;
        x.at(l, j).coord[u] = u == 0 ? v : -v;
      }
  return x;
}

SpinElem<Rational> random_spin(int n, std::mt19937& rng) {
  SpinElem<Rational> e;
  e.x0 = random_small(rng);
  for (int p = 0; p < n; ++p) e.x.push_back(random_small(rng));
  return e;
}

// bracketed matrix product following the same root-down direction word as
// the unit-word evaluation
OctMatrix<Rational> bracketed_product(const std::vector<OctMatrix<Rational>>& w,
                                      const NestingWord& nest, int step, std::size_t lo,
                                      std::size_t hi, const UnitTable& t) {
  if (hi - lo == 0) return w[lo];
  if (hi - lo == 1) return matrix_mul(w[lo], w[hi], t);
  if (nest.direction(step) == 'L')
    return matrix_mul(bracketed_product(w, nest, step + 1, lo, hi - 1, t), w[hi], t);
  return matrix_mul(w[lo], bracketed_product(w, nest, step + 1, lo + 1, hi, t), t);
}

}  // namespace

TEST_CASE("gaussian expectation basics") {
  VarTable vars;
  const int x = vars.intern("x", Rational(1));
  const SymPoly xp = SymPoly::variable(x);
  CHECK(gaussian_expectation(xp * xp * xp * xp, vars) == 3);
  CHECK(gaussian_expectation(xp * xp * xp * xp * xp, vars) == 0);
  const int h = vars.intern("h", make_rational(1, 2));
  const SymPoly hp = SymPoly::variable(h);
  CHECK(gaussian_expectation(hp * hp, vars) == make_rational(1, 2));
  CHECK(gaussian_expectation(xp * xp + hp * hp, vars) == make_rational(3, 2));
  // one-variable moments are the Wick numbers
  SymPoly power(1);
  for (int k = 1; k <= 12; ++k) {
    power = power * xp;
    CHECK(gaussian_expectation(power, vars) ==
          Rational(wick_number(static_cast<unsigned>(k))));
  }
}

TEST_CASE("trace form of the generic element") {
  VarTable vars;
  const SymPoly tr2 = trace_power_jordan(3, 2, vars, UnitTable::canonical());
  // Tr X^2 = sum_j d_j^2 + sum_{i, j<j'} 2 u_{i,jj'}^2: positive definite
  // diagonal quadratic form with coefficients 1 and 2
  SymPoly expected;
  for (int j = 0; j < 3; ++j) {
    const SymPoly d = SymPoly::variable(vars.lookup("d" + std::to_string(j)));
    expected += d * d;
  }
  for (int j = 0; j < 3; ++j)
    for (int l = j + 1; l < 3; ++l)
      for (int u = 0; u < 8; ++u) {
        const SymPoly v = SymPoly::variable(
            vars.lookup("u" + std::to_string(u) + "_" + std::to_string(j) + std::to_string(l)));
        expected += (v * v) * Rational(2);
      }
  CHECK(tr2 == expected);
  CHECK(gaussian_expectation(tr2, vars) > 0);
  CHECK(gaussian_expectation(tr2, vars) == 27);  // n=3
}

TEST_CASE("jordan power associativity on random elements") {
  const UnitTable& t = UnitTable::canonical();
  std::mt19937 rng(1984);
  for (int n = 1; n <= 3; ++n) {
    const auto x = random_hermitian(n, rng);
    std::vector<OctMatrix<Rational>> powers(9);
    powers[1] = x;
    for (int k = 2; k <= 8; ++k) powers[k] = jordan_product(x, powers[k - 1], t);
    for (int a = 1; a <= 7; ++a)
      for (int b = 1; a + b <= 8; ++b)
        CHECK(jordan_product(powers[a], powers[b], t).entries == powers[a + b].entries);
  }
  for (int n = 1; n <= 4; ++n) {
    const auto x = random_spin(n, rng);
    std::vector<SpinElem<Rational>> powers(9);
    powers[1] = x;
    for (int k = 2; k <= 8; ++k) powers[k] = spin_jordan_product(x, powers[k - 1]);
    for (int a = 1; a <= 7; ++a)
      for (int b = 1; a + b <= 8; ++b) {
        const auto lhs = spin_jordan_product(powers[a], powers[b]);
        CHECK(lhs.x0 == powers[a + b].x0);
        CHECK(lhs.x == powers[a + b].x);
      }
  }
}

TEST_CASE("jordan power equals the fully nested average (k=4)") {
  const UnitTable& t = UnitTable::canonical();
  std::mt19937 rng(1985);
  const auto x = random_hermitian(3, rng);
  const auto x4 = jordan_power(x, 4, t);
  OctMatrix<Rational> avg = OctMatrix<Rational>::zero(3);
  const std::vector<OctMatrix<Rational>> w(4, x);
  for (const auto& nest : enumerate_fully_nested(4)) {
    const auto p = bracketed_product(w, nest, 0, 0, 3, t);
    for (std::size_t i = 0; i < avg.entries.size(); ++i)
      for (int c = 0; c < 8; ++c) avg.entries[i].coord[c] += p.entries[i].coord[c];
  }
  for (auto& e : avg.entries)
    for (auto& c : e.coord) c /= 4;
  CHECK(avg.entries == x4.entries);
}

TEST_CASE("trace power paths agree (n=3, k<=4)") {
  const UnitTable& t = UnitTable::canonical();
  for (int k = 2; k <= 4; ++k) {
    VarTable va, vb;
    const SymPoly a = trace_power_jordan(3, k, va, t);
    const SymPoly b = trace_power_direct(3, k, vb, t);
    CHECK(a == b);  // registries intern identically by construction
    CHECK(gaussian_expectation(a, va) == gaussian_expectation(b, vb));
  }
  VarTable vars;
  CHECK_THROWS_AS(generic_albert_element(4, vars), InvalidInput);
  CHECK_THROWS_AS(generic_albert_element(0, vars), InvalidInput);
}

TEST_CASE("albert oracle point values") {
  // n=1 collapses to the scalar Gaussian
  CHECK(oracle_albert_moment(2, 1) == 1);
  CHECK(oracle_albert_moment(4, 1) == 3);
  CHECK(oracle_albert_moment(3, 1) == 0);
  // published bigon/square checks
  CHECK(oracle_albert_moment(2, 3) == 27);
  CHECK(oracle_albert_moment(4, 3) == 417);
  CHECK(oracle_albert_moment(2, 2) == 10);
  CHECK(oracle_albert_moment(4, 2) == 78);
  // mixed: two triangles
  CHECK(oracle_albert_mixed(MultiplicityVector::parse("3:2"), 3) == 2709);
  CHECK(oracle_albert_mixed(MultiplicityVector::parse("3:2"), 1) == 15);
}

TEST_CASE("spin trace polynomials") {
  VarTable vars;
  const int x0 = vars.intern("x0", Rational(1));
  const int r = vars.intern("r", Rational(1));
  // z0(k=2) = x0^2 + r, z0(k=3) = x0^3 + 3 x0 r
  const SymPoly z2 = spin_trace_power_closed(2, x0, r);
  SymPoly expect2 = SymPoly::variable(x0) * SymPoly::variable(x0) + SymPoly::variable(r);
  CHECK(z2 == expect2);
  const SymPoly z3 = spin_trace_power_closed(3, x0, r);
  SymPoly expect3 = SymPoly::variable(x0) * SymPoly::variable(x0) * SymPoly::variable(x0) +
                    SymPoly::variable(x0) * SymPoly::variable(r) * Rational(3);
  CHECK(z3 == expect3);

  // closed form matches the recursive Jordan power at explicit small n
  for (int n = 1; n <= 4; ++n) {
    VarTable ev;
    const SymSpinElem x = generic_spin_element(n, ev);
    SymPoly radius;
    for (int p = 0; p < n; ++p) radius += x.x[p] * x.x[p];
    for (int k = 1; k <= 8; ++k) {
      const SymSpinElem xk = spin_jordan_power(x, k);
      // expand the closed form with r -> |x|^2
      SymPoly closed;
      for (int i = k % 2 == 0 ? 0 : 1; i <= k; i += 2) {
        const int j = k - i;
        SymPoly term(Rational(binomial(static_cast<unsigned>(k), static_cast<unsigned>(i))));
        for (int t2 = 0; t2 < i; ++t2) term = term * x.x0;
        for (int t2 = 0; t2 < j / 2; ++t2) term = term * radius;
        closed += term;
      }
      CHECK(xk.x0 == closed);
    }
  }
}

TEST_CASE("spin oracle agrees with the closed-form rows") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 8; k += 2)
      CHECK(oracle_spin_moment(k, n) == spin_moment_closed(k).eval(Int(n)));
  CHECK(oracle_spin_moment(5, 3) == 0);
}

TEST_CASE("spin mixed oracle") {
  const auto m32 = MultiplicityVector::parse("3:2");
  const Polynomial sym = oracle_spin_mixed_poly(m32);
  CHECK(sym == Polynomial({Rational(15), Rational(36), Rational(9)}));
  // the n=1 scalar-Gaussian check: <(x0^3 + 3 x0 x1^2)^2> = 60
  CHECK(oracle_spin_mixed(m32, 1) == 60);
  CHECK(sym.eval(Int(1)) == 60);
  for (int n = 1; n <= 3; ++n) CHECK(oracle_spin_mixed(m32, n) == sym.eval(Int(n)));

  // diagram block model equals the oracle symbolically
  CHECK(spin_mixed_moment(m32) == sym);
  CHECK(spin_mixed_moment(MultiplicityVector::parse("4:2")) ==
        oracle_spin_mixed_poly(MultiplicityVector::parse("4:2")));
  CHECK(spin_mixed_moment(MultiplicityVector::parse("3:1,5:1")) ==
        oracle_spin_mixed_poly(MultiplicityVector::parse("3:1,5:1")));
}
