// Jordan-algebra elements over exact coefficient rings: Hermitian octonion
// matrices (the Albert algebra at n = 3, its n <= 3 relatives) and spin
// factor elements, with Jordan powers and the symbolic Wick oracle for
// Gaussian trace moments.
#pragma once

#include <vector>

#include "jmm/nesting.hpp"
#include "jmm/octonion.hpp"
#include "jmm/polygon.hpp"
#include "jmm/sympoly.hpp"

namespace jmm {

// Square matrix with octonion entries over coefficient ring C.
template <typename C>
struct OctMatrix {
  int n = 0;
  std::vector<Octonion<C>> entries;  // row-major

  static OctMatrix zero(int n) {
    OctMatrix m;
    m.n = n;
    m.entries.resize(static_cast<std::size_t>(n) * n);
    return m;
  }
  Octonion<C>& at(int j, int l) { return entries[static_cast<std::size_t>(j) * n + l]; }
  const Octonion<C>& at(int j, int l) const {
    return entries[static_cast<std::size_t>(j) * n + l];
  }
};

template <typename C>
OctMatrix<C> matrix_mul(const OctMatrix<C>& a, const OctMatrix<C>& b, const UnitTable& table) {
  OctMatrix<C> r = OctMatrix<C>::zero(a.n);
  for (int j = 0; j < a.n; ++j)
    for (int l = 0; l < a.n; ++l)
      for (int m = 0; m < a.n; ++m) r.at(j, l) = r.at(j, l) + oct_mul(a.at(j, m), b.at(m, l), table);
  return r;
}

template <typename C>
OctMatrix<C> jordan_product(const OctMatrix<C>& a, const OctMatrix<C>& b, const UnitTable& table) {
  OctMatrix<C> ab = matrix_mul(a, b, table);
  OctMatrix<C> ba = matrix_mul(b, a, table);
  OctMatrix<C> r = OctMatrix<C>::zero(a.n);
  const Rational half = make_rational(1, 2);
  for (std::size_t i = 0; i < r.entries.size(); ++i)
    for (int c = 0; c < 8; ++c)
      r.entries[i].coord[c] = (ab.entries[i].coord[c] + ba.entries[i].coord[c]) * half;
  return r;
}

// X^k = X . X^{k-1} (left-iterated Jordan power).
template <typename C>
OctMatrix<C> jordan_power(const OctMatrix<C>& x, int k, const UnitTable& table) {
  if (k < 1) throw InvalidInput("jordan_power requires k >= 1");
  OctMatrix<C> p = x;
  for (int i = 1; i < k; ++i) p = jordan_product(x, p, table);
  return p;
}

// Sum of the real coordinates of the diagonal (the imaginary diagonal
// coordinates of a Hermitian power vanish identically).
template <typename C>
C matrix_trace_real(const OctMatrix<C>& x) {
  C t{};
  for (int j = 0; j < x.n; ++j) t += x.at(j, j).coord[0];
  return t;
}

// Tr(X . P) computed by contraction: sum_{j,m} Re(X_{jm} P_{mj}).
template <typename C>
C jordan_trace_contract(const OctMatrix<C>& x, const OctMatrix<C>& p) {
  C t{};
  for (int j = 0; j < x.n; ++j)
    for (int m = 0; m < x.n; ++m) t += oct_mul_real_part(x.at(j, m), p.at(m, j));
  return t;
}

// Spin factor element (x0, x) over coefficient ring C.
template <typename C>
struct SpinElem {
  C x0{};
  std::vector<C> x;
};

template <typename C>
SpinElem<C> spin_jordan_product(const SpinElem<C>& a, const SpinElem<C>& b) {
  SpinElem<C> r;
  r.x0 = a.x0 * b.x0;
  for (std::size_t p = 0; p < a.x.size(); ++p) r.x0 += a.x[p] * b.x[p];
  r.x.resize(a.x.size());
  for (std::size_t p = 0; p < a.x.size(); ++p) r.x[p] = a.x0 * b.x[p] + b.x0 * a.x[p];
  return r;
}

template <typename C>
SpinElem<C> spin_jordan_power(const SpinElem<C>& a, int k) {
  if (k < 1) throw InvalidInput("spin power requires k >= 1");
  SpinElem<C> p = a;
  for (int i = 1; i < k; ++i) p = spin_jordan_product(a, p);
  return p;
}

// ----- symbolic generic elements and the Wick oracle -----

using SymOctMatrix = OctMatrix<SymPoly>;
using SymSpinElem = SpinElem<SymPoly>;

// Generic Hermitian matrix of canonical free variables: diagonal real
// variables of variance 1, one variable per (unit, j < j') of variance
// 1/2, with the antisymmetric sign applied on access for imaginary units.
// Only n in 1..3 carries a Jordan structure.
SymOctMatrix generic_albert_element(int n, VarTable& vars);

// Generic spin element: x0 and n vector coordinates, all of variance 1.
SymSpinElem generic_spin_element(int n, VarTable& vars);

// Tr X^k via the recursive Jordan power (path a).
SymPoly trace_power_jordan(int n, int k, VarTable& vars, const UnitTable& table);

// Tr X^k assembled directly from walk monomials weighted by fn averages of
// the unit words (path b); restricted tuples with real-valued products.
SymPoly trace_power_direct(int n, int k, VarTable& vars, const UnitTable& table);

// z0 coordinate of x^k in the closed binomial form, over variables x0 and
// r = |x|^2: z0 = sum_{i+j=k, j even} binom(k,i) x0^i r^{j/2}.
SymPoly spin_trace_power_closed(int k, int x0_id, int r_id);

// <Tr X^k> over the Albert-type algebras (n <= 3), symbolically by Wick.
Rational oracle_albert_moment(int k, int n, const UnitTable& table = UnitTable::canonical());

// <prod_k (Tr X^k)^{m_k}> over the n <= 3 octonion Hermitian matrices.
Rational oracle_albert_mixed(const MultiplicityVector& m, int n,
                             const UnitTable& table = UnitTable::canonical());

// <Tr x^k> over the spin factor at explicit n, by full monomial expansion.
Rational oracle_spin_moment(int k, int n);

// <prod_k (Tr x^k)^{m_k}> over the spin factor at explicit n.
Rational oracle_spin_mixed(const MultiplicityVector& m, int n);

// Same mixed expectation with n symbolic, through <x0^a |x|^{2b}> =
// w(a) * prod_{t<b} (n + 2t).
Polynomial oracle_spin_mixed_poly(const MultiplicityVector& m);

}  // namespace jmm
