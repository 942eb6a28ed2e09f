#include "jmm/jordan.hpp"

#include <string>

namespace jmm {

namespace {

std::string diag_name(int j) { return "d" + std::to_string(j); }

std::string off_name(int unit, int j, int l) {
  return "u" + std::to_string(unit) + "_" + std::to_string(j) + std::to_string(l);
}

}  // namespace

SymOctMatrix generic_albert_element(int n, VarTable& vars) {
  if (n < 1 || n > 3)
    throw InvalidInput("no Hermitian octonion Jordan algebra exists beyond n = 3");
  SymOctMatrix x = SymOctMatrix::zero(n);
  for (int j = 0; j < n; ++j) {
    const int id = vars.intern(diag_name(j), Rational(1));
    x.at(j, j).coord[0] = SymPoly::variable(id);
  }
  for (int j = 0; j < n; ++j)
    for (int l = j + 1; l < n; ++l)
      for (int unit = 0; unit < 8; ++unit) {
        const int id = vars.intern(off_name(unit, j, l), make_rational(1, 2));
        x.at(j, l).coord[unit] = SymPoly::variable(id);
        // Hermitian transpose: real part symmetric, imaginary antisymmetric
        x.at(l, j).coord[unit] =
            unit == 0 ? SymPoly::variable(id) : SymPoly() - SymPoly::variable(id);
      }
  return x;
}

SymSpinElem generic_spin_element(int n, VarTable& vars) {
  SymSpinElem e;
  e.x0 = SymPoly::variable(vars.intern("x0", Rational(1)));
  e.x.reserve(n);
  for (int p = 1; p <= n; ++p)
    e.x.push_back(SymPoly::variable(vars.intern("x" + std::to_string(p), Rational(1))));
  return e;
}

SymPoly trace_power_jordan(int n, int k, VarTable& vars, const UnitTable& table) {
  const SymOctMatrix x = generic_albert_element(n, vars);
  if (k == 1) return matrix_trace_real(x);
  const SymOctMatrix p = jordan_power(x, k - 1, table);
  return jordan_trace_contract(x, p);
}

SymPoly trace_power_direct(int n, int k, VarTable& vars, const UnitTable& table) {
  const SymOctMatrix x = generic_albert_element(n, vars);
  FnCache cache;
  SymPoly out;
  std::vector<std::uint8_t> units(k, 0);
  std::vector<int> js(k, 0);
  for (;;) {
    const FnValue fnv = fn_average_value(units, table, &cache);
    if (fnv.unit == 0 && fnv.num != 0) {
      const Rational weight = fnv.value();
      // walk monomials A^{i_1}_{j_1 j_2} ... A^{i_k}_{j_k j_1}
      std::fill(js.begin(), js.end(), 0);
      for (;;) {
        SymPoly term(weight);
        bool zero = false;
        for (int r = 0; r < k && !zero; ++r) {
          const int a = js[r], b = js[(r + 1) % k];
          const SymPoly& entry = x.at(a, b).coord[units[r]];
          if (entry.is_zero())
            zero = true;
          else
            term = term * entry;
        }
        if (!zero) out += term;
        int r = 0;
        for (; r < k; ++r) {
          if (js[r] < n - 1) {
            ++js[r];
            break;
          }
          js[r] = 0;
        }
        if (r == k) break;
      }
    }
    int i = 0;
    for (; i < k; ++i) {
      if (units[i] < 7) {
        ++units[i];
        break;
      }
      units[i] = 0;
    }
    if (i == k) break;
  }
  return out;
}

SymPoly spin_trace_power_closed(int k, int x0_id, int r_id) {
  SymPoly out;
  const SymPoly x0 = SymPoly::variable(x0_id);
  const SymPoly r = SymPoly::variable(r_id);
  for (int i = k % 2 == 0 ? 0 : 1; i <= k; i += 2) {
    const int j = k - i;
    SymPoly term(Rational(binomial(static_cast<unsigned>(k), static_cast<unsigned>(i))));
    for (int t = 0; t < i; ++t) term = term * x0;
    for (int t = 0; t < j / 2; ++t) term = term * r;
    out += term;
  }
  return out;
}

Rational oracle_albert_moment(int k, int n, const UnitTable& table) {
  if (k % 2 != 0) return Rational(0);
  VarTable vars;
  return gaussian_expectation(trace_power_jordan(n, k, vars, table), vars);
}

Rational oracle_albert_mixed(const MultiplicityVector& m, int n, const UnitTable& table) {
  VarTable vars;
  const SymOctMatrix x = generic_albert_element(n, vars);
  SymPoly product(1);
  for (auto [k, mk] : m.counts) {
    SymPoly tr;
    if (k == 1) {
      tr = matrix_trace_real(x);
    } else {
      const SymOctMatrix p = jordan_power(x, k - 1, table);
      tr = jordan_trace_contract(x, p);
    }
    for (int copy = 0; copy < mk; ++copy) product = product * tr;
  }
  return gaussian_expectation(product, vars);
}

Rational oracle_spin_moment(int k, int n) {
  if (k % 2 != 0) return Rational(0);
  if (k == 0) return Rational(1);
  VarTable vars;
  const SymSpinElem x = generic_spin_element(n, vars);
  const SymSpinElem p = spin_jordan_power(x, k);
  return gaussian_expectation(p.x0, vars);
}

Rational oracle_spin_mixed(const MultiplicityVector& m, int n) {
  VarTable vars;
  const SymSpinElem x = generic_spin_element(n, vars);
  SymPoly product(1);
  for (auto [k, mk] : m.counts) {
    const SymSpinElem p = spin_jordan_power(x, k);
    for (int copy = 0; copy < mk; ++copy) product = product * p.x0;
  }
  return gaussian_expectation(product, vars);
}

Polynomial oracle_spin_mixed_poly(const MultiplicityVector& m) {
  VarTable vars;
  const int x0_id = vars.intern("x0", Rational(1));
  const int r_id = vars.intern("r", Rational(1));  // placeholder variance, unused
  SymPoly product(1);
  for (auto [k, mk] : m.counts) {
    const SymPoly z0 = spin_trace_power_closed(k, x0_id, r_id);
    for (int copy = 0; copy < mk; ++copy) product = product * z0;
  }
  // <x0^a r^b> = w(a) * prod_{t<b} (n + 2t)
  Polynomial out;
  for (const auto& [key, coeff] : product.terms()) {
    int a = 0, b = 0;
    for (std::uint64_t k2 = key; k2 > 1; k2 >>= 6) {
      const int id = static_cast<int>(k2 & 63u) - 1;
      (id == x0_id ? a : b) += 1;
    }
    const Int wa = wick_number(static_cast<unsigned>(a));
    if (wa == 0) continue;
    Polynomial radial(1);
    for (int t = 0; t < b; ++t) radial = radial * (Polynomial::n() + Polynomial(make_rational(2 * t)));
    out += radial * (coeff * Rational(wa));
  }
  return out;
}

}  // namespace jmm
