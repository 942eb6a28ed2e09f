// Multivariate symbolic polynomials over exact rationals, with Gaussian
// expectation by Wick's theorem. Variables live in a registry that records
// each one's variance; monomials are canonical sorted multisets of
// variable ids packed into 64 bits (at most 10 factors, ids below 64 --
// ample for the generic Albert element at n <= 3 and spin elements at
// small n).
#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "jmm/rational.hpp"

namespace jmm {

class VarTable {
 public:
  // Returns the id for a named variable, creating it on first use.
  int intern(const std::string& name, const Rational& variance);
  int lookup(const std::string& name) const;  // -1 when absent
  const std::string& name(int id) const { return names_[id]; }
  const Rational& variance(int id) const { return variances_[id]; }
  int size() const { return static_cast<int>(names_.size()); }

 private:
  std::vector<std::string> names_;
  std::vector<Rational> variances_;
  std::unordered_map<std::string, int> index_;
};

// A monomial is a sorted sequence of variable ids (with repetition),
// packed 6 bits per factor behind a leading 1. Degree <= 10, ids <= 62.
class Monomial {
 public:
  Monomial() : key_(1) {}
  static Monomial one() { return Monomial(); }
  static Monomial variable(int id);

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return key_ == other.key_; }
  std::uint64_t key() const { return key_; }
  int degree() const;
  std::vector<int> factors() const;  // ascending ids with repetition

 private:
  explicit Monomial(std::uint64_t key) : key_(key) {}
  std::uint64_t key_;
};

class SymPoly {
 public:
  SymPoly() = default;
  explicit SymPoly(const Rational& constant);
  explicit SymPoly(long constant) : SymPoly(Rational(constant)) {}
  static SymPoly variable(int id);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::unordered_map<std::uint64_t, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& coeff);
  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  SymPoly operator+(const SymPoly& other) const;
  SymPoly operator-(const SymPoly& other) const;
  SymPoly operator*(const SymPoly& other) const;
  SymPoly operator*(const Rational& s) const;
  bool operator==(const SymPoly& other) const;
  bool operator==(long c) const { return *this == SymPoly(c); }

 private:
  std::unordered_map<std::uint64_t, Rational> terms_;
};

// Exact Gaussian expectation: per monomial the product over variables of
// (e-1)!! * variance^{e/2} for even exponents e, zero otherwise; extended
// linearly.
Rational gaussian_expectation(const SymPoly& p, const VarTable& vars);

}  // namespace jmm
