#include "jmm/sympoly.hpp"

#include <algorithm>

namespace jmm {

int VarTable::intern(const std::string& name, const Rational& variance) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  const int id = static_cast<int>(names_.size());
  if (id >= 62) throw InvalidInput("variable registry full (ids must fit 6-bit packing)");
  names_.push_back(name);
  variances_.push_back(variance);
  index_.emplace(name, id);
  return id;
}

int VarTable::lookup(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

Monomial Monomial::variable(int id) {
  if (id < 0 || id >= 62) throw InvalidInput("variable id out of packing range");
  return Monomial((std::uint64_t(1) << 6) | static_cast<std::uint64_t>(id + 1));
}

int Monomial::degree() const {
  int d = 0;
  for (std::uint64_t k = key_; k > 1; k >>= 6) ++d;
  return d;
}

std::vector<int> Monomial::factors() const {
  std::vector<int> ids;
  for (std::uint64_t k = key_; k > 1; k >>= 6) ids.push_back(static_cast<int>(k & 63u) - 1);
  std::reverse(ids.begin(), ids.end());
  return ids;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<int> a = factors();
  const std::vector<int> b = other.factors();
  a.insert(a.end(), b.begin(), b.end());
  if (a.size() > 10) throw InvalidInput("monomial degree exceeds packing capacity (10)");
  std::sort(a.begin(), a.end());
  std::uint64_t key = 1;
  for (int id : a) key = (key << 6) | static_cast<std::uint64_t>(id + 1);
  return Monomial(key);
}

SymPoly::SymPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial::one().key(), constant);
}

SymPoly SymPoly::variable(int id) {
  SymPoly p;
  p.terms_.emplace(Monomial::variable(id).key(), Rational(1));
  return p;
}

void SymPoly::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m.key(), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  for (const auto& [key, coeff] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  for (const auto& [key, coeff] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, -coeff);
    if (!inserted) {
      it->second -= coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

SymPoly SymPoly::operator+(const SymPoly& other) const {
  SymPoly r = *this;
  r += other;
  return r;
}

SymPoly SymPoly::operator-(const SymPoly& other) const {
  SymPoly r = *this;
  r -= other;
  return r;
}

namespace {

// Merge two packed monomials without unpacking to vectors: both keys hold
// ascending 6-bit factor runs behind a leading 1; merge like sorted lists.
std::uint64_t merge_keys(std::uint64_t a, std::uint64_t b) {
  unsigned da = 0, db = 0;
  for (std::uint64_t k = a; k > 1; k >>= 6) ++da;
  for (std::uint64_t k = b; k > 1; k >>= 6) ++db;
  if (da + db > 10) throw InvalidInput("monomial degree exceeds packing capacity (10)");
  // extract factors most-significant-first
  unsigned ia = da, ib = db;
  std::uint64_t out = 1;
  while (ia > 0 || ib > 0) {
    const std::uint64_t fa = ia > 0 ? (a >> (6 * (ia - 1))) & 63u : ~std::uint64_t(0);
    const std::uint64_t fb = ib > 0 ? (b >> (6 * (ib - 1))) & 63u : ~std::uint64_t(0);
    if (fa <= fb) {
      out = (out << 6) | fa;
      --ia;
    } else {
      out = (out << 6) | fb;
      --ib;
    }
  }
  return out;
}

}  // namespace

SymPoly SymPoly::operator*(const SymPoly& other) const {
  SymPoly r;
  if (is_zero() || other.is_zero()) return r;
  r.terms_.reserve(terms_.size() * other.terms_.size() / 2 + 4);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : other.terms_) {
      const std::uint64_t key = merge_keys(ka, kb);
      auto [it, inserted] = r.terms_.try_emplace(key, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

SymPoly SymPoly::operator*(const Rational& s) const {
  SymPoly r;
  if (s == 0) return r;
  for (const auto& [key, coeff] : terms_) r.terms_.emplace(key, coeff * s);
  return r;
}

bool SymPoly::operator==(const SymPoly& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (const auto& [key, coeff] : terms_) {
    auto it = other.terms_.find(key);
    if (it == other.terms_.end() || it->second != coeff) return false;
  }
  return true;
}

Rational gaussian_expectation(const SymPoly& p, const VarTable& vars) {
  Rational total(0);
  for (const auto& [key, coeff] : p.terms()) {
    // exponent run-lengths over the packed ascending factors
    Rational factor(1);
    bool vanishes = false;
    std::uint64_t k = key;
    while (k > 1 && !vanishes) {
      const int id = static_cast<int>(k & 63u) - 1;
      int exp = 0;
      while (k > 1 && static_cast<int>(k & 63u) - 1 == id) {
        ++exp;
        k >>= 6;
      }
      if (exp % 2 != 0) {
        vanishes = true;
        break;
      }
      Rational v = vars.variance(id);
      Rational vpow(1);
      for (int t = 0; t < exp / 2; ++t) vpow *= v;
      factor *= Rational(wick_number(static_cast<unsigned>(exp))) * vpow;
    }
    if (!vanishes) total += coeff * factor;
  }
  return total;
}

}  // namespace jmm
