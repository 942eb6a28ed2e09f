// Octonion basis-unit arithmetic. Units are indexed 0..7 with unit 0 the
// real identity (the paper-facing labels e1..e8 are these indices plus
// one). Products of imaginary units follow an oriented Fano plane given as
// seven ordered triples (a,b,c): ea*eb = ec cyclically, with
// anticommutation off cyclic order and ei*ei = -1 for imaginary i.
//
// The figure defining the orientation in the source material is not
// machine-readable; the canonical table here is one concrete valid
// orientation pinned by the two products e2*e3 = e4 and e2*e7 = -e8. All
// aggregate diagram quantities are invariant under the choice (tested
// against a reversed-orientation table).
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "jmm/rational.hpp"

namespace jmm {

struct SignedUnit {
  int sign = 1;    // +1 or -1
  int index = 0;   // 0..7, 0 = real unit
  bool operator==(const SignedUnit&) const = default;
};

class UnitTable {
 public:
  using Line = std::array<int, 3>;  // imaginary indices 1..7, cyclic order

  static UnitTable from_lines(const std::array<Line, 7>& lines);
  // The table used everywhere by default.
  static const UnitTable& canonical();
  // Same lines with all orientations reversed (the opposite algebra); a
  // second valid table for invariance spot-checks.
  static const UnitTable& reversed();

  SignedUnit mul(SignedUnit a, SignedUnit b) const {
    const Entry& e = table_[a.index][b.index];
    return {a.sign * b.sign * e.sign, e.index};
  }

  const std::array<Line, 7>& lines() const { return lines_; }
  // The line through distinct imaginary indices i, j (every such pair lies
  // on exactly one line).
  const Line& line_through(int i, int j) const;

  // Paper-facing label, e.g. "e1" or "-e3".
  static std::string unit_label(SignedUnit u);

 private:
  struct Entry {
    int sign;
    int index;
  };
  std::array<std::array<Entry, 8>, 8> table_{};
  std::array<Line, 7> lines_{};
};

// Octonions with coordinates in an arbitrary exact coefficient ring C.
// C must support +=, -=, *, == 0 comparisons via is_zero-style semantics;
// Rational and the symbolic polynomial type both qualify.
template <typename C>
struct Octonion {
  std::array<C, 8> coord{};

  static Octonion unit(int index) {
    Octonion o;
    o.coord[index] = C(1);
    return o;
  }

  Octonion operator+(const Octonion& other) const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.coord[i] = coord[i] + other.coord[i];
    return r;
  }

  Octonion operator-(const Octonion& other) const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.coord[i] = coord[i] - other.coord[i];
    return r;
  }

  bool operator==(const Octonion& other) const { return coord == other.coord; }
};

template <typename C>
Octonion<C> oct_mul(const Octonion<C>& a, const Octonion<C>& b, const UnitTable& table) {
  Octonion<C> r;
  for (int i = 0; i < 8; ++i) {
    if (a.coord[i] == C(0)) continue;
    for (int j = 0; j < 8; ++j) {
      if (b.coord[j] == C(0)) continue;
      SignedUnit u = table.mul({1, i}, {1, j});
      C term = a.coord[i] * b.coord[j];
      if (u.sign < 0)
        r.coord[u.index] -= term;
      else
        r.coord[u.index] += term;
    }
  }
  return r;
}

template <typename C>
Octonion<C> conjugate(const Octonion<C>& a) {
  Octonion<C> r = a;
  for (int i = 1; i < 8; ++i) r.coord[i] = C(0) - a.coord[i];
  return r;
}

// Tr a = a + conj(a), i.e. twice the real coordinate.
template <typename C>
C oct_trace(const Octonion<C>& a) {
  return a.coord[0] + a.coord[0];
}

// Norm a = a * conj(a) = sum of squared coordinates.
template <typename C>
C oct_norm(const Octonion<C>& a) {
  C r{};
  for (int i = 0; i < 8; ++i) r += a.coord[i] * a.coord[i];
  return r;
}

// Real coordinate of a*b without forming the full product: e_i e_j has a
// real part only for j == i.
template <typename C>
C oct_mul_real_part(const Octonion<C>& a, const Octonion<C>& b) {
  C r = a.coord[0] * b.coord[0];
  for (int i = 1; i < 8; ++i) r -= a.coord[i] * b.coord[i];
  return r;
}

}  // namespace jmm
