// Polygon-gluing calculus for the Albert algebra: moment polynomials from
// starred polygons glued in pairs with twist flags, weighted by octonion
// unit labelings through the fully nested average.
//
// Conventions, pinned by reproducing the worked bigon/square/hexagon values
// and the symbolic Wick oracle:
//   - a gluing is a perfect matching of edges plus one twist bit per pair,
//     with the overall prefactor 2^{-K/2};
//   - per component the vertices v_1..v_s are cyclic with edge E_r joining
//     v_r, v_{r+1}; an untwisted pair (E_r, E_s) identifies v_r ~ v_{s+1}
//     and v_{r+1} ~ v_s, a twisted pair identifies v_r ~ v_s and
//     v_{r+1} ~ v_{s+1};
//   - the sign alpha is a product over pairs: +1 for a pair labeled e1,
//     -1 for an imaginary pair glued without a twist, +1 for an imaginary
//     pair glued with a twist. (The source text states the imaginary twist
//     signs the other way around, which contradicts its own bigon example
//     and the direct Wick evaluation; this orientation is the one that
//     reproduces every published value.)
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jmm/nesting.hpp"
#include "jmm/polynomial.hpp"

namespace jmm {

// Finitely supported multiplicities m_k (k >= 3) selecting m_k polygons
// with k sides each.
struct MultiplicityVector {
  std::map<int, int> counts;

  int total_points() const;  // N(m) = sum k*m_k
  Int symmetry_factor() const;  // prod m_k!
  // Parses "k1:m1,k2:m2" with all k >= 3; throws InvalidInput otherwise.
  static MultiplicityVector parse(const std::string& spec);
  std::string to_string() const;
};

// Disjoint union of starred polygons. Edges are numbered globally,
// component by component, counterclockwise from the starred vertex.
struct PolygonComplex {
  std::vector<int> sizes;
  std::vector<int> offsets;  // edge (= vertex) offset per component
  int total_edges = 0;

  static PolygonComplex single(int k);
  static PolygonComplex from_multiplicities(const MultiplicityVector& m);

  int component_of(int edge) const;
};

struct Gluing {
  std::vector<std::pair<int, int>> pairs;  // perfect matching on edge ids
  std::uint32_t twists = 0;                // bit i set = pair i glued with a twist
};

struct Labeling {
  std::vector<std::uint8_t> unit;  // unit index per pair, 0..7
};

// All perfect matchings of {0..count-1}, lowest free element first;
// deterministic order. count must be even.
std::vector<std::vector<std::pair<int, int>>> enumerate_matchings(int count);

// Streams every (matching, twist-assignment) pair exactly once; the count
// is (K-1)!! * 2^{K/2} for K total edges.
void enumerate_gluings(const PolygonComplex& cx, const std::function<void(const Gluing&)>& fn);

// Number of vertex equivalence classes after the edge identifications.
int vertex_classes(const PolygonComplex& cx, const Gluing& g);

// True iff the labeling is compatible with the gluing: paired edges carry
// equal units by construction here, and every component's cyclic edge-unit
// word has a real-valued product.
bool labeling_compatible(const PolygonComplex& cx, const Gluing& g, const Labeling& f,
                         const UnitTable& table, FnCache* cache = nullptr);

// Product over pairs of the per-pair sign (convention above).
int sign_alpha(const Gluing& g, const Labeling& f);

// Omega(gluing, labeling) = alpha * prod over components of the real value
// of the fn average of that component's edge word. Throws InvalidInput on
// an incompatible labeling.
Rational omega(const PolygonComplex& cx, const Gluing& g, const Labeling& f,
               const UnitTable& table, FnCache* cache = nullptr);

// (sum over compatible labelings of Omega) * n^{N(gluing)}.
Polynomial gluing_contribution(const PolygonComplex& cx, const Gluing& g, const UnitTable& table,
                               FnCache* cache = nullptr);

struct EnumOptions {
  const UnitTable* table = nullptr;  // null = canonical
  int workers = 0;                   // 0 = hardware concurrency
  bool allow_long = false;           // override the enumeration budget
};

// <Tr X^k> as a polynomial in n: zero for odd k, otherwise
// 2^{-k/2} * sum over gluings of gluing_contribution. k > 8 requires
// allow_long (cost grows like (k-1)!! 16^{k/2}).
Polynomial albert_moment(int k, const EnumOptions& opts = {});

// <prod_k (Tr X^k)^{m_k}>: the labelled sum over all gluings of the
// multi-polygon complex, with the same 2^{-N/2} prefactor. N(m) > 8
// requires allow_long.
Polynomial albert_mixed_moment(const MultiplicityVector& m, const EnumOptions& opts = {});

// Perturbation-series coefficient of g^m t^{N(m)}: the mixed moment
// divided by prod m_k!.
Polynomial albert_perturb_coefficient(const MultiplicityVector& m, const EnumOptions& opts = {});

// Per-gluing audit record: the matching, twist bits, vertex count and the
// labeling-summed weight.
struct GluingRecord {
  std::vector<std::pair<int, int>> pairs;
  std::uint32_t twists = 0;
  int vertex_count = 0;
  Rational omega_sum;
};

std::vector<GluingRecord> gluing_audit(const PolygonComplex& cx, const EnumOptions& opts = {});

// Matching classes of the two-triangle complex (m_3 = 2): type I matchings
// pair an edge inside each triangle, types II/III are the all-crossing
// matchings split by the vertex count of their all-untwisted gluing.
struct MixedTypeSubtotal {
  std::string type;
  int matching_count = 0;
  Polynomial per_matching;
  Polynomial total;
};

std::vector<MixedTypeSubtotal> two_triangle_type_subtotals(const EnumOptions& opts = {});

}  // namespace jmm
