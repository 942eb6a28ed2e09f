// Barbell calculus for the spin factor: moment polynomials C_S(n,k) by
// direct enumeration, by the generating-function pipeline and by closed
// form; the barbell-graph orbit model with automorphism weights; the
// connected series; and mixed moments over blocks of barbells.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "jmm/polygon.hpp"  // MultiplicityVector, EnumOptions
#include "jmm/series.hpp"

namespace jmm {

// Tally of enumeration contributions grouped by (|S0|, circle count):
// value = number of (structure, pairing) configurations in the group.
using SpinTally = std::map<std::pair<int, int>, Int>;

// <Tr x^k> by direct enumeration over barbell structures (even split of
// {1..k} into a freely paired part S0 and a barbell part Sb) and pairings.
// Zero for odd k. k > 12 exceeds the enumeration budget: the error advises
// the generating-function path.
Polynomial spin_moment_enum(int k, SpinTally* tally = nullptr, const EnumOptions& opts = {});

// All C_S(n,k) for k = 0..max_k via the generating-function pipeline
// exp -> Laplace -> x^2 substitution -> Hadamard division by m! -> product
// with the Wick-number egf -> final Laplace transform. Index k of the
// result holds C_S(n,k); odd entries are zero.
std::vector<Polynomial> spin_moment_gf(int max_k);

// Closed-form oracle: C_S(n,k) = sum over even i+j=k of binom(k,i) w(i)
// times <|x|^j> with <|x|^{2m}> = prod_{t<m} (n+2t).
Polynomial spin_moment_closed(int k);

// Labelled barbell-graph model: sum over black/green colorings of m fixed
// barbells and color-respecting endpoint pairings of n^{#components with a
// green vertex}. Equals C_S(n,2m). Budget m <= 6.
Polynomial barbell_graph_sum(int m);

struct BarbellOrbit {
  int m = 0;
  std::uint64_t canonical_key = 0;
  int green_components = 0;  // N(Gamma)
  long aut_order = 0;        // stabilizer order inside the barbell group
  long orbit_size = 0;
};

// Orbits of the barbell group (order 2^m m!) on barbell graphs, with
// automorphism orders counted as stabilizers. Budget m <= 5.
std::vector<BarbellOrbit> barbell_orbits(int m);

// Sum over orbits of n^{N(Gamma)} / |Aut Gamma|; times 2^m m! this equals
// barbell_graph_sum(m).
Polynomial barbell_orbit_sum(int m);

// Connected-series coefficients: the closed form
// B_c(x) = sum_{m>=1} (1/2m)((2^m-1)n+1) x^{2m}.
Series connected_series_closed(int max_m);

// log of the orbit-weighted moment generating function B(x) built from the
// closed-form rows; must agree with connected_series_closed termwise.
Series connected_series_log(int max_m);

// Mixed moment <prod_k (Tr x^k)^{m_k}>: labelled sum over block colorings
// (even green count per block; odd blocks carry an isolated first point)
// and global color-respecting pairings of n^{#green components}.
// Budget: total points <= 12 without the override.
Polynomial spin_mixed_moment(const MultiplicityVector& m, const EnumOptions& opts = {});

// M(k) = 2^{m(k)} m(k)! with m(k) = floor(k/2): the barbell-group order
// entering the perturbation-series normalization.
Int spin_block_group_order(int k);

// Perturbation coefficient: the mixed moment divided by
// prod_k (M(k)^{m_k} m_k!).
Polynomial spin_perturb_coefficient(const MultiplicityVector& m, const EnumOptions& opts = {});

}  // namespace jmm
