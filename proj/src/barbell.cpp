#include "jmm/barbell.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_set>

namespace jmm {

namespace {

// Pairings of the given points, lowest free point first; callback per
// complete pairing. Points with odd cardinality yield nothing.
void for_each_pairing(std::vector<int>& pts, std::vector<std::pair<int, int>>& current,
                      const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  if (pts.empty()) {
    fn(current);
    return;
  }
  if (pts.size() % 2 != 0) return;
  const int a = pts[0];
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const int b = pts[i];
    std::vector<int> rest;
    rest.reserve(pts.size() - 2);
    for (std::size_t j = 1; j < pts.size(); ++j)
      if (j != i) rest.push_back(pts[j]);
    current.emplace_back(a, b);
    for_each_pairing(rest, current, fn);
    current.pop_back();
  }
}

void for_each_pairing(std::vector<int> pts,
                      const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  std::vector<std::pair<int, int>> current;
  for_each_pairing(pts, current, fn);
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

int worker_count(const EnumOptions& opts) {
  if (opts.workers > 0) return opts.workers;
  if (const char* env = std::getenv("JMM_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Chunked parallel reduction over a mask range; each worker owns exact
// integer accumulators, merged by addition afterwards.
template <typename PerMask>
std::vector<Int> reduce_masks(std::uint32_t mask_count, int max_exp, int workers,
                              const PerMask& per_mask) {
  workers = std::max(1, std::min<std::uint32_t>(workers, mask_count));
  std::vector<std::vector<Int>> partial(workers, std::vector<Int>(max_exp + 1, Int(0)));
  std::atomic<std::uint32_t> next{0};
  auto run = [&](int wi) {
    for (;;) {
      const std::uint32_t mask = next.fetch_add(1);
      if (mask >= mask_count) break;
      per_mask(mask, partial[wi]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int wi = 0; wi < workers; ++wi) threads.emplace_back(run, wi);
    for (auto& t : threads) t.join();
  }
  std::vector<Int> total(max_exp + 1, Int(0));
  for (const auto& p : partial)
    for (int i = 0; i <= max_exp; ++i) total[i] += p[i];
  return total;
}

Polynomial poly_from_counts(const std::vector<Int>& counts) {
  std::vector<Rational> coeffs(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) coeffs[i] = Rational(counts[i]);
  return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial spin_moment_enum(int k, SpinTally* tally, const EnumOptions& opts) {
  if (k < 0) throw InvalidInput("k must be >= 0");
  if (k % 2 != 0) return Polynomial();
  if (k == 0) {
    if (tally != nullptr) (*tally)[{0, 0}] = 1;
    return Polynomial(1);
  }
  if (k > 12 && !opts.allow_long)
    throw BudgetExceeded("direct enumeration is limited to k <= 12; use the gf method");

  // tally aggregation is cheap and shared, so the parallel path is only
  // used when no tally is requested
  std::mutex tally_mutex;
  auto per_mask = [&](std::uint32_t mask, std::vector<Int>& acc) {
    std::vector<int> sb, s0;
    for (int i = 0; i < k; ++i)
      ((mask >> i) & 1u ? sb : s0).push_back(i);
    if (sb.size() % 2 != 0 || s0.size() % 2 != 0) return;
    // barbells join consecutive (by label) points of Sb
    std::vector<std::pair<int, int>> barbells;
    for (std::size_t t = 0; t + 1 < sb.size(); t += 2) barbells.emplace_back(sb[t], sb[t + 1]);
    std::vector<int> pos(k, -1);
    for (std::size_t i = 0; i < sb.size(); ++i) pos[sb[i]] = static_cast<int>(i);
    for_each_pairing(s0, [&](const std::vector<std::pair<int, int>>&) {
      for_each_pairing(sb, [&](const std::vector<std::pair<int, int>>& pb) {
        Dsu dsu(static_cast<int>(sb.size()));
        for (std::size_t t = 0; t + 1 < sb.size(); t += 2)
          dsu.unite(static_cast<int>(t), static_cast<int>(t + 1));
        for (const auto& [a, b] : pb) dsu.unite(pos[a], pos[b]);
        int N = 0;
        for (int i = 0; i < static_cast<int>(sb.size()); ++i)
          if (dsu.find(i) == i) ++N;
        acc[N] += 1;
        if (tally != nullptr) {
          std::lock_guard<std::mutex> lock(tally_mutex);
          (*tally)[{static_cast<int>(s0.size()), N}] += 1;
        }
      });
    });
  };
  const auto counts =
      reduce_masks(std::uint32_t(1) << k, k / 2, tally ? 1 : worker_count(opts), per_mask);
  return poly_from_counts(counts);
}

std::vector<Polynomial> spin_moment_gf(int max_k) {
  if (max_k < 0) throw InvalidInput("max_k must be >= 0");
  const std::size_t ord = static_cast<std::size_t>(max_k) + 1;
  const std::size_t half_ord = static_cast<std::size_t>(max_k / 2) + 1;

  // A = exp(sum_{m>=1} c_m n x^m / m!) where c_m counts the pairings of m
  // barbells forming a single circle; c_m = (2m-2)!!. (The source text
  // prints the exponent with w_e(2m), which contradicts its own displayed
  // expansion of A; the displayed coefficients are reproduced by (2m-2)!!.)
  Series arg(half_ord);
  for (std::size_t m = 1; m < half_ord; ++m) {
    Rational c(even_double_factorial(static_cast<unsigned>(2 * m - 2)));
    c /= Rational(factorial(static_cast<unsigned>(m)));
    arg.set_coeff(m, Polynomial::monomial(1, c));
  }
  const Series a = series_exp(arg);
  const Series a_laplace = laplace_transform(a);
  const Series a_even = substitute_square(a_laplace).truncated(ord);
  const Series a_prime = borel_hadamard(a_even);

  Series b(ord);
  for (std::size_t i = 0; i < ord; i += 2) {
    Rational c(wick_number(static_cast<unsigned>(i)));
    c /= Rational(factorial(static_cast<unsigned>(i)));
    b.set_coeff(i, Polynomial(c));
  }
  const Series c_ogf = laplace_transform(a_prime * b);

  std::vector<Polynomial> rows(ord);
  for (std::size_t k = 0; k < ord; ++k) rows[k] = c_ogf.coeff(k);
  return rows;
}

Polynomial spin_moment_closed(int k) {
  if (k < 0) throw InvalidInput("k must be >= 0");
  if (k % 2 != 0) return Polynomial();
  Polynomial out;
  for (int i = 0; i <= k; i += 2) {
    const int j = k - i;
    Rational c(binomial(static_cast<unsigned>(k), static_cast<unsigned>(i)) *
               wick_number(static_cast<unsigned>(i)));
    Polynomial radial(1);  // <|x|^j> = prod_{t<j/2} (n + 2t)
    for (int t = 0; t < j / 2; ++t)
      radial = radial * (Polynomial::n() + Polynomial(make_rational(2 * t)));
    out += radial * c;
  }
  return out;
}

namespace {

int green_component_count(int n_pts, std::uint32_t green_mask,
                          const std::vector<std::pair<int, int>>& barbells,
                          const std::vector<std::pair<int, int>>& pairing) {
  Dsu dsu(n_pts);
  for (const auto& [a, b] : barbells) dsu.unite(a, b);
  for (const auto& [a, b] : pairing) dsu.unite(a, b);
  std::vector<char> has_green(n_pts, 0);
  for (int p = 0; p < n_pts; ++p)
    if ((green_mask >> p) & 1u) has_green[dsu.find(p)] = 1;
  int n = 0;
  for (int p = 0; p < n_pts; ++p)
    if (dsu.find(p) == p && has_green[p]) ++n;
  return n;
}

}  // namespace

Polynomial barbell_graph_sum(int m) {
  if (m < 0) throw InvalidInput("m must be >= 0");
  if (m > 6) throw BudgetExceeded("barbell graph enumeration is limited to m <= 6");
  if (m == 0) return Polynomial(1);
  const int n_pts = 2 * m;
  std::vector<std::pair<int, int>> barbells;
  for (int i = 0; i < m; ++i) barbells.emplace_back(2 * i, 2 * i + 1);
  std::vector<Int> counts(m + 1, Int(0));
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n_pts); ++mask) {
    std::vector<int> green, black;
    for (int p = 0; p < n_pts; ++p)
      (((mask >> p) & 1u) ? green : black).push_back(p);
    if (green.size() % 2 != 0 || black.size() % 2 != 0) continue;
    for_each_pairing(green, [&](const std::vector<std::pair<int, int>>& pg) {
      for_each_pairing(black, [&](const std::vector<std::pair<int, int>>& pb) {
        std::vector<std::pair<int, int>> pairing = pg;
        pairing.insert(pairing.end(), pb.begin(), pb.end());
        counts[green_component_count(n_pts, mask, barbells, pairing)] += 1;
      });
    });
  }
  return poly_from_counts(counts);
}

namespace {

// Barbell graph encoding: partner nibble per point plus the coloring mask.
std::uint64_t encode_graph(int n_pts, std::uint32_t mask, const std::vector<int>& partner) {
  std::uint64_t key = 0;
  for (int p = 0; p < n_pts; ++p) key = (key << 4) | static_cast<std::uint64_t>(partner[p]);
  return (key << n_pts) | mask;
}

struct BarbellGroup {
  // element = barbell permutation + per-barbell flip bits
  std::vector<std::pair<std::vector<int>, std::uint32_t>> elements;

  explicit BarbellGroup(int m) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::uint32_t flips = 0; flips < (std::uint32_t(1) << m); ++flips)
        elements.emplace_back(perm, flips);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  static int act(const std::pair<std::vector<int>, std::uint32_t>& g, int p) {
    const int barbell = p / 2;
    int pos = p % 2;
    if ((g.second >> barbell) & 1u) pos ^= 1;
    return 2 * g.first[barbell] + pos;
  }
};

}  // namespace

std::vector<BarbellOrbit> barbell_orbits(int m) {
  if (m < 0) throw InvalidInput("m must be >= 0");
  if (m > 5) throw BudgetExceeded("orbit enumeration is limited to m <= 5");
  std::vector<BarbellOrbit> orbits;
  if (m == 0) {
    orbits.push_back({0, 0, 0, 1, 1});
    return orbits;
  }
  const int n_pts = 2 * m;
  std::vector<std::pair<int, int>> barbells;
  for (int i = 0; i < m; ++i) barbells.emplace_back(2 * i, 2 * i + 1);
  const BarbellGroup group(m);
  std::unordered_set<std::uint64_t> visited;

  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n_pts); ++mask) {
    std::vector<int> green, black;
    for (int p = 0; p < n_pts; ++p)
      (((mask >> p) & 1u) ? green : black).push_back(p);
    if (green.size() % 2 != 0 || black.size() % 2 != 0) continue;
    for_each_pairing(green, [&](const std::vector<std::pair<int, int>>& pg) {
      for_each_pairing(black, [&](const std::vector<std::pair<int, int>>& pb) {
        std::vector<int> partner(n_pts);
        for (const auto& [a, b] : pg) {
          partner[a] = b;
          partner[b] = a;
        }
        for (const auto& [a, b] : pb) {
          partner[a] = b;
          partner[b] = a;
        }
        const std::uint64_t self = encode_graph(n_pts, mask, partner);
        if (visited.count(self) != 0) return;
        // new orbit: sweep the group once for images, stabilizer and the
        // canonical (minimal) key
        std::uint64_t canon = self;
        long stab = 0;
        std::unordered_set<std::uint64_t> images;
        std::vector<int> im_partner(n_pts);
        for (const auto& g : group.elements) {
          std::uint32_t im_mask = 0;
          for (int p = 0; p < n_pts; ++p)
            if ((mask >> p) & 1u) im_mask |= std::uint32_t(1) << BarbellGroup::act(g, p);
          for (int p = 0; p < n_pts; ++p)
            im_partner[BarbellGroup::act(g, p)] = BarbellGroup::act(g, partner[p]);
          const std::uint64_t key = encode_graph(n_pts, im_mask, im_partner);
          images.insert(key);
          canon = std::min(canon, key);
          if (key == self) ++stab;
        }
        visited.insert(images.begin(), images.end());
        std::vector<std::pair<int, int>> pairing = pg;
        pairing.insert(pairing.end(), pb.begin(), pb.end());
        BarbellOrbit orbit;
        orbit.m = m;
        orbit.canonical_key = canon;
        orbit.green_components = green_component_count(n_pts, mask, barbells, pairing);
        orbit.aut_order = stab;
        orbit.orbit_size = static_cast<long>(images.size());
        orbits.push_back(orbit);
      });
    });
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const BarbellOrbit& a, const BarbellOrbit& b) { return a.canonical_key < b.canonical_key; });
  return orbits;
}

Polynomial barbell_orbit_sum(int m) {
  Polynomial out;
  for (const auto& orbit : barbell_orbits(m))
    out += Polynomial::monomial(static_cast<std::size_t>(orbit.green_components),
                                make_rational(1, orbit.aut_order));
  return out;
}

Series connected_series_closed(int max_m) {
  Series s(static_cast<std::size_t>(2 * max_m) + 1);
  for (int m = 1; m <= max_m; ++m) {
    Polynomial p = Polynomial::monomial(1, Rational((Int(1) << m) - 1)) + Polynomial(1);
    s.set_coeff(static_cast<std::size_t>(2 * m), p / make_rational(2 * m));
  }
  return s;
}

Series connected_series_log(int max_m) {
  Series b(static_cast<std::size_t>(2 * max_m) + 1);
  b.set_coeff(0, Polynomial(1));
  for (int m = 1; m <= max_m; ++m) {
    Rational norm(Int(1) << m);
    norm *= Rational(factorial(static_cast<unsigned>(m)));
    b.set_coeff(static_cast<std::size_t>(2 * m), spin_moment_closed(2 * m) / norm);
  }
  return series_log(b);
}

Int spin_block_group_order(int k) {
  const unsigned m = static_cast<unsigned>(k / 2);
  return (Int(1) << m) * factorial(m);
}

Polynomial spin_mixed_moment(const MultiplicityVector& m, const EnumOptions& opts) {
  const int n_pts = m.total_points();
  if (n_pts % 2 != 0) return Polynomial();
  if (n_pts > 12 && !opts.allow_long)
    throw BudgetExceeded("mixed enumeration is limited to total degree 12 without the override");
  if (n_pts > 26) throw BudgetExceeded("mixed enumeration mask space too large");

  // blocks: k even -> barbells on {1,2},{3,4},...; k odd -> point 1
  // isolated, barbells on {2,3},{4,5},...
  std::vector<std::pair<int, int>> barbells;
  std::vector<std::pair<int, int>> block_ranges;
  int pid = 0;
  for (auto [k, mk] : m.counts)
    for (int copy = 0; copy < mk; ++copy) {
      block_ranges.emplace_back(pid, pid + k);
      const int start = (k % 2 == 0) ? 0 : 1;
      for (int t = start; t + 1 < k; t += 2) barbells.emplace_back(pid + t, pid + t + 1);
      pid += k;
    }

  const int max_green_comps = n_pts / 2;
  auto per_mask = [&](std::uint32_t mask, std::vector<Int>& acc) {
    for (const auto& [lo, hi] : block_ranges) {
      int g = 0;
      for (int p = lo; p < hi; ++p) g += (mask >> p) & 1u;
      if (g % 2 != 0) return;
    }
    std::vector<int> green, black;
    for (int p = 0; p < n_pts; ++p)
      (((mask >> p) & 1u) ? green : black).push_back(p);
    if (black.size() % 2 != 0) return;
    for_each_pairing(green, [&](const std::vector<std::pair<int, int>>& pg) {
      for_each_pairing(black, [&](const std::vector<std::pair<int, int>>& pb) {
        std::vector<std::pair<int, int>> pairing = pg;
        pairing.insert(pairing.end(), pb.begin(), pb.end());
        acc[green_component_count(n_pts, mask, barbells, pairing)] += 1;
      });
    });
  };
  const auto counts =
      reduce_masks(std::uint32_t(1) << n_pts, max_green_comps, worker_count(opts), per_mask);
  return poly_from_counts(counts);
}

Polynomial spin_perturb_coefficient(const MultiplicityVector& m, const EnumOptions& opts) {
  Rational norm(1);
  for (auto [k, mk] : m.counts) {
    Int Mk = spin_block_group_order(k);
    Int Mk_pow;
    mpz_pow_ui(Mk_pow.get_mpz_t(), Mk.get_mpz_t(), static_cast<unsigned>(mk));
    norm *= Rational(Mk_pow) * Rational(factorial(static_cast<unsigned>(mk)));
  }
  return spin_mixed_moment(m, opts) / norm;
}

}  // namespace jmm
