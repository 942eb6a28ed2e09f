#include "jmm/polygon.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

namespace jmm {

int MultiplicityVector::total_points() const {
  int n = 0;
  for (auto [k, mk] : counts) n += k * mk;
  return n;
}

Int MultiplicityVector::symmetry_factor() const {
  Int f = 1;
  for (auto [k, mk] : counts) f *= factorial(static_cast<unsigned>(mk));
  return f;
}

MultiplicityVector MultiplicityVector::parse(const std::string& spec) {
  MultiplicityVector m;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InvalidInput("multiplicity spec must be k1:m1,k2:m2,...");
    int k = 0, mk = 0;
    try {
      k = std::stoi(item.substr(0, colon));
      mk = std::stoi(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw InvalidInput("malformed multiplicity entry: " + item);
    }
    if (k < 3) throw InvalidInput("multiplicity spec requires k >= 3");
    if (mk < 0) throw InvalidInput("negative multiplicity");
    if (mk > 0) m.counts[k] += mk;
  }
  if (m.counts.empty()) throw InvalidInput("empty multiplicity spec");
  return m;
}

std::string MultiplicityVector::to_string() const {
  std::string s;
  for (auto [k, mk] : counts) {
    if (!s.empty()) s += ",";
    s += std::to_string(k) + ":" + std::to_string(mk);
  }
  return s;
}

PolygonComplex PolygonComplex::single(int k) {
  PolygonComplex cx;
  cx.sizes = {k};
  cx.offsets = {0};
  cx.total_edges = k;
  return cx;
}

PolygonComplex PolygonComplex::from_multiplicities(const MultiplicityVector& m) {
  PolygonComplex cx;
  for (auto [k, mk] : m.counts)
    for (int i = 0; i < mk; ++i) {
      cx.offsets.push_back(cx.total_edges);
      cx.sizes.push_back(k);
      cx.total_edges += k;
    }
  return cx;
}

int PolygonComplex::component_of(int edge) const {
  int c = 0;
  while (c + 1 < static_cast<int>(offsets.size()) && offsets[c + 1] <= edge) ++c;
  return c;
}

std::vector<std::vector<std::pair<int, int>>> enumerate_matchings(int count) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (count % 2 != 0) throw InvalidInput("cannot match an odd number of edges");
  std::vector<int> free_ids(count);
  std::iota(free_ids.begin(), free_ids.end(), 0);
  std::vector<std::pair<int, int>> current;
  std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& ids) {
    if (ids.empty()) {
      out.push_back(current);
      return;
    }
    const int a = ids[0];
    for (std::size_t i = 1; i < ids.size(); ++i) {
      const int b = ids[i];
      std::vector<int> rest;
      rest.reserve(ids.size() - 2);
      for (std::size_t j = 1; j < ids.size(); ++j)
        if (j != i) rest.push_back(ids[j]);
      current.emplace_back(a, b);
      rec(rest);
      current.pop_back();
    }
  };
  rec(free_ids);
  return out;
}

void enumerate_gluings(const PolygonComplex& cx, const std::function<void(const Gluing&)>& fn) {
  const auto ms = enumerate_matchings(cx.total_edges);
  const int pairs = cx.total_edges / 2;
  for (const auto& m : ms)
    for (std::uint32_t t = 0; t < (std::uint32_t(1) << pairs); ++t) fn(Gluing{m, t});
}

namespace {

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
  int classes() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (find(i) == i) ++n;
    return n;
  }
};

// Vertex ids share the edge numbering: vertex r of a component is the tail
// of edge r, and edge r joins vertices r and r+1 (cyclically within the
// component).
struct EdgeEnds {
  std::vector<int> tail, head;
  explicit EdgeEnds(const PolygonComplex& cx)
      : tail(cx.total_edges), head(cx.total_edges) {
    for (std::size_t c = 0; c < cx.sizes.size(); ++c)
      for (int r = 0; r < cx.sizes[c]; ++r) {
        tail[cx.offsets[c] + r] = cx.offsets[c] + r;
        head[cx.offsets[c] + r] = cx.offsets[c] + (r + 1) % cx.sizes[c];
      }
  }
};

int vertex_classes_impl(const PolygonComplex& cx, const EdgeEnds& ends,
                        const std::vector<std::pair<int, int>>& pairs, std::uint32_t twists) {
  Dsu dsu(cx.total_edges);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [e1, e2] = pairs[i];
    if ((twists >> i) & 1u) {
      dsu.unite(ends.tail[e1], ends.tail[e2]);
      dsu.unite(ends.head[e1], ends.head[e2]);
    } else {
      dsu.unite(ends.tail[e1], ends.head[e2]);
      dsu.unite(ends.head[e1], ends.tail[e2]);
    }
  }
  return dsu.classes();
}

}  // namespace

int vertex_classes(const PolygonComplex& cx, const Gluing& g) {
  EdgeEnds ends(cx);
  return vertex_classes_impl(cx, ends, g.pairs, g.twists);
}

namespace {

std::vector<std::uint8_t> edge_units(const PolygonComplex& cx, const Gluing& g,
                                     const Labeling& f) {
  if (f.unit.size() != g.pairs.size()) throw InvalidInput("labeling size does not match gluing");
  std::vector<std::uint8_t> lab(cx.total_edges, 0);
  for (std::size_t i = 0; i < g.pairs.size(); ++i) {
    lab[g.pairs[i].first] = f.unit[i];
    lab[g.pairs[i].second] = f.unit[i];
  }
  return lab;
}

}  // namespace

bool labeling_compatible(const PolygonComplex& cx, const Gluing& g, const Labeling& f,
                         const UnitTable& table, FnCache* cache) {
  const auto lab = edge_units(cx, g, f);
  for (std::size_t c = 0; c < cx.sizes.size(); ++c) {
    std::span<const std::uint8_t> word(lab.data() + cx.offsets[c],
                                       static_cast<std::size_t>(cx.sizes[c]));
    if (!is_real_product(word, table, cache)) return false;
  }
  return true;
}

int sign_alpha(const Gluing& g, const Labeling& f) {
  if (f.unit.size() != g.pairs.size()) throw InvalidInput("labeling size does not match gluing");
  int s = 1;
  for (std::size_t i = 0; i < g.pairs.size(); ++i) {
    if (f.unit[i] == 0) continue;
    s *= ((g.twists >> i) & 1u) ? 1 : -1;
  }
  return s;
}

Rational omega(const PolygonComplex& cx, const Gluing& g, const Labeling& f,
               const UnitTable& table, FnCache* cache) {
  const auto lab = edge_units(cx, g, f);
  Rational value(sign_alpha(g, f));
  for (std::size_t c = 0; c < cx.sizes.size(); ++c) {
    std::span<const std::uint8_t> word(lab.data() + cx.offsets[c],
                                       static_cast<std::size_t>(cx.sizes[c]));
    FnValue v = fn_average_value(word, table, cache);
    if (v.unit != 0) throw InvalidInput("labeling incompatible with gluing: non-real component");
    value *= v.value();
  }
  return value;
}

namespace {

const UnitTable& table_of(const EnumOptions& opts) {
  return opts.table != nullptr ? *opts.table : UnitTable::canonical();
}

int worker_count(const EnumOptions& opts) {
  if (opts.workers > 0) return opts.workers;
  if (const char* env = std::getenv("JMM_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Per-matching labeling scan. For each unit assignment to pairs the twist
// sum is collapsed through precomputed tables: with im the set of pairs
// carrying an imaginary unit,
//   sum_t alpha(t) n^{N(t)} = (-1)^{|im|} sum_t (-1)^{popcount(t & im)} n^{N(t)},
// so per matching we tabulate S[im][N] = sum_t (-1)^{popcount(t&im)} [N(t)=N]
// once and the labeling loop touches no twist bits at all.
struct MatchingScan {
  std::vector<std::int64_t> acc;  // index N, scaled by 2^{sum(s_c-2)}
};

void scan_matching(const PolygonComplex& cx, const EdgeEnds& ends,
                   const std::vector<std::pair<int, int>>& pairs, const UnitTable& table,
                   FnCache& cache, std::vector<std::int64_t>& acc) {
  const int P = static_cast<int>(pairs.size());
  const int K = cx.total_edges;
  const std::uint32_t tmax = std::uint32_t(1) << P;
  std::vector<int> N_of_twist(tmax);
  for (std::uint32_t t = 0; t < tmax; ++t)
    N_of_twist[t] = vertex_classes_impl(cx, ends, pairs, t);
  // S[im * (K+1) + N]
  std::vector<std::int64_t> S(static_cast<std::size_t>(tmax) * (K + 1), 0);
  for (std::uint32_t im = 0; im < tmax; ++im)
    for (std::uint32_t t = 0; t < tmax; ++t) {
      const int sgn = (__builtin_popcount(t & im) & 1) ? -1 : 1;
      S[static_cast<std::size_t>(im) * (K + 1) + N_of_twist[t]] += sgn;
    }

  const int ncomp = static_cast<int>(cx.sizes.size());
  std::vector<std::uint8_t> units(P, 0);
  std::vector<std::uint8_t> lab(K, 0);
  for (;;) {
    // per-component fn product; non-real or vanishing averages contribute 0
    std::int64_t num = 1;
    bool live = true;
    for (int c = 0; c < ncomp && live; ++c) {
      std::span<const std::uint8_t> word(lab.data() + cx.offsets[c],
                                         static_cast<std::size_t>(cx.sizes[c]));
      FnValue v = fn_average_value(word, table, &cache);
      if (v.unit != 0 || v.num == 0)
        live = false;
      else
        num *= v.num;
    }
    if (live) {
      std::uint32_t im = 0;
      int nimag = 0;
      for (int i = 0; i < P; ++i)
        if (units[i] != 0) {
          im |= std::uint32_t(1) << i;
          ++nimag;
        }
      const std::int64_t signed_num = (nimag & 1) ? -num : num;
      const std::int64_t* row = &S[static_cast<std::size_t>(im) * (K + 1)];
      for (int N = 1; N <= K; ++N)
        if (row[N] != 0) acc[N] += signed_num * row[N];
    }
    // odometer over unit assignments
    int i = 0;
    for (; i < P; ++i) {
      if (units[i] < 7) {
        ++units[i];
        lab[pairs[i].first] = units[i];
        lab[pairs[i].second] = units[i];
        break;
      }
      units[i] = 0;
      lab[pairs[i].first] = 0;
      lab[pairs[i].second] = 0;
    }
    if (i == P) break;
  }
}

Polynomial labelled_gluing_sum(const PolygonComplex& cx, const EnumOptions& opts) {
  const UnitTable& table = table_of(opts);
  const int K = cx.total_edges;
  if (K % 2 != 0) return Polynomial();
  int fn_log2 = 0;
  for (int s : cx.sizes) fn_log2 += std::max(s - 2, 0);

  const auto ms = enumerate_matchings(K);
  EdgeEnds ends(cx);
  const int workers = std::min<int>(worker_count(opts), static_cast<int>(ms.size()));

  std::vector<std::vector<Int>> partial(std::max(workers, 1), std::vector<Int>(K + 1, Int(0)));
  std::atomic<std::size_t> next{0};
  auto run = [&](int wi) {
    FnCache cache;
    std::vector<std::int64_t> acc(K + 1, 0);
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= ms.size()) break;
      std::fill(acc.begin(), acc.end(), 0);
      scan_matching(cx, ends, ms[idx], table, cache, acc);
      for (int N = 0; N <= K; ++N)
        if (acc[N] != 0) partial[wi][N] += acc[N];
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int wi = 0; wi < workers; ++wi) threads.emplace_back(run, wi);
    for (auto& t : threads) t.join();
  }

  const Rational denom(Int(1) << (fn_log2 + K / 2));
  std::vector<Rational> coeffs(K + 1, Rational(0));
  for (const auto& part : partial)
    for (int N = 0; N <= K; ++N)
      if (part[N] != 0) coeffs[N] += Rational(part[N]) / denom;
  return Polynomial(std::move(coeffs));
}

void check_budget(int points, bool allow_long) {
  if (points > 8 && !allow_long)
    throw BudgetExceeded(
        "enumeration over " + std::to_string(points) +
        " edges exceeds the default budget; pass the long-run override to proceed");
}

}  // namespace

Polynomial albert_moment(int k, const EnumOptions& opts) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  if (k % 2 != 0) return Polynomial();  // odd moments vanish by X -> -X symmetry
  check_budget(k, opts.allow_long);
  return labelled_gluing_sum(PolygonComplex::single(k), opts);
}

Polynomial albert_mixed_moment(const MultiplicityVector& m, const EnumOptions& opts) {
  const int points = m.total_points();
  if (points % 2 != 0) return Polynomial();
  check_budget(points, opts.allow_long);
  return labelled_gluing_sum(PolygonComplex::from_multiplicities(m), opts);
}

Polynomial albert_perturb_coefficient(const MultiplicityVector& m, const EnumOptions& opts) {
  return albert_mixed_moment(m, opts) / Rational(m.symmetry_factor());
}

Polynomial gluing_contribution(const PolygonComplex& cx, const Gluing& g, const UnitTable& table,
                               FnCache* cache) {
  FnCache local;
  if (cache == nullptr) cache = &local;
  const int P = static_cast<int>(g.pairs.size());
  int fn_log2 = 0;
  for (int s : cx.sizes) fn_log2 += std::max(s - 2, 0);
  const Rational fn_denom(Int(1) << fn_log2);
  Rational sum(0);
  Labeling f;
  f.unit.assign(P, 0);
  std::vector<std::uint8_t> lab(cx.total_edges, 0);
  for (;;) {
    std::int64_t num = 1;
    bool real = true;
    for (std::size_t c = 0; c < cx.sizes.size() && real; ++c) {
      std::span<const std::uint8_t> word(lab.data() + cx.offsets[c],
                                         static_cast<std::size_t>(cx.sizes[c]));
      FnValue v = fn_average_value(word, table, cache);
      if (v.unit != 0)
        real = false;
      else
        num *= v.num;
    }
    if (real && num != 0) {
      Rational w(num);
      w /= fn_denom;
      sum += w * sign_alpha(g, f);
    }
    int i = 0;
    for (; i < P; ++i) {
      if (f.unit[i] < 7) {
        ++f.unit[i];
        lab[g.pairs[i].first] = f.unit[i];
        lab[g.pairs[i].second] = f.unit[i];
        break;
      }
      f.unit[i] = 0;
      lab[g.pairs[i].first] = 0;
      lab[g.pairs[i].second] = 0;
    }
    if (i == P) break;
  }
  return Polynomial::monomial(static_cast<std::size_t>(vertex_classes(cx, g)), sum);
}

std::vector<GluingRecord> gluing_audit(const PolygonComplex& cx, const EnumOptions& opts) {
  const UnitTable& table = table_of(opts);
  check_budget(cx.total_edges, opts.allow_long);
  std::vector<GluingRecord> out;
  FnCache cache;
  enumerate_gluings(cx, [&](const Gluing& g) {
    Polynomial p = gluing_contribution(cx, g, table, &cache);
    GluingRecord rec;
    rec.pairs = g.pairs;
    rec.twists = g.twists;
    rec.vertex_count = vertex_classes(cx, g);
    rec.omega_sum = p.coeff(static_cast<std::size_t>(rec.vertex_count));
    out.push_back(std::move(rec));
  });
  return out;
}

std::vector<MixedTypeSubtotal> two_triangle_type_subtotals(const EnumOptions& opts) {
  const UnitTable& table = table_of(opts);
  const PolygonComplex cx = PolygonComplex::from_multiplicities(MultiplicityVector::parse("3:2"));
  EdgeEnds ends(cx);
  FnCache cache;
  std::map<std::string, MixedTypeSubtotal> agg;
  for (const auto& m : enumerate_matchings(cx.total_edges)) {
    const bool internal = std::any_of(m.begin(), m.end(), [&](const std::pair<int, int>& pr) {
      return cx.component_of(pr.first) == cx.component_of(pr.second);
    });
    std::string type;
    if (internal)
      type = "I";
    else
      type = vertex_classes_impl(cx, ends, m, 0) == 3 ? "II" : "III";
    Polynomial matching_total;
    for (std::uint32_t t = 0; t < 8; ++t)
      matching_total += gluing_contribution(cx, Gluing{m, t}, table, &cache);
    auto& slot = agg[type];
    slot.type = type;
    slot.matching_count += 1;
    slot.total += matching_total;
    if (slot.matching_count == 1) slot.per_matching = matching_total;
  }
  std::vector<MixedTypeSubtotal> out;
  for (auto& [type, sub] : agg) out.push_back(sub);
  return out;
}

}  // namespace jmm
