#include "jmm/nesting.hpp"

#include <unordered_map>

namespace jmm {

std::vector<NestingWord> enumerate_fully_nested(int k) {
  if (k < 1) throw InvalidInput("word length must be at least 1");
  if (k <= 2) return {NestingWord{}};
  std::vector<NestingWord> out;
  const int len = k - 2;
  out.reserve(std::size_t(1) << len);
  for (std::uint32_t bits = 0; bits < (std::uint32_t(1) << len); ++bits)
    out.push_back({bits, len});
  return out;
}

namespace {

SignedUnit eval_rec(std::span<const SignedUnit> w, std::uint32_t bits, int step,
                    const UnitTable& t) {
  const std::size_t k = w.size();
  if (k == 1) return w[0];
  if (k == 2) return t.mul(w[0], w[1]);
  if ((bits >> step) & 1u)  // L: (rest)*last
    return t.mul(eval_rec(w.first(k - 1), bits, step + 1, t), w[k - 1]);
  return t.mul(w[0], eval_rec(w.subspan(1), bits, step + 1, t));  // R: first*(rest)
}

}  // namespace

SignedUnit evaluate_bracketing(std::span<const SignedUnit> word, const NestingWord& nesting,
                               const UnitTable& table) {
  if (word.empty()) throw InvalidInput("empty word");
  const int expected = word.size() <= 2 ? 0 : static_cast<int>(word.size()) - 2;
  if (nesting.length != expected) throw InvalidInput("nesting length does not match word length");
  return eval_rec(word, nesting.bits, 0, table);
}

bool FnCache::lookup(std::uint64_t key, FnValue& out) const {
  auto it = map_.find(key);
  if (it == map_.end()) return false;
  out = it->second;
  return true;
}

void FnCache::insert(std::uint64_t key, const FnValue& v) { map_.emplace(key, v); }

std::uint64_t FnCache::pack(std::span<const std::uint8_t> units) {
  std::uint64_t key = 1;  // leading 1 separates lengths
  for (std::uint8_t u : units) key = (key << 3) | u;
  return key;
}

namespace {

// Sum of the bracketed products over all fully nested bracketings,
// built inside-out: each bracketing corresponds to one way of growing an
// interval from its innermost adjacent pair by repeatedly absorbing the
// next factor on the left or right. Sign coherence keeps every interval
// supported on a single unit.
FnValue fn_interval_sum(std::span<const std::uint8_t> w, const UnitTable& t) {
  const int k = static_cast<int>(w.size());
  if (k == 1) return {w[0], 1, 0};
  struct Cell {
    int unit;
    std::int64_t num;
  };
  // cell(lo, span): interval [lo, lo+span]
  std::vector<Cell> prev(k), cur(k);
  for (int lo = 0; lo + 1 < k; ++lo) {
    SignedUnit u = t.mul({1, w[lo]}, {1, w[lo + 1]});
    prev[lo] = {u.index, u.sign};
  }
  for (int span = 2; span < k; ++span) {
    for (int lo = 0; lo + span < k; ++lo) {
      SignedUnit left = t.mul({1, w[lo]}, {1, prev[lo + 1].unit});
      SignedUnit right = t.mul({1, prev[lo].unit}, {1, w[lo + span]});
      // both extensions land on the same unit
      cur[lo] = {left.index, left.sign * prev[lo + 1].num + right.sign * prev[lo].num};
    }
    std::swap(prev, cur);
  }
  return {prev[0].unit, prev[0].num, k - 2};
}

}  // namespace

FnValue fn_average_value(std::span<const std::uint8_t> units, const UnitTable& table,
                         FnCache* cache) {
  if (units.empty()) throw InvalidInput("empty word");
  if (cache != nullptr && FnCache::packable(units.size())) {
    const std::uint64_t key = FnCache::pack(units);
    FnValue v;
    if (cache->lookup(key, v)) return v;
    v = fn_interval_sum(units, table);
    cache->insert(key, v);
    return v;
  }
  return fn_interval_sum(units, table);
}

FnValue fn_average_direct(std::span<const std::uint8_t> units, const UnitTable& table) {
  if (units.empty()) throw InvalidInput("empty word");
  std::vector<SignedUnit> w(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) w[i] = {1, units[i]};
  int unit = -1;
  std::int64_t num = 0;
  for (const NestingWord& nest : enumerate_fully_nested(static_cast<int>(units.size()))) {
    SignedUnit r = evaluate_bracketing(w, nest, table);
    if (unit < 0) unit = r.index;
    num += r.sign;
  }
  const int log2_den = units.size() <= 2 ? 0 : static_cast<int>(units.size()) - 2;
  return {unit, num, log2_den};
}

Octonion<Rational> fn_average(std::span<const SignedUnit> word, const UnitTable& table,
                              FnCache* cache) {
  if (word.empty()) throw InvalidInput("empty word");
  int sign = 1;
  std::vector<std::uint8_t> units(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    sign *= word[i].sign;
    units[i] = static_cast<std::uint8_t>(word[i].index);
  }
  FnValue v = fn_average_value(units, table, cache);
  Octonion<Rational> r;
  r.coord[v.unit] = v.value() * sign;
  return r;
}

bool is_real_product(std::span<const std::uint8_t> units, const UnitTable& table, FnCache* cache) {
  return fn_average_value(units, table, cache).unit == 0;
}

}  // namespace jmm
