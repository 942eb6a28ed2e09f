#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "jmm/nesting.hpp"

using namespace jmm;

namespace {

std::vector<std::uint8_t> word(std::initializer_list<int> paper_indices) {
  // paper-facing 1-based labels
  std::vector<std::uint8_t> w;
  for (int i : paper_indices) w.push_back(static_cast<std::uint8_t>(i - 1));
  return w;
}

// renders a bracketing as a string of X's for structural comparison
std::string render(std::size_t lo, std::size_t hi, const NestingWord& nest, int step) {
  if (hi - lo == 0) return "X";
  if (hi - lo == 1) return "(XX)";
  if (nest.direction(step) == 'L')
    return "(" + render(lo, hi - 1, nest, step + 1) + "X)";
  return "(X" + render(lo + 1, hi, nest, step + 1) + ")";
}

}  // namespace

TEST_CASE("count law: 2^{k-2} fully nested bracketings") {
  CHECK_THROWS_AS(enumerate_fully_nested(0), InvalidInput);
  CHECK(enumerate_fully_nested(1).size() == 1);
  CHECK(enumerate_fully_nested(2).size() == 1);
  for (int k = 3; k <= 12; ++k)
    CHECK(enumerate_fully_nested(k).size() == (std::size_t(1) << (k - 2)));
  CHECK(enumerate_fully_nested(4).size() == 4);
  CHECK(enumerate_fully_nested(6).size() == 16);
}

TEST_CASE("the four k=4 bracketings") {
  std::set<std::string> got;
  for (const auto& nest : enumerate_fully_nested(4)) got.insert(render(0, 3, nest, 0));
  const std::set<std::string> expected{"(((XX)X)X)", "((X(XX))X)", "(X((XX)X))", "(X(X(XX)))"};
  CHECK(got == expected);
}

TEST_CASE("evaluate_bracketing basics") {
  const UnitTable& t = UnitTable::canonical();
  // e2 e3 -> e4, then (e2 e3) e4 = e4 e4 = -e1
  std::vector<SignedUnit> w{{1, 1}, {1, 2}, {1, 3}};
  const auto nests = enumerate_fully_nested(3);
  const SignedUnit left = evaluate_bracketing(w, NestingWord{1, 1}, t);  // L
  CHECK(left == SignedUnit{-1, 0});

  std::vector<SignedUnit> ones(4, SignedUnit{1, 0});
  for (const auto& nest : enumerate_fully_nested(4))
    CHECK(evaluate_bracketing(ones, nest, t) == SignedUnit{1, 0});

  CHECK_THROWS_AS(evaluate_bracketing(w, NestingWord{0, 3}, t), InvalidInput);
}

TEST_CASE("fn averages of short words") {
  const UnitTable& t = UnitTable::canonical();
  // single bracketing cases
  CHECK(fn_average_value(word({2, 2}), t) == FnValue{0, -1, 0});
  CHECK(fn_average_value(word({1, 1}), t) == FnValue{0, 1, 0});
  CHECK(fn_average_value(word({2, 3}), t) == FnValue{3, 1, 0});

  std::vector<SignedUnit> w4(4, SignedUnit{1, 0});
  const auto avg = fn_average(w4, t);
  CHECK(avg.coord[0] == 1);

  // sign factored out front: (-e2)(e2) = -[e2 e2] = +1
  std::vector<SignedUnit> s{{-1, 1}, {1, 1}};
  CHECK(fn_average(s, t).coord[0] == 1);
}

TEST_CASE("hexagon example word averages to 5/8 on the real unit") {
  const UnitTable& t = UnitTable::canonical();
  const auto w = word({4, 5, 4, 5, 6, 6});
  const FnValue v = fn_average_value(w, t);
  CHECK(v.unit == 0);
  CHECK(v.value() == make_rational(5, 8));
  // 16 bracketings, net sign sum 10
  CHECK(v.num == 10);
  CHECK(v.log2_den == 4);
  // same magnitude under the reversed orientation
  CHECK(fn_average_value(w, UnitTable::reversed()).value() == make_rational(5, 8));
}

TEST_CASE("real product membership") {
  const UnitTable& t = UnitTable::canonical();
  CHECK(is_real_product(word({4, 4}), t));
  CHECK_FALSE(is_real_product(word({2, 3}), t));
  CHECK(is_real_product(word({2, 3, 4}), t));  // e2 e3 = e4, e4 e4 = -1
  CHECK(is_real_product(word({4, 5, 4, 5, 6, 6}), t));
}

TEST_CASE("sign coherence and the vanishing rule on random words") {
  const UnitTable& t = UnitTable::canonical();
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> unit(0, 7);
  std::uniform_int_distribution<int> len(3, 8);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::uint8_t> w(len(rng));
    for (auto& u : w) u = static_cast<std::uint8_t>(unit(rng));
    std::vector<SignedUnit> sw(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) sw[i] = {1, w[i]};
    // all nestings land on one unit index
    std::set<int> units_seen;
    for (const auto& nest : enumerate_fully_nested(static_cast<int>(w.size())))
      units_seen.insert(evaluate_bracketing(sw, nest, t).index);
    CHECK(units_seen.size() == 1);
    // a word failing the real-product test never averages to a nonzero
    // multiple of the real unit
    const FnValue v = fn_average_value(w, t);
    if (!is_real_product(w, t)) CHECK(v.unit != 0);
    CHECK(*units_seen.begin() == v.unit);
  }
}

TEST_CASE("memoized and direct fn averages agree") {
  const UnitTable& t = UnitTable::canonical();
  FnCache cache;
  std::mt19937 rng(5151);
  std::uniform_int_distribution<int> unit(0, 7);
  std::uniform_int_distribution<int> len(1, 9);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<std::uint8_t> w(len(rng));
    for (auto& u : w) u = static_cast<std::uint8_t>(unit(rng));
    const FnValue fast = fn_average_value(w, t, &cache);
    const FnValue again = fn_average_value(w, t, &cache);  // cached hit
    const FnValue direct = fn_average_direct(w, t);
    CHECK(fast == direct);
    CHECK(again == direct);
  }
  CHECK(cache.size() > 0);
}
