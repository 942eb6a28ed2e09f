// Fully nested bracketings of nonassociative words and the averaged
// product [w]_fn over all of them.
//
// A fully nested bracketing of a length-k word (k >= 3) is encoded by a
// direction word over {L,R} of length k-2, processed root-down: L peels
// the rightmost remaining factor (product = (rest)*last), R peels the
// leftmost (product = first*(rest)); the base case multiplies the final
// adjacent pair. For k <= 2 there is a single bracketing and the encoding
// is empty.
#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "jmm/octonion.hpp"

namespace jmm {

struct NestingWord {
  std::uint32_t bits = 0;  // bit t set = direction L at root-down step t
  int length = 0;

  char direction(int t) const { return (bits >> t) & 1u ? 'L' : 'R'; }
  bool operator==(const NestingWord&) const = default;
};

// All fully nested bracketings of a length-k word: 2^{k-2} of them for
// k >= 3, one (empty) for k in {1,2}. Throws InvalidInput for k = 0.
std::vector<NestingWord> enumerate_fully_nested(int k);

// Evaluates the bracketed product of a word of signed units, preserving
// the left-to-right factor order. Throws InvalidInput when the nesting
// length does not match the word length.
SignedUnit evaluate_bracketing(std::span<const SignedUnit> word, const NestingWord& nesting,
                               const UnitTable& table);

// [w]_fn as (unit, num, log2_den): the average equals num / 2^{log2_den}
// times e_{unit}. All bracketings of a unit word land on the same unit up
// to sign, so a single unit index suffices.
struct FnValue {
  int unit = 0;
  std::int64_t num = 0;
  int log2_den = 0;

  Rational value() const {
    Rational r(num);
    r /= Rational(Int(1) << log2_den);
    return r;
  }
  bool operator==(const FnValue&) const = default;
};

// Memo table for fn averages, keyed by the packed unit word (3 bits per
// letter, words up to 21 letters). Not synchronized: use one per worker.
class FnCache {
 public:
  bool lookup(std::uint64_t key, FnValue& out) const;
  void insert(std::uint64_t key, const FnValue& v);
  std::size_t size() const { return map_.size(); }

  static bool packable(std::size_t length) { return length <= 21; }
  static std::uint64_t pack(std::span<const std::uint8_t> units);

 private:
  std::unordered_map<std::uint64_t, FnValue> map_;
};

// Fast path: interval merging equivalent to summing over all fully nested
// bracketings, optionally memoized.
FnValue fn_average_value(std::span<const std::uint8_t> units, const UnitTable& table,
                         FnCache* cache = nullptr);

// Reference path: literal sum of evaluate_bracketing over
// enumerate_fully_nested. Used to cross-check fn_average_value.
FnValue fn_average_direct(std::span<const std::uint8_t> units, const UnitTable& table);

// [w]_fn for a word of signed units, as an octonion with rational
// coordinates (supported on a single unit). Throws InvalidInput on an
// empty word.
Octonion<Rational> fn_average(std::span<const SignedUnit> word, const UnitTable& table,
                              FnCache* cache = nullptr);

// True iff the product of the unit word is real-valued (+-e1) under one,
// hence every, bracketing. Membership test for the tuple sets R_k.
bool is_real_product(std::span<const std::uint8_t> units, const UnitTable& table,
                     FnCache* cache = nullptr);

}  // namespace jmm
