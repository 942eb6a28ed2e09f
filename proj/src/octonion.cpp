#include "jmm/octonion.hpp"

namespace jmm {

UnitTable UnitTable::from_lines(const std::array<Line, 7>& lines) {
  UnitTable t;
  t.lines_ = lines;
  for (int i = 0; i < 8; ++i) {
    t.table_[0][i] = {1, i};
    t.table_[i][0] = {1, i};
  }
  for (int i = 1; i < 8; ++i) t.table_[i][i] = {-1, 0};
  t.table_[0][0] = {1, 0};
  for (const auto& line : lines) {
    const int a = line[0], b = line[1], c = line[2];
    const int cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
    for (const auto& x : cyc) {
      t.table_[x[0]][x[1]] = {1, x[2]};
      t.table_[x[1]][x[0]] = {-1, x[2]};
    }
  }
  return t;
}

const UnitTable& UnitTable::canonical() {
  // Pinned products hold: e2*e3 = e4 is line (1,2,3), e2*e7 = -e8 via line
  // (1,7,6) giving e7*e2 = e8.
  static const UnitTable t = from_lines({{{1, 2, 3},
                                          {1, 4, 5},
                                          {1, 7, 6},
                                          {2, 4, 6},
                                          {2, 5, 7},
                                          {3, 4, 7},
                                          {3, 6, 5}}});
  return t;
}

const UnitTable& UnitTable::reversed() {
  static const UnitTable t = [] {
    std::array<Line, 7> rev;
    const auto& lines = canonical().lines();
    for (std::size_t i = 0; i < 7; ++i) rev[i] = {lines[i][2], lines[i][1], lines[i][0]};
    return from_lines(rev);
  }();
  return t;
}

const UnitTable::Line& UnitTable::line_through(int i, int j) const {
  for (const auto& line : lines_) {
    bool has_i = line[0] == i || line[1] == i || line[2] == i;
    bool has_j = line[0] == j || line[1] == j || line[2] == j;
    if (has_i && has_j) return line;
  }
  throw InvalidInput("no Fano line through the given pair");
}

std::string UnitTable::unit_label(SignedUnit u) {
  std::string s = u.sign < 0 ? "-e" : "e";
  s += std::to_string(u.index + 1);
  return s;
}

}  // namespace jmm
