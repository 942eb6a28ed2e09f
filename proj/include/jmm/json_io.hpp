// JSON serialization: rationals as "p/q" strings, polynomials as
// {"coeffs": ["c0","c1",...]} ascending in n, truncated series as
// {"order": d, "coeffs": [polynomial...]}.
#pragma once

#include <json.hpp>

#include "jmm/octonion.hpp"
#include "jmm/polynomial.hpp"
#include "jmm/series.hpp"

namespace jmm {

inline nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(rational_to_string(c));
  return nlohmann::json{{"coeffs", coeffs}};
}

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_string(c.get<std::string>()));
  return Polynomial(std::move(coeffs));
}

inline nlohmann::json to_json(const Series& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (std::size_t k = 0; k < s.order(); ++k) coeffs.push_back(to_json(s.coeff(k)));
  return nlohmann::json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline Series series_from_json(const nlohmann::json& j) {
  Series s(j.at("order").get<std::size_t>());
  const auto& coeffs = j.at("coeffs");
  for (std::size_t k = 0; k < coeffs.size() && k < s.order(); ++k)
    s.set_coeff(k, polynomial_from_json(coeffs[k]));
  return s;
}

inline nlohmann::json to_json(const UnitTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 8; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 8; ++j) row.push_back(UnitTable::unit_label(t.mul({1, i}, {1, j})));
    rows.push_back(row);
  }
  nlohmann::json units = nlohmann::json::array();
  for (int i = 0; i < 8; ++i) units.push_back(UnitTable::unit_label({1, i}));
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& line : t.lines())
    lines.push_back({line[0] + 1, line[1] + 1, line[2] + 1});
  return nlohmann::json{{"units", units}, {"table", rows}, {"lines", lines}};
}

}  // namespace jmm
