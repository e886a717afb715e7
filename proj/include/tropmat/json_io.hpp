#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tropmat/matrix.hpp"

namespace tropmat {

/// JSON form of a matrix: an array of rows; finite entries are numbers,
/// absorbing entries the strings "inf" / "-inf" (boolean entries 0/1).
inline nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.dim(); ++c) {
      const Value v = m.at(r, c);
      if (v.is_absorb() && m.spec().family() != Family::Boolean) {
        row.push_back(m.spec().format(v));
      } else if (m.spec().family() == Family::Boolean) {
        row.push_back(v.is_absorb() ? 0 : 1);
      } else {
        row.push_back(v.payload());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(SemiringSpec spec, int n,
                               const nlohmann::json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw ParseError("matrix JSON must be an array of " + std::to_string(n) +
                     " rows");
  }
  Matrix out(spec, n);
  for (int r = 0; r < n; ++r) {
    const nlohmann::json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw ParseError("matrix JSON row " + std::to_string(r + 1) +
                       " must have " + std::to_string(n) + " entries");
    }
    for (int c = 0; c < n; ++c) {
      const nlohmann::json& cell = row[static_cast<std::size_t>(c)];
      if (cell.is_string()) {
        out.at(r, c) = spec.parse(cell.get<std::string>());
      } else if (cell.is_number_unsigned()) {
        out.at(r, c) = spec.parse(std::to_string(cell.get<std::uint64_t>()));
      } else {
        throw ParseError("matrix JSON entries must be naturals or "
                         "\"inf\"/\"-inf\"");
      }
    }
  }
  return out;
}

}  // namespace tropmat
