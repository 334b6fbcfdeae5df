#pragma once

// Internal helpers shared by the serialization code. Not installed.

#include <json.hpp>

#include "mintwist/errors.hpp"
#include "mintwist/numerics.hpp"

namespace mintwist::detail {

inline nlohmann::json to_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ComplexMatrix matrix_from_json(const nlohmann::json& j,
                                      const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw MatrixShapeError(where + ": expected a non-empty array of rows");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) {
    throw MatrixShapeError(where + ": rows must be non-empty arrays");
  }
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw MatrixShapeError(where + ": row " + std::to_string(i) +
                             " has inconsistent length");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const auto& e = row[static_cast<std::size_t>(k)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
          !e[1].is_number()) {
        throw MatrixShapeError(where + ": entries must be [re, im] pairs");
      }
      m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

}  // namespace mintwist::detail
