#ifndef COVERLRC_SERIALIZE_HPP
#define COVERLRC_SERIALIZE_HPP

#include <json.hpp>

#include "coverlrc/cover_metric.hpp"
#include "coverlrc/linear_code.hpp"

namespace coverlrc {

// Field elements serialize as their decimal canonical index in [0, q-1]
// (polynomial coefficients read base-p, lowest degree least significant).

inline nlohmann::json field_to_json(const Field& f) {
  return {{"p", f.characteristic()}, {"m", f.extension_degree()}, {"modulus", f.modulus()}};
}

inline Field field_from_json(const nlohmann::json& j) {
  std::vector<uint32_t> modulus = j.value("modulus", std::vector<uint32_t>{});
  if (modulus.empty()) return Field(j.at("p").get<uint32_t>(), j.at("m").get<uint32_t>());
  return Field(j.at("p").get<uint32_t>(), j.at("m").get<uint32_t>(), std::move(modulus));
}

/// Plain grid of element indices.
inline nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const Field& f, const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a non-empty array of rows");
  const size_t rows = j.size(), cols = j.front().size();
  Matrix out(f, rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw std::invalid_argument("ragged matrix JSON");
    for (size_t c = 0; c < cols; ++c) {
      const uint32_t v = j[r][c].get<uint32_t>();
      if (v >= f.order()) throw std::invalid_argument("element index out of range");
      out(r, c) = v;
    }
  }
  return out;
}

/// Generator matrix with its field descriptor.
inline nlohmann::json code_to_json(const LinearCode& code) {
  return {{"field", field_to_json(code.field())},
          {"n", code.length()},
          {"k", code.dimension()},
          {"rows", matrix_to_json(code.generator())}};
}

inline LinearCode code_from_json(const nlohmann::json& j) {
  const Field f = field_from_json(j.at("field"));
  Matrix gen = matrix_from_json(f, j.at("rows"));
  if (j.contains("n") && j["n"].get<size_t>() != gen.cols())
    throw std::invalid_argument("declared length does not match the generator matrix");
  if (j.contains("k") && j["k"].get<size_t>() != gen.rows())
    throw std::invalid_argument("declared dimension does not match the generator matrix");
  return LinearCode(f, std::move(gen));
}

/// Sorted array of 1-based line indices.
inline nlohmann::json lineset_to_json(const LineSet& x) { return nlohmann::json(x.lines()); }

inline LineSet lineset_from_json(const nlohmann::json& j) {
  return LineSet(j.get<std::vector<unsigned>>());
}

}  // namespace coverlrc

#endif  // COVERLRC_SERIALIZE_HPP
