#pragma once

#include <json.hpp>

#include "gss/banach/model.hpp"
#include "gss/cstar/io.hpp"

namespace gss::banach {

// Norm-model files: {"kind": "polyhedral|ell1|mixed3d", "field":
// "real|complex", "dimension": n, "dual_vertices": [["1","0"],...]} with
// exact scalar literals. Real models load over rationals.
inline NormModel<Rational> read_norm_model_real(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::string kind = j.at("kind").get<std::string>();
  if (j.value("field", "real") != "real")
    throw std::invalid_argument("expected a real-field model");
  int dim = j.at("dimension").get<int>();
  if (kind == "ell1") return NormModel<Rational>::ell1(dim, false);
  if (kind == "mixed3d") {
    if (dim != 3) throw std::invalid_argument("mixed3d is three-dimensional");
    return NormModel<Rational>::mixed3d();
  }
  if (kind != "polyhedral") throw std::invalid_argument("unknown model kind: " + kind);
  std::vector<Vector<Rational>> vertices;
  for (const auto& row : j.at("dual_vertices")) {
    Vector<Rational> v(dim);
    if (static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("dual vertex of wrong dimension");
    for (int i = 0; i < dim; ++i) v(i) = cstar::parse_rational(row[static_cast<size_t>(i)]);
    vertices.push_back(std::move(v));
  }
  return NormModel<Rational>::polyhedral(dim, false, std::move(vertices));
}

inline std::string write_norm_model_real(const NormModel<Rational>& model) {
  nlohmann::json j;
  j["kind"] = norm_kind_name(model.kind);
  j["field"] = model.complex_field ? "complex" : "real";
  j["dimension"] = model.dimension;
  if (model.kind == NormKind::polyhedral) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& v : model.dual_vertices) {
      nlohmann::json row = nlohmann::json::array();
      for (Index i = 0; i < v.size(); ++i) row.push_back(v(i).str());
      rows.push_back(std::move(row));
    }
    j["dual_vertices"] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

}  // namespace gss::banach
