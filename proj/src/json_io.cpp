// Copyright 2026 The kacgalois Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kacgalois/json_io.hpp"

#include <fstream>
#include <sstream>

namespace kacgalois {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field: ") + key);
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field is not an integer: ") + key);
  return v.get<int>();
}

}  // namespace

json to_json(cplx c) { return json::array({c.real(), c.imag()}); }

json to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Vec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

cplx cplx_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError("complex entry must be [re, im] or a number");
}

Mat mat_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be a list of rows");
  Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = rows ? static_cast<Eigen::Index>(j[0].is_array() ? j[0].size() : 0) : 0;
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols)
      throw ParseError("matrix rows have inconsistent length");
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = cplx_from_json(j[i][c]);
  }
  return m;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("vector must be a list");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(i) = cplx_from_json(j[i]);
  return v;
}

json to_json(const GroupTable& g) {
  json j;
  j["order"] = g.order();
  j["mult"] = g.table();
  if (!g.name().empty()) j["name"] = g.name();
  return j;
}

GroupTable group_from_json(const json& j) {
  int order = int_field(j, "order");
  const json& t = field(j, "mult");
  std::vector<std::vector<int>> table;
  try {
    table = t.get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("group table: ") + e.what());
  }
  if (static_cast<int>(table.size()) != order) throw ParseError("group table size does not match order");
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  return GroupTable(table, name);
}

json to_json(const KacStructure& s, const std::optional<GroupOrigin>& origin) {
  int n = s.n;
  json j;
  j["dim"] = n;
  j["basis_labels"] = s.labels;
  json mult = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int k = 0; k < n; ++k) row.push_back(to_json(Vec(s.left[i].col(k))));
    mult.push_back(row);
  }
  j["mult"] = mult;
  json delta = json::array();
  for (int k = 0; k < n; ++k) delta.push_back(to_json(s.delta[k]));
  j["delta"] = delta;
  j["counit"] = to_json(s.counit);
  j["antipode"] = to_json(s.antipode);
  j["haar"] = to_json(s.haar);
  j["star"] = to_json(s.star);
  if (origin) j["origin"] = {{"family", origin->family}, {"group", to_json(origin->group)}};
  return j;
}

KacStructure kac_structure_from_json(const json& j) {
  KacStructure s;
  s.n = int_field(j, "dim");
  int n = s.n;
  if (n < 1) throw ParseError("dim must be positive");
  if (j.contains("basis_labels")) {
    try {
      s.labels = j["basis_labels"].get<std::vector<std::string>>();
    } catch (const json::exception& e) {
      throw ParseError(std::string("basis_labels: ") + e.what());
    }
    if (static_cast<int>(s.labels.size()) != n) throw ParseError("basis_labels length");
  }
  const json& mult = field(j, "mult");
  if (!mult.is_array() || static_cast<int>(mult.size()) != n) throw ParseError("mult must be n x n");
  s.left.assign(n, Mat::Zero(n, n));
  for (int i = 0; i < n; ++i) {
    if (!mult[i].is_array() || static_cast<int>(mult[i].size()) != n) throw ParseError("mult must be n x n");
    for (int k = 0; k < n; ++k) {
      Vec c = vec_from_json(mult[i][k]);
      if (c.size() != n) throw ParseError("mult coefficient vector length");
      s.left[i].col(k) = c;
    }
  }
  const json& delta = field(j, "delta");
  if (!delta.is_array() || static_cast<int>(delta.size()) != n) throw ParseError("delta must have n entries");
  for (int k = 0; k < n; ++k) {
    Mat c = mat_from_json(delta[k]);
    if (c.rows() != n || c.cols() != n) throw ParseError("delta entry must be n x n");
    s.delta.push_back(c);
  }
  s.counit = vec_from_json(field(j, "counit"));
  s.haar = vec_from_json(field(j, "haar"));
  s.antipode = mat_from_json(field(j, "antipode"));
  s.star = j.contains("star") ? mat_from_json(j["star"]) : Mat(Mat::Identity(n, n));
  if (s.counit.size() != n || s.haar.size() != n) throw ParseError("counit/haar length");
  if (s.antipode.rows() != n || s.antipode.cols() != n) throw ParseError("antipode must be n x n");
  if (s.star.rows() != n || s.star.cols() != n) throw ParseError("star must be n x n");
  return s;
}

std::optional<GroupOrigin> kac_origin_from_json(const json& j) {
  if (!j.contains("origin")) return std::nullopt;
  const json& o = j["origin"];
  if (!o.contains("family") || !o["family"].is_string()) throw ParseError("origin.family");
  std::string fam = o["family"].get<std::string>();
  if (fam != "group_algebra" && fam != "function_algebra") throw ParseError("origin.family is unknown");
  return GroupOrigin{fam, group_from_json(field(o, "group"))};
}

KacAlgebra load_kac(const json& j, const Tolerance& tol) {
  KacStructure s = kac_structure_from_json(j);
  std::optional<GroupOrigin> origin = kac_origin_from_json(j);
  AxiomReport rep = validate_structure(s, tol);
  if (!rep.passed()) throw AxiomError("Kac axioms fail", rep);
  KacAlgebra k = KacAlgebra::from_structure(std::move(s), origin, tol);
  if (origin) {
    // The origin tag must describe the same structure.
    KacAlgebra ref = origin->family == "group_algebra" ? group_algebra(origin->group)
                                                       : function_algebra(origin->group);
    double r = isomorphism_residual(ref.structure(), k.structure(), Mat::Identity(k.n(), k.n()));
    if (r > tol.tau) throw ParseError("origin tag does not match the structure constants");
  }
  return k;
}

json to_json(const InclusionDocument& doc) {
  json j;
  j["ambient_dim"] = doc.ambient_dim;
  json mb = json::array(), nb = json::array();
  for (const Mat& m : doc.m_basis) mb.push_back(to_json(m));
  for (const Mat& m : doc.n_basis) nb.push_back(to_json(m));
  j["M_basis"] = mb;
  j["N_basis"] = nb;
  j["E_matrix"] = to_json(doc.e_matrix);
  j["omega_density"] = to_json(doc.omega_density);
  return j;
}

InclusionDocument inclusion_from_json(const json& j) {
  InclusionDocument doc;
  doc.ambient_dim = int_field(j, "ambient_dim");
  int d = doc.ambient_dim;
  if (d < 1) throw ParseError("ambient_dim must be positive");
  auto basis = [&](const char* key) {
    const json& b = field(j, key);
    if (!b.is_array()) throw ParseError(std::string(key) + " must be a list");
    std::vector<Mat> out;
    for (const json& m : b) {
      Mat x = mat_from_json(m);
      if (x.rows() != d || x.cols() != d) throw ParseError(std::string(key) + " entry is not d x d");
      out.push_back(x);
    }
    return out;
  };
  doc.m_basis = basis("M_basis");
  doc.n_basis = basis("N_basis");
  doc.e_matrix = mat_from_json(field(j, "E_matrix"));
  if (doc.e_matrix.rows() != d * d || doc.e_matrix.cols() != d * d)
    throw ParseError("E_matrix must be d^2 x d^2");
  doc.omega_density = mat_from_json(field(j, "omega_density"));
  if (doc.omega_density.rows() != d || doc.omega_density.cols() != d)
    throw ParseError("omega_density must be d x d");
  return doc;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace kacgalois
