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

#pragma once

#include <string>

#include "json.hpp"
#include "kacgalois/kac.hpp"

namespace kacgalois {

using json = nlohmann::ordered_json;

json to_json(cplx c);
json to_json(const Mat& m);
json to_json(const Vec& v);
cplx cplx_from_json(const json& j);
Mat mat_from_json(const json& j);
Vec vec_from_json(const json& j);

json to_json(const GroupTable& g);
GroupTable group_from_json(const json& j);

json to_json(const KacStructure& s, const std::optional<GroupOrigin>& origin = {});
KacStructure kac_structure_from_json(const json& j);
std::optional<GroupOrigin> kac_origin_from_json(const json& j);
// Parses and validates; throws ParseError or AxiomError.
KacAlgebra load_kac(const json& j, const Tolerance& tol = {});

struct InclusionDocument {
  int ambient_dim = 0;
  std::vector<Mat> m_basis;
  std::vector<Mat> n_basis;
  Mat e_matrix;
  Mat omega_density;
};

json to_json(const InclusionDocument& doc);
InclusionDocument inclusion_from_json(const json& j);

json parse_json_text(const std::string& text);
std::string read_file(const std::string& path);

}  // namespace kacgalois
