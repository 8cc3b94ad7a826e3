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


#include "kacgalois/heisenberg.hpp"

#include <algorithm>

namespace kacgalois {

namespace {

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

double HeisenbergReport::max() const { return std::max({expansion, matrix_unit_action, delta_e_kappa}); }

HeisenbergReport heisenberg_identities(const KacAlgebra& k, const DualKac& d,
                                       const std::vector<Corepresentation>& xi) {
  int n = k.n();
  Mat id = Mat::Identity(n, n);
  HeisenbergReport r;
  auto unit = [&](const Corepresentation& c, int i, int j) -> const Mat& {
    return d.hat_basis()[d.blocks()[c.block].offset + i * c.d + j];
  };

  Mat expansion = Mat::Zero(n * n, n * n);
  for (const Corepresentation& c : xi)
    for (int i = 0; i < c.d; ++i)
      for (int j = 0; j < c.d; ++j) expansion += kron(unit(c, i, j), k.op(c.at(i, j)));
  r.expansion = max_abs(Mat(expansion - d.v()));

  for (const Corepresentation& p : xi)
    for (int i = 0; i < p.d; ++i)
      for (int j = 0; j < p.d; ++j)
        for (size_t s = 0; s < xi.size(); ++s)
          for (int a = 0; a < xi[s].d; ++a)
            for (int b = 0; b < xi[s].d; ++b) {
              Vec lhs = unit(p, i, j) * k.op(xi[s].at(a, b)) * k.omega();
              Vec rhs = Vec::Zero(n);
              if (p.block == xi[s].block && j == b) rhs = k.op(p.at(a, i)) * k.omega();
              r.matrix_unit_action = std::max(r.matrix_unit_action, (lhs - rhs).cwiseAbs().maxCoeff());
            }

  Mat e_hat = kron(id, d.e_hat());
  for (const Corepresentation& p : xi)
    for (int i = 0; i < p.d; ++i)
      for (int j = 0; j < p.d; ++j) {
        Mat lhs = Mat::Zero(n * n, n * n);
        for (int row = 0; row < p.d; ++row)
          lhs += k.delta_op(p.at(row, i)).adjoint() * e_hat * k.delta_op(p.at(row, j));
        lhs *= static_cast<double>(p.d);
        Mat rhs = kron(id, d.antipode_op(unit(p, j, i)));
        r.delta_e_kappa = std::max(r.delta_e_kappa, max_abs(Mat(lhs - rhs)));
        ++r.identities;
      }
  return r;
}

}  // namespace kacgalois
