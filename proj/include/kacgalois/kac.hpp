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

#include <optional>
#include <string>
#include <vector>

#include "kacgalois/algebra.hpp"
#include "kacgalois/group.hpp"

namespace kacgalois {

// Structure constants against a natural basis x_0, ..., x_{n-1}.
struct KacStructure {
  int n = 0;
  std::vector<std::string> labels;
  // left[i](m, j): coefficient of x_m in x_i x_j
  std::vector<Mat> left;
  // delta[k](i, j): coefficient of x_i (x) x_j in Delta(x_k)
  std::vector<Mat> delta;
  Vec counit;
  Mat antipode;  // column k holds the coordinates of kappa(x_k)
  Vec haar;
  Mat star;  // column k holds the coordinates of x_k^*; extended antilinearly

  cplx mult(int i, int j, int m) const { return left[i](m, j); }

  Vec product(const Vec& a, const Vec& b) const;
  Vec adjoint(const Vec& a) const { return star * a.conjugate(); }
  Vec apply_antipode(const Vec& a) const { return antipode * a; }
  Mat coproduct(const Vec& a) const;
  cplx epsilon(const Vec& a) const { return counit.transpose() * a; }
  cplx h(const Vec& a) const { return haar.transpose() * a; }
  // Product in A (x) A of two coefficient matrices.
  Mat tensor_product(const Mat& s, const Mat& t) const;
  Vec unit() const;
  Vec basis_vector(int k) const { return Vec::Unit(n, k); }
};

struct AxiomEntry {
  std::string name;
  double residual = 0;
  bool passed = false;
};

struct AxiomReport {
  std::vector<AxiomEntry> entries;
  double tolerance = 1e-9;
  bool passed() const;
  double max_residual() const;
  const AxiomEntry* find(const std::string& name) const;
};

class AxiomError : public Error {
 public:
  AxiomError(const std::string& what, AxiomReport report)
      : Error(what), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

AxiomReport validate_structure(const KacStructure& s, const Tolerance& tol = {});

struct GroupOrigin {
  std::string family;  // "group_algebra" or "function_algebra"
  GroupTable group;
};

// A Kac algebra realized on L^2(A, h) by left multiplication.
class KacAlgebra {
 public:
  KacAlgebra() = default;
  // Throws AxiomError when the Haar functional does not give a faithful
  // positive inner product (the representation cannot be formed).
  static KacAlgebra from_structure(KacStructure s, std::optional<GroupOrigin> origin = {},
                                   const Tolerance& tol = {});

  int n() const { return s_.n; }
  const KacStructure& structure() const { return s_; }
  const std::vector<Mat>& ops() const { return ops_; }
  const Vec& omega() const { return omega_; }
  const MMAlgebra& algebra() const { return algebra_; }
  const std::optional<GroupOrigin>& origin() const { return origin_; }
  // L^2 coordinates relative to the natural basis: x_k = sum_a w(k, a) f_a.
  const Mat& change_of_basis() const { return w_; }

  Mat op(const Vec& coords) const;
  Vec coords(const Mat& op) const;
  Vec coords_from_vector(const Vec& xi) const;  // x with x Omega = xi
  // J on L^2(A): J v = j_linear() * conj(v)
  const Mat& j_linear() const { return j_; }
  // Delta(x) as an operator on L^2(A) (x) L^2(A).
  Mat delta_op(const Vec& coords) const;
  // Operator on L^2 (x) L^2 for a coefficient matrix over x_i (x) x_j.
  Mat tensor_op(const Mat& coeffs) const;

 private:
  KacStructure s_;
  std::vector<Mat> ops_;
  Vec omega_;
  MMAlgebra algebra_;
  Mat w_;
  Mat lambda_;  // columns L_k Omega
  Eigen::PartialPivLU<Mat> lambda_lu_;
  Mat j_;
  std::optional<GroupOrigin> origin_;
};

AxiomReport validate_kac(const KacAlgebra& k, const Tolerance& tol = {});

KacAlgebra group_algebra(const GroupTable& g);
KacAlgebra function_algebra(const GroupTable& g);
KacAlgebra tensor_kac(const KacAlgebra& a, const KacAlgebra& b);

// Residual of c -> T c being an isomorphism of structures (T maps the natural
// coordinates of `a` to those of `b`).
double isomorphism_residual(const KacStructure& a, const KacStructure& b, const Mat& t);

bool is_commutative(const KacStructure& s, double tol = 1e-9);
bool is_cocommutative(const KacStructure& s, double tol = 1e-9);

}  // namespace kacgalois
