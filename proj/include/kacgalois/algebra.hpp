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
#include <utility>
#include <vector>

#include "kacgalois/linalg.hpp"

namespace kacgalois {

// Unital *-subalgebra of M_d stored through a basis orthonormal for
// <a, b> = Tr(a* b) / d.
class MMAlgebra {
 public:
  MMAlgebra() = default;

  // Takes the span of `mats`; no closure is performed.
  static MMAlgebra from_span(const std::vector<Mat>& mats, int d,
                             const Tolerance& tol = {});
  // Columns of `frame` are orthonormal vec-coordinates in C^{d*d}.
  static MMAlgebra from_frame(const Mat& frame, int d);

  int ambient_dim() const { return d_; }
  int dim() const { return static_cast<int>(frame_.cols()); }
  const std::vector<Mat>& basis() const { return basis_; }
  const Mat& frame() const { return frame_; }
  bool contains_unit(const Tolerance& tol = {}) const;

  Mat project(const Mat& x) const;
  double residual(const Mat& x) const;
  bool contains(const Mat& x, const Tolerance& tol = {}) const {
    return residual(x) < tol.tau;
  }
  // Max deviation from closure under products and adjoints, and of the unit.
  double closure_residual() const;
  double distance(const MMAlgebra& other) const;
  // zero iff this algebra is contained in `other`
  double excess_over(const MMAlgebra& other) const;

 private:
  int d_ = 0;
  Mat frame_;
  std::vector<Mat> basis_;
};

MMAlgebra mm_from_generators(const std::vector<Mat>& gens, int d,
                             const Tolerance& tol = {});
MMAlgebra commutant(const MMAlgebra& a, const Tolerance& tol = {});
MMAlgebra intersect(const MMAlgebra& a, const MMAlgebra& b);
MMAlgebra center(const MMAlgebra& a, const Tolerance& tol = {});

struct BlockDim {
  int size = 0;
  int multiplicity = 0;
};

struct CentralDecomposition {
  std::vector<Mat> projections;
  std::vector<BlockDim> blocks;
};

CentralDecomposition central_decomposition(const MMAlgebra& a,
                                           const Tolerance& tol = {});

// Matrix units e_{ij} (index i * m + j) of the corner z A z, a full M_m.
std::vector<Mat> matrix_units(const MMAlgebra& a, const Mat& z, int m,
                              const Tolerance& tol = {});

struct StateData {
  Mat density;  // restricted to the algebra; phi(x) = Tr(density x)
  bool faithful = false;

  cplx operator()(const Mat& x) const { return (density * x).trace(); }
};

// Projects `density` into `a` and normalizes it to a state.
StateData make_state(const MMAlgebra& a, const Mat& density,
                     const Tolerance& tol = {});
StateData trace_state(const MMAlgebra& a);

struct GnsData {
  int space_dim = 0;
  int ambient_dim = 0;
  Mat frame;  // columns: vec of f_k, orthonormal for Tr(a* b)
  Mat rho;
  Mat rho_half;
  Mat rho_half_inv;
  Vec omega;
  Mat j_linear;  // J v = j_linear * conj(v)
  Mat modular;

  Mat represent(const Mat& x) const;
  Vec lambda(const Mat& x) const;
  // Inverse of lambda on the algebra.
  Mat element(const Vec& xi) const;
  Vec apply_j(const Vec& v) const;
  Mat conjugate_by_j(const Mat& y) const;  // J y J
};

GnsData gns(const MMAlgebra& a, const StateData& phi, const Tolerance& tol = {});

struct GnsResiduals {
  double homomorphism = 0;
  double j_omega = 0;
  double delta_omega = 0;
  double j_delta_j = 0;
  double polar = 0;
  double max() const;
};

GnsResiduals gns_residuals(const MMAlgebra& a, const GnsData& g);

struct InnerAutomorphism {
  Mat u;
  Mat operator()(const Mat& x) const { return u * x * u.adjoint(); }
};

InnerAutomorphism modular_flow(const StateData& phi, const MMAlgebra& a, double t);

struct CondExpectation {
  Mat map;  // acts on row-major vec of d x d matrices
  int d = 0;
  std::optional<StateData> preserving;

  Mat operator()(const Mat& x) const { return unvec(map * vec(x), d); }
};

// Largest deviation of rho N rho^{-1} from N.
double modular_invariance_residual(const MMAlgebra& n, const Mat& rho);

CondExpectation conditional_expectation(const MMAlgebra& m, const MMAlgebra& n,
                                        const StateData& phi,
                                        const Tolerance& tol = {});

struct ExpectationResiduals {
  double range = 0;
  double idempotent = 0;
  double unital = 0;
  double bimodule = 0;
  double positivity = 0;  // -(smallest Choi eigenvalue), clipped at 0
  double preserving = 0;
  double max() const;
};

ExpectationResiduals expectation_residuals(const MMAlgebra& m, const MMAlgebra& n,
                                           const CondExpectation& e);

// Linear map on vec-coordinates given by the HS projection onto `a`.
Mat projector_map(const MMAlgebra& a);

}  // namespace kacgalois
