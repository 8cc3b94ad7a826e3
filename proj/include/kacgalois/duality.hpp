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

#include <vector>

#include "kacgalois/kac.hpp"

namespace kacgalois {

// Operators on H (x) H (x) H are applied to vectors of length n^3 in the
// row-major tensor basis; the flip F swaps the two legs of H (x) H.
Mat flip(int n);
double unitarity_residual(const Mat& v);
double pentagon_residual(const Mat& v, int n, std::uint64_t seed = 0);

struct MultiplicativeUnitary {
  int n = 0;
  Mat v;
  double isometry = 0;
  double pentagon = 0;
  double action = 0;  // V(x Omega (x) xi) = delta(x)(Omega (x) xi)
};

MultiplicativeUnitary multiplicative_unitary(const KacAlgebra& k);

struct HatBlock {
  int d = 0;       // size of the matrix block
  int offset = 0;  // index of e_{00} in the dual basis; e_{ij} at offset + i*d + j
};

class DualKac {
 public:
  int n() const { return n_; }
  const Mat& v() const { return v_; }
  // The dual algebra inside B(L^2(A)).
  const MMAlgebra& hat_algebra() const { return hat_algebra_; }
  // Matrix units of the blocks of the dual, trivial block first.
  const std::vector<Mat>& hat_basis() const { return hat_basis_; }
  const std::vector<HatBlock>& blocks() const { return blocks_; }
  // The dual as an abstract Kac algebra on the matrix-unit basis.
  const KacAlgebra& hat() const { return hat_; }

  Vec coords(const Mat& y) const;  // coordinates of y in the dual basis
  Mat op(const Vec& coords) const;
  Mat coproduct_op(const Mat& y) const;  // V^*(1 (x) y)V
  Mat antipode_op(const Mat& y) const;   // J y^* J
  cplx counit(const Mat& y) const;
  cplx haar(const Mat& y) const;  // normalized trace

  const Mat& e() const { return e_; }          // integral of A, on L^2(A)
  const Vec& e_coords() const { return e_coords_; }
  const Mat& e_hat() const { return e_hat_; }  // integral of the dual
  const Vec& omega_h() const { return omega_h_; }
  const Vec& omega_hhat() const { return omega_hhat_; }
  const Mat& j_linear() const { return j_; }

  friend DualKac dual_kac(const KacAlgebra& k, const Tolerance& tol);

 private:
  int n_ = 0;
  Mat v_;
  MMAlgebra hat_algebra_;
  std::vector<Mat> hat_basis_;
  std::vector<HatBlock> blocks_;
  KacAlgebra hat_;
  Mat stacked_;
  Mat pinv_;
  Mat e_, e_hat_;
  Vec e_coords_;
  Vec omega_h_, omega_hhat_;
  Mat j_;
};

// Throws DimensionError when the slices of V do not span an n-dimensional
// *-algebra, and InconsistencyError when the integrals cannot be found.
DualKac dual_kac(const KacAlgebra& k, const Tolerance& tol = {});

struct IntegralReport {
  double counit_a = 0;     // e x = eps(x) e
  double counit_hat = 0;   // e_hat y = eps_hat(y) e_hat
  double projections = 0;  // e, e_hat central projections
  double omega_hhat = 0;   // Omega_hhat = sqrt(n) e Omega_h
  double omega_h = 0;      // sqrt(n) e_hat Omega_hhat = Omega_h
  double haar_e = 0;       // h(e) = 1/n
  double hhat_state = 0;   // <Omega_hhat, y Omega_hhat> = trace(y)/n
  double max() const;
};

IntegralReport integral_report(const KacAlgebra& k, const DualKac& d);

struct HatUnitaries {
  Mat u;
  Mat v_hat;
  Mat v_tilde;
};

HatUnitaries hat_unitaries(const KacAlgebra& k, const DualKac& d);

struct HatUnitaryReport {
  double u_unitary = 0;
  double u_involution = 0;
  double v_hat_unitary = 0;
  double v_tilde_unitary = 0;
  double pentagon_v = 0;
  double pentagon_v_hat = 0;
  double pentagon_v_tilde = 0;
  double v_hat_membership = 0;    // commutators with A' (x) 1 and 1 (x) hat A
  double v_tilde_membership = 0;  // commutators with A (x) 1 and 1 (x) hat A'
  double v_hat_action = 0;        // V_hat^*(xi (x) x Omega) = delta(x)(xi (x) Omega)
  double v_tilde_coproduct = 0;   // V_tilde (y (x) 1) V_tilde^* = delta_hat(y)
  double max() const;
};

HatUnitaryReport hat_unitary_report(const KacAlgebra& k, const DualKac& d,
                                    std::uint64_t seed = 0);

// <x, y> = sqrt(n) <x Omega_h | y^* Omega_hhat>
cplx pairing(const KacAlgebra& k, const DualKac& d, const Vec& x, const Mat& y);
// Entry (k, l): pairing of the k-th basis element of A with the l-th of the dual.
Mat pairing_matrix(const KacAlgebra& k, const DualKac& d);

struct PairingReport {
  double product_law = 0;    // <xy, z> = <x (x) y, delta_hat(z)>
  double coproduct_law = 0;  // <x, yz> = <delta(x), y (x) z>
  double unit_counit = 0;    // <1, y> = eps_hat(y)
  double counit_unit = 0;    // <x, 1> = eps(x)
  int rank = 0;
  double max() const;
};

PairingReport pairing_report(const KacAlgebra& k, const DualKac& d, int samples,
                             std::uint64_t seed);

// Map from the coordinates of A to the coordinates of the bidual induced by
// the two pairings.
Mat biduality_map(const KacAlgebra& k, const DualKac& d, const DualKac& dd);
double biduality_residual(const KacAlgebra& k, const Tolerance& tol = {});

struct HatAntipodeReport {
  double antimultiplicative = 0;
  double star = 0;
  double involutive = 0;
  double haar_trace = 0;  // hat h agrees with trace/n on the basis
  double max() const;
};

HatAntipodeReport hat_antipode_report(const DualKac& d);

}  // namespace kacgalois
