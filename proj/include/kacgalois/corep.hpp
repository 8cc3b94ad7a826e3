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

#include "kacgalois/duality.hpp"

namespace kacgalois {

struct Corepresentation {
  int d = 0;
  int block = 0;          // index of the matching block of the dual
  std::vector<Vec> u;     // coordinates of u_{ij} in A, stored at i*d + j

  const Vec& at(int i, int j) const { return u[i * d + j]; }
};

// One irreducible corepresentation per block of the dual, sliced out of V
// against the matrix units of that block.
std::vector<Corepresentation> irreducible_coreps(const KacAlgebra& k, const DualKac& d);

struct CorepResiduals {
  double coproduct = 0;  // Delta(u_ij) = sum_k u_ik (x) u_kj
  double counit = 0;
  double unitary = 0;
  double conjugate_unitary = 0;
  double max() const;
};

CorepResiduals corep_residuals(const KacAlgebra& k, const Corepresentation& c);

// Solutions T of T u = v T, as columns holding row-major d(v) x d(u) matrices.
Mat intertwiners(const KacAlgebra& k, const Corepresentation& u, const Corepresentation& v);
Mat unpack_intertwiner(const Vec& t, int rows, int cols);
// (u (x) v)_{(i,k),(j,l)} = u_ij v_kl, with pair (i, k) at index i * d(v) + k.
Corepresentation tensor_corep(const KacAlgebra& k, const Corepresentation& u, const Corepresentation& v);
bool equivalent(const KacAlgebra& k, const Corepresentation& u, const Corepresentation& v,
                const Tolerance& tol = {});
Corepresentation conjugate(const KacAlgebra& k, const Corepresentation& c);
// conjugation[p] = index of the corepresentation equivalent to the conjugate of p;
// throws InconsistencyError when the list is not closed under conjugation.
std::vector<int> conjugation_involution(const KacAlgebra& k, const std::vector<Corepresentation>& xi,
                                        const Tolerance& tol = {});

// max |h(u(p)_ij^* u(s)_kl) - delta_ps delta_ik delta_jl / d(p)|
double orthogonality_check(const KacAlgebra& k, const std::vector<Corepresentation>& xi);
int dimension_sum(const std::vector<Corepresentation>& xi);  // sum of d(p)^2

struct FourierCoefficients {
  std::vector<Mat> blocks;  // x(p)_ij = d(p) h(u(p)_ij^* x)
};

FourierCoefficients fourier(const KacAlgebra& k, const std::vector<Corepresentation>& xi, const Vec& x);
Vec reconstruct(const KacAlgebra& k, const std::vector<Corepresentation>& xi, const FourierCoefficients& f);

// || sum_{p,i,j} d(p) u(p)_ij^* e_Omega u(p)_ij - 1 || on L^2(A), with e_Omega the
// projection onto C Omega_h. The sum over the row index plays the role of an
// orthonormal basis of a Hilbert space in A, so the normalization is exactly one.
double peter_weyl_resolution(const KacAlgebra& k, const std::vector<Corepresentation>& xi);

}  // namespace kacgalois
