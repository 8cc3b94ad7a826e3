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

#include "kacgalois/corep.hpp"

namespace kacgalois {

// Identities tying V, the dual matrix units and the irreducible
// corepresentations together, in the model where A acts on itself by its
// coproduct and the rows of u(p) play the role of a Hilbert space in A.
struct HeisenbergReport {
  double expansion = 0;         // V = sum e(p)_ij (x) u(p)_ij
  double matrix_unit_action = 0;  // e(p)_ij u(s)_kl Omega = delta_ps delta_jl u(p)_ki Omega
  double delta_e_kappa = 0;     // d(p) sum_r delta(u_ri)^*(1 (x) e_hat) delta(u_rj) = 1 (x) kappa_hat(e(p)_ji)
  int identities = 0;           // number of (p, i, j) triples checked
  double max() const;
};

HeisenbergReport heisenberg_identities(const KacAlgebra& k, const DualKac& d,
                                       const std::vector<Corepresentation>& xi);

}  // namespace kacgalois
