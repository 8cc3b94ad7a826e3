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

#include "kacgalois/corep.hpp"

namespace kacgalois {

enum class Side { left, right };
std::string to_string(Side s);

// A Kac algebra realized by operators on L^2(A): either A itself or its dual.
struct KacView {
  KacStructure s;
  std::vector<Mat> ops;  // natural basis as operators
  Mat pinv;              // coordinates: pinv * vec(x)
  MMAlgebra whole;

  int n() const { return s.n; }
  int ambient() const { return whole.ambient_dim(); }
  Vec coords(const Mat& x) const { return pinv * vec(x); }
  Mat op(const Vec& c) const;
};

KacView view_of(const KacAlgebra& k);
KacView view_of(const DualKac& d);

struct Coideal {
  Side side = Side::left;
  MMAlgebra b;
  double certificate = 0;  // distance of delta(B) from A (x) B (left) or B (x) A (right)

  int dim() const { return b.dim(); }
};

// Throws Error when B is not a unital *-subalgebra of the view.
double coideal_residual(const KacView& a, const MMAlgebra& b, Side side);
std::optional<Coideal> is_coideal(const KacView& a, const MMAlgebra& b, Side side,
                                  const Tolerance& tol = {});
Coideal coideal_closure(const KacView& a, const std::vector<Mat>& gens, Side side,
                        const Tolerance& tol = {});

// Stable identifier of a subalgebra: hash of its rounded orthogonal projector.
std::string projector_fingerprint(const MMAlgebra& b);
void sort_coideals(std::vector<Coideal>& list);
// Index of the coideal in `list` span-equal to `b`, or -1.
int find_coideal(const std::vector<Coideal>& list, const MMAlgebra& b, double tol = 1e-8);

// Per corepresentation p an orthonormal basis (columns) of K_p in C^{d(p)}.
struct SubspaceSystem {
  std::vector<Mat> spaces;
  std::vector<int> multiplicities() const;
};

SubspaceSystem subspace_system_from_coideal(const KacAlgebra& k, const std::vector<Corepresentation>& xi,
                                            const MMAlgebra& b);
struct SystemCheck {
  double unit = 0;         // K_trivial is everything
  double tensor = 0;       // T (K_p (x) K_s) within K_t for intertwiners T: p (x) s -> t
  double conjugation = 0;  // S conj(K_p) within K_pbar
  std::vector<std::string> violations;
  double max() const;
};
SystemCheck check_subspace_system(const KacAlgebra& k, const std::vector<Corepresentation>& xi,
                                  const SubspaceSystem& sys, const Tolerance& tol = {});
// Throws InconsistencyError listing the failing pairs when the system is not closed.
Coideal coideal_from_subspace_system(const KacAlgebra& k, const std::vector<Corepresentation>& xi,
                                     const SubspaceSystem& sys, const Tolerance& tol = {});
double system_distance(const SubspaceSystem& a, const SubspaceSystem& b);

// Coideals of group algebras and function algebras, one per subgroup, sorted.
// Each subgroup index is recorded in `subgroups` when requested.
std::vector<Coideal> enumerate_coideals_group_case(const KacAlgebra& k, Side side,
                                                   std::vector<Subgroup>* subgroups = nullptr,
                                                   const Tolerance& tol = {});
// Closure of every singleton of the natural basis, lands in the list; also
// checked for seeded random pairs.
bool closure_certificate(const KacAlgebra& k, const std::vector<Coideal>& list, Side side,
                         std::uint64_t seed, const Tolerance& tol = {});

// Closure-based search: closures of basis elements, of corepresentation
// coefficients and of sums of minimal projections, joined to a fixed point.
// No completeness claim is made for inputs without a group origin.
std::vector<Coideal> search_coideals(const KacView& a, const std::vector<Mat>& extra_generators, Side side,
                                     std::uint64_t seed, const Tolerance& tol = {});

// Fixed vectors of a subgroup of G in each irreducible corepresentation of C(G).
SubspaceSystem fixed_vector_system(const KacAlgebra& k, const std::vector<Corepresentation>& xi,
                                   const Subgroup& h);
Subgroup subgroup_from_system(const KacAlgebra& k, const std::vector<Corepresentation>& xi,
                              const SubspaceSystem& sys, double tol = 1e-9);

// {y in hat A : <xb, y> = eps(b) <x, y>}
Coideal tilde(const KacAlgebra& k, const DualKac& d, const MMAlgebra& b, const Tolerance& tol = {});
// {x in A : <x, yc> = eps_hat(c) <x, y>}, the same construction seen from the dual.
Coideal tilde_hat(const KacAlgebra& k, const DualKac& d, const MMAlgebra& c, const Tolerance& tol = {});
// kappa_hat(B' cap hat A)
Coideal tilde_via_commutant(const KacAlgebra& k, const DualKac& d, const MMAlgebra& b,
                            const Tolerance& tol = {});
MMAlgebra relative_commutant_in_dual(const DualKac& d, const MMAlgebra& b, const Tolerance& tol = {});
MMAlgebra relative_commutant_in_algebra(const KacAlgebra& k, const MMAlgebra& c, const Tolerance& tol = {});
// distance between (B' cap hat A)' cap A and B
double bicommutant_check(const KacAlgebra& k, const DualKac& d, const MMAlgebra& b, const Tolerance& tol = {});
// distance between (C' cap A)' cap hat A and C
double bicommutant_check_hat(const KacAlgebra& k, const DualKac& d, const MMAlgebra& c,
                             const Tolerance& tol = {});

struct JonesProjectionReport {
  Mat e_b;
  double hhat_trace = 0;     // hat h(e_B) - dim B / n
  double counit_value = 0;   // eps(E_B(e)) - dim B / n
  double formula = 0;        // e_B - dim B * E_{B tilde}(e_hat)
  double membership = 0;     // e_B in hat A
  double kappa_fixed = 0;    // kappa_hat(e_B) = e_B
  double jones_relation = 0; // e_B x e_B = E_B(x) e_B
  double max() const;
};

JonesProjectionReport jones_projection_coideal(const KacAlgebra& k, const DualKac& d, const MMAlgebra& b,
                                               const Tolerance& tol = {});

struct GaloisRow {
  int dim = 0;
  std::string fingerprint;
  std::string subgroup;  // group inputs only
  int tilde_index = -1;  // row of the matching dual coideal
  int tilde_dim = 0;
  bool dim_product = false;
  double certificate = 0;
  double tilde_certificate = 0;
  double involution = 0;
  double commutant_agreement = 0;
  double bicommutant = 0;
  double bicommutant_hat = 0;
  double round_trip = 0;         // coideal -> system -> coideal
  double system_round_trip = 0;  // system -> coideal -> system
  double system_closure = 0;
  double dim_bookkeeping = 0;    // |dim B - sum d(p) m_p|
  JonesProjectionReport jones;
};

struct GaloisReport {
  int n = 0;
  std::string enumeration;  // "subgroups" or "closure-search"
  bool complete_certified = false;
  std::vector<GaloisRow> rows;
  std::vector<std::string> hat_fingerprints;
  std::vector<int> hat_dims;
  std::vector<std::vector<int>> inclusion;        // inclusion[i][j] = B_i within B_j
  std::vector<std::vector<int>> hat_inclusion;    // between the tilde images
  bool order_reversing = false;
  bool bijective = false;
  double tolerance = 1e-9;
  bool passed() const;
};

GaloisReport galois_lattice_report(const KacAlgebra& k, std::uint64_t seed = 0, const Tolerance& tol = {});

}  // namespace kacgalois
