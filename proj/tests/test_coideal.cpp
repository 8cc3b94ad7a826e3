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


#include <algorithm>
#include <set>

#include "doctest.h"
#include "kacgalois/coideal.hpp"
#include "kacgalois/json_io.hpp"
#include "support.hpp"

using namespace kacgalois;
using testsupport::test_groups;

namespace {

// Subgroups by brute force over all subsets closed under the product.
std::vector<std::vector<int>> brute_force_subgroups(const GroupTable& g) {
  int n = g.order();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!(mask >> g.identity() & 1)) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a)
      for (int b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> g.op(a, b) & 1)) closed = false;
    if (!closed) continue;
    std::vector<int> h;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1) h.push_back(a);
    out.push_back(h);
  }
  return out;
}

int element_order(const GroupTable& g, int a) {
  int k = 1;
  for (int x = a; x != g.identity(); x = g.op(x, a)) ++k;
  return k;
}

// Rotation subgroup of S3: identity and the two elements of order three.
std::vector<int> s3_rotations(const GroupTable& g) {
  std::vector<int> h;
  for (int a = 0; a < g.order(); ++a)
    if (element_order(g, a) != 2) h.push_back(a);
  return h;
}

// Character of a corep of F(G) evaluated at g.
cplx character(const Corepresentation& c, int g) {
  cplx s = 0;
  for (int i = 0; i < c.d; ++i) s += c.at(i, i)(g);
  return s;
}

Mat indicator_op(const KacAlgebra& k, const std::vector<int>& support) {
  Vec f = Vec::Zero(k.n());
  for (int g : support) f(g) = 1.0;
  return k.op(f);
}

MMAlgebra span(const std::vector<Mat>& mats, int d) { return MMAlgebra::from_span(mats, d); }

KacAlgebra load_fixture(const std::string& name) {
  return load_kac(parse_json_text(read_file(std::string(KACGALOIS_FIXTURE_DIR) + "/" + name)));
}

std::vector<KacAlgebra> group_family() {
  std::vector<KacAlgebra> out;
  for (const GroupTable& g : test_groups()) {
    out.push_back(group_algebra(g));
    out.push_back(function_algebra(g));
  }
  return out;
}

}  // namespace

TEST_CASE("coideal recognition on small examples") {
  KacAlgebra k = function_algebra(symmetric_group3());
  KacView v = view_of(k);
  MMAlgebra scalars = span({Mat::Identity(6, 6)}, 6);
  CHECK(is_coideal(v, scalars, Side::left).has_value());
  CHECK(is_coideal(v, k.algebra(), Side::left).has_value());

  const GroupTable& g = k.origin()->group;
  int t = -1;
  for (int a = 0; a < 6 && t < 0; ++a)
    if (element_order(g, a) == 2) t = a;
  std::vector<Mat> invariant;
  std::set<int> seen;
  for (int x = 0; x < 6; ++x) {
    if (seen.count(x)) continue;
    std::vector<int> coset = {x, g.op(x, t)};
    seen.insert(coset.begin(), coset.end());
    invariant.push_back(indicator_op(k, coset));
  }
  MMAlgebra b = span(invariant, 6);
  auto c = is_coideal(v, b, Side::left);
  REQUIRE(c.has_value());
  CHECK(c->dim() == 3);
  CHECK(c->certificate < 1e-12);
  CHECK_FALSE(is_coideal(v, b, Side::right).has_value());

  MMAlgebra point = span({Mat::Identity(6, 6), indicator_op(k, {g.identity()})}, 6);
  CHECK_FALSE(is_coideal(v, point, Side::left).has_value());
  Mat nilpotent = Mat::Zero(6, 6);
  nilpotent(0, 1) = 1;
  CHECK_THROWS_AS(coideal_residual(v, span({Mat::Identity(6, 6), nilpotent}, 6), Side::left), Error);
}

TEST_CASE("coideal closure") {
  KacAlgebra f4 = function_algebra(cyclic_group(4));
  KacView v = view_of(f4);
  CHECK(coideal_closure(v, {}, Side::left).dim() == 1);
  Coideal c = coideal_closure(v, {indicator_op(f4, {0, 2})}, Side::left);
  CHECK(c.dim() == 2);
  CHECK(c.certificate < 1e-12);
  CHECK(c.b.residual(indicator_op(f4, {1, 3})) < 1e-12);

  KacAlgebra s3 = group_algebra(symmetric_group3());
  Vec generic(6);
  generic << 0.3, -1.1, 0.7, 2.0, 0.4, -0.6;
  CHECK(coideal_closure(view_of(s3), {s3.op(generic)}, Side::left).dim() == 6);
}

TEST_CASE("subgroup enumeration matches brute force for every test group") {
  for (const GroupTable& g : test_groups()) {
    auto oracle = brute_force_subgroups(g);
    for (const std::string fam : {"group", "function"}) {
      KacAlgebra k = fam == "group" ? group_algebra(g) : function_algebra(g);
      std::vector<Subgroup> hs;
      auto list = enumerate_coideals_group_case(k, Side::left, &hs, {});
      CAPTURE(g.name());
      CAPTURE(fam);
      REQUIRE(list.size() == oracle.size());
      std::multiset<int> want, got;
      for (const auto& h : oracle)
        want.insert(fam == "group" ? static_cast<int>(h.size()) : g.order() / static_cast<int>(h.size()));
      for (const Coideal& c : list) {
        got.insert(c.dim());
        CHECK(c.certificate < 1e-9);
      }
      CHECK(got == want);
      std::set<std::vector<int>> oracle_set(oracle.begin(), oracle.end());
      for (const Subgroup& h : hs) CHECK(oracle_set.count(h) == 1);
      CHECK(closure_certificate(k, list, Side::left, 11, {}));
    }
  }
}

TEST_CASE("function algebra of S3 has coideals of dims 1,2,3,3,3,6") {
  KacAlgebra k = function_algebra(symmetric_group3());
  auto list = enumerate_coideals_group_case(k, Side::left, nullptr, {});
  std::vector<int> dims;
  for (const Coideal& c : list) dims.push_back(c.dim());
  CHECK(dims == std::vector<int>{1, 2, 3, 3, 3, 6});
}

TEST_CASE("function algebra of Z4 has coideals of dims 1,2,4") {
  auto list = enumerate_coideals_group_case(function_algebra(cyclic_group(4)), Side::left, nullptr, {});
  std::vector<int> dims;
  for (const Coideal& c : list) dims.push_back(c.dim());
  CHECK(dims == std::vector<int>{1, 2, 4});
}

TEST_CASE("right coideals of function algebras are right coset algebras") {
  for (const GroupTable& g : test_groups()) {
    KacAlgebra k = function_algebra(g);
    KacView v = view_of(k);
    for (const Coideal& c : enumerate_coideals_group_case(k, Side::right, nullptr, {})) {
      CHECK(coideal_residual(v, c.b, Side::right) < 1e-9);
      CHECK(c.side == Side::right);
    }
  }
}

TEST_CASE("subspace system of C(S3/A3) and its subgroup") {
  KacAlgebra k = function_algebra(symmetric_group3());
  const GroupTable& g = k.origin()->group;
  DualKac d = dual_kac(k);
  auto xi = irreducible_coreps(k, d);
  std::vector<int> a3 = s3_rotations(g);
  REQUIRE(a3.size() == 3);

  std::vector<Mat> cosets;
  std::set<int> seen;
  for (int x = 0; x < 6; ++x) {
    if (seen.count(x)) continue;
    std::vector<int> c;
    for (int h : a3) c.push_back(g.op(x, h));
    seen.insert(c.begin(), c.end());
    cosets.push_back(indicator_op(k, c));
  }
  MMAlgebra b = span(cosets, 6);
  REQUIRE(b.dim() == 2);

  SubspaceSystem sys = subspace_system_from_coideal(k, xi, b);
  for (size_t p = 0; p < xi.size(); ++p) {
    cplx avg = 0;
    for (int h : a3) avg += character(xi[p], h);
    avg /= 3.0;
    CHECK(sys.spaces[p].cols() == std::lround(avg.real()));
  }
  std::vector<int> m = sys.multiplicities();
  std::multiset<std::pair<int, int>> dm;
  for (size_t p = 0; p < xi.size(); ++p) dm.insert({xi[p].d, m[p]});
  CHECK(dm == std::multiset<std::pair<int, int>>{{1, 1}, {1, 1}, {2, 0}});

  Subgroup h = subgroup_from_system(k, xi, sys);
  CHECK(h == a3);
  CHECK(system_distance(fixed_vector_system(k, xi, h), sys) < 1e-9);

  Coideal back = coideal_from_subspace_system(k, xi, sys);
  CHECK(back.dim() == 2);
  CHECK(back.b.distance(b) < 1e-9);
}

TEST_CASE("extreme subspace systems") {
  KacAlgebra k = function_algebra(symmetric_group3());
  DualKac d = dual_kac(k);
  auto xi = irreducible_coreps(k, d);
  const GroupTable& g = k.origin()->group;

  SubspaceSystem full, unit_only;
  for (const Corepresentation& c : xi) {
    full.spaces.push_back(Mat::Identity(c.d, c.d));
    unit_only.spaces.push_back(c.d == 1 && c.at(0, 0).isApprox(Vec::Ones(6)) ? Mat::Identity(1, 1) : Mat(c.d, 0));
  }
  CHECK(subgroup_from_system(k, xi, full) == Subgroup{g.identity()});
  Subgroup all(6);
  for (int a = 0; a < 6; ++a) all[a] = a;
  CHECK(subgroup_from_system(k, xi, unit_only) == all);
  CHECK(coideal_from_subspace_system(k, xi, full).dim() == 6);
  CHECK(coideal_from_subspace_system(k, xi, unit_only).dim() == 1);

  SubspaceSystem broken = unit_only;
  for (size_t p = 0; p < xi.size(); ++p)
    if (xi[p].d == 2) broken.spaces[p] = Mat::Identity(2, 1);
  CHECK_FALSE(check_subspace_system(k, xi, broken).violations.empty());
  CHECK_THROWS_AS(coideal_from_subspace_system(k, xi, broken), InconsistencyError);

  SubspaceSystem no_unit = full;
  no_unit.spaces[0] = Mat(xi[0].d, 0);
  CHECK(check_subspace_system(k, xi, no_unit).unit > 0);
}

TEST_CASE("subspace system round trip on every enumerated coideal") {
  for (const KacAlgebra& k : group_family()) {
    DualKac d = dual_kac(k);
    auto xi = irreducible_coreps(k, d);
    for (const Coideal& c : enumerate_coideals_group_case(k, Side::left, nullptr, {})) {
      SubspaceSystem sys = subspace_system_from_coideal(k, xi, c.b);
      CHECK(check_subspace_system(k, xi, sys).max() < 1e-9);
      int total = 0;
      for (size_t p = 0; p < xi.size(); ++p) total += xi[p].d * static_cast<int>(sys.spaces[p].cols());
      CHECK(total == c.dim());
      Coideal back = coideal_from_subspace_system(k, xi, sys);
      CHECK(back.b.distance(c.b) < 1e-9);
      CHECK(system_distance(subspace_system_from_coideal(k, xi, back.b), sys) < 1e-9);
    }
  }
}

TEST_CASE("fixed vector systems of every subgroup are closed and invert") {
  for (const GroupTable& g : test_groups()) {
    KacAlgebra k = function_algebra(g);
    DualKac d = dual_kac(k);
    auto xi = irreducible_coreps(k, d);
    for (const Subgroup& h : brute_force_subgroups(g)) {
      SubspaceSystem sys = fixed_vector_system(k, xi, h);
      CHECK(check_subspace_system(k, xi, sys).max() < 1e-9);
      CHECK(subgroup_from_system(k, xi, sys) == h);
      CHECK(coideal_from_subspace_system(k, xi, sys).dim() * static_cast<int>(h.size()) == g.order());
    }
  }
}

TEST_CASE("tilde of C(S3/A3) is the rotation subgroup in the dual") {
  KacAlgebra k = function_algebra(symmetric_group3());
  DualKac d = dual_kac(k);
  const GroupTable& g = k.origin()->group;
  std::vector<int> a3 = s3_rotations(g);
  std::vector<Mat> cosets;
  cosets.push_back(indicator_op(k, a3));
  cosets.push_back(Mat::Identity(6, 6));
  MMAlgebra b = span(cosets, 6);

  Coideal t = tilde(k, d, b, {});
  CHECK(t.dim() == 3);
  // The dual element evaluating to the indicator of h pairs as a delta.
  Mat pm = pairing_matrix(k, d);
  std::vector<Mat> lambdas;
  for (int h : a3) lambdas.push_back(d.op(pm.fullPivLu().solve(Vec::Unit(6, h))));
  CHECK(span(lambdas, 6).distance(t.b) < 1e-9);
}

TEST_CASE("tilde agrees with the commutant formula on F(Z4)") {
  KacAlgebra k = function_algebra(cyclic_group(4));
  DualKac d = dual_kac(k);
  for (const Coideal& c : enumerate_coideals_group_case(k, Side::left, nullptr, {})) {
    Coideal a = tilde(k, d, c.b, {});
    Coideal b = tilde_via_commutant(k, d, c.b, {});
    CHECK(a.b.distance(b.b) < 1e-10);
    CHECK(a.dim() * c.dim() == 4);
  }
}

TEST_CASE("trivial tilde values") {
  for (const KacAlgebra& k : group_family()) {
    DualKac d = dual_kac(k);
    int n = k.n();
    MMAlgebra scalars = span({Mat::Identity(n, n)}, n);
    CHECK(tilde(k, d, scalars, {}).b.distance(d.hat_algebra()) < 1e-9);
    CHECK(tilde(k, d, k.algebra(), {}).dim() == 1);
    CHECK(tilde_via_commutant(k, d, scalars, {}).b.distance(d.hat_algebra()) < 1e-9);
    CHECK(tilde_via_commutant(k, d, k.algebra(), {}).dim() == 1);
    CHECK(bicommutant_check(k, d, scalars, {}) < 1e-9);
    CHECK(bicommutant_check(k, d, k.algebra(), {}) < 1e-9);
  }
}

TEST_CASE("bicommutant for every coideal of F(S3) and CS3") {
  for (const KacAlgebra& k : {function_algebra(symmetric_group3()), group_algebra(symmetric_group3())}) {
    DualKac d = dual_kac(k);
    for (const Coideal& c : enumerate_coideals_group_case(k, Side::left, nullptr, {})) {
      CHECK(bicommutant_check(k, d, c.b, {}) < 1e-10);
      MMAlgebra right = relative_commutant_in_dual(d, c.b, {});
      CHECK(bicommutant_check_hat(k, d, right, {}) < 1e-10);
      CHECK(coideal_residual(view_of(d), right, Side::right) < 1e-9);
    }
  }
}

TEST_CASE("Jones projection of a coideal") {
  KacAlgebra k = function_algebra(cyclic_group(4));
  DualKac d = dual_kac(k);
  auto list = enumerate_coideals_group_case(k, Side::left, nullptr, {});
  REQUIRE(list.size() == 3);
  JonesProjectionReport r = jones_projection_coideal(k, d, list[1].b, {});
  CHECK(d.haar(r.e_b).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.max() < 1e-9);

  JonesProjectionReport lo = jones_projection_coideal(k, d, list[0].b, {});
  Vec w = k.omega();
  CHECK((lo.e_b - w * w.adjoint() / w.squaredNorm()).norm() < 1e-12);
  JonesProjectionReport hi = jones_projection_coideal(k, d, list[2].b, {});
  CHECK((hi.e_b - Mat::Identity(4, 4)).norm() < 1e-12);
}

TEST_CASE("Galois reports for the group family") {
  for (const KacAlgebra& k : group_family()) {
    GaloisReport r = galois_lattice_report(k, 5);
    CAPTURE(k.origin()->family);
    CAPTURE(k.origin()->group.name());
    CHECK(r.passed());
    CHECK(r.complete_certified);
    CHECK(r.enumeration == "subgroups");
    for (const GaloisRow& row : r.rows) {
      CHECK(row.dim * row.tilde_dim == k.n());
      CHECK(row.jones.max() < 1e-9);
    }
  }
}

TEST_CASE("Galois report of the trivial algebra has one row") {
  GaloisReport r = galois_lattice_report(group_algebra(cyclic_group(1)), 1);
  CHECK(r.rows.size() == 1);
  CHECK(r.passed());
}

TEST_CASE("Galois lattice of F(Z4) is anti-monotone") {
  GaloisReport r = galois_lattice_report(function_algebra(cyclic_group(4)), 1);
  REQUIRE(r.rows.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(r.inclusion[i][j] == (i <= j));
      CHECK(r.hat_inclusion[j][i] == r.inclusion[i][j]);
    }
}

TEST_CASE("Galois lattice of F(S3) and the subgroup dictionary") {
  KacAlgebra k = function_algebra(symmetric_group3());
  GaloisReport r = galois_lattice_report(k, 2);
  REQUIRE(r.rows.size() == 6);
  CHECK(r.hat_dims.size() == 6);
  int order_two = 0;
  for (const GaloisRow& row : r.rows)
    if (row.dim == 3) {
      CHECK(row.tilde_dim == 2);
      ++order_two;
    }
  CHECK(order_two == 3);

  std::vector<Subgroup> hs;
  enumerate_coideals_group_case(k, Side::left, &hs, {});
  auto contains = [](const Subgroup& a, const Subgroup& b) {
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
  };
  for (size_t i = 0; i < hs.size(); ++i)
    for (size_t j = 0; j < hs.size(); ++j) CHECK(r.inclusion[i][j] == static_cast<int>(contains(hs[i], hs[j])));
}

TEST_CASE("closure search recovers the subgroup lattice") {
  for (const KacAlgebra& k : {function_algebra(symmetric_group3()), group_algebra(symmetric_group3()),
                              function_algebra(cyclic_group(4))}) {
    auto listed = enumerate_coideals_group_case(k, Side::left, nullptr, {});
    auto found = search_coideals(view_of(k), {}, Side::left, 9, {});
    REQUIRE(found.size() == listed.size());
    for (const Coideal& c : listed) CHECK(find_coideal(found, c.b) >= 0);
  }
}

TEST_CASE("Kac-Paljutkin fixture through closure search") {
  KacAlgebra k = load_fixture("kac_paljutkin.json");
  CHECK(k.n() == 8);
  GaloisReport r = galois_lattice_report(k, 3);
  CHECK(r.enumeration == "closure-search");
  CHECK_FALSE(r.complete_certified);
  CHECK(r.passed());
  std::multiset<int> dims, hat(r.hat_dims.begin(), r.hat_dims.end());
  for (const GaloisRow& row : r.rows) {
    dims.insert(row.dim);
    CHECK(row.dim * row.tilde_dim == 8);
  }
  CHECK(dims == hat);
  CHECK(dims.count(1) == 1);
  CHECK(dims.count(8) == 1);
}

TEST_CASE("fingerprints are stable and order-defining") {
  KacAlgebra k = function_algebra(symmetric_group3());
  auto a = enumerate_coideals_group_case(k, Side::left, nullptr, {});
  auto b = enumerate_coideals_group_case(k, Side::left, nullptr, {});
  for (size_t i = 0; i < a.size(); ++i) CHECK(projector_fingerprint(a[i].b) == projector_fingerprint(b[i].b));
  for (size_t i = 1; i < a.size(); ++i)
    CHECK(std::make_pair(a[i - 1].dim(), projector_fingerprint(a[i - 1].b)) <
          std::make_pair(a[i].dim(), projector_fingerprint(a[i].b)));
}
