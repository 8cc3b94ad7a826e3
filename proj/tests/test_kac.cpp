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

#include <set>

#include "doctest.h"
#include "kacgalois/json_io.hpp"
#include "kacgalois/kac.hpp"
#include "support.hpp"

using namespace kacgalois;
using testsupport::test_groups;

namespace {

// Every subset closed under the table operation and containing e.
std::set<Subgroup> brute_force_subgroups(const GroupTable& g) {
  std::set<Subgroup> out;
  int n = g.order();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!(mask >> g.identity() & 1)) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a)
      for (int b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> g.op(a, b) & 1)) closed = false;
    if (!closed) continue;
    Subgroup h;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1) h.push_back(a);
    out.insert(h);
  }
  return out;
}

Vec random_coords(int n, Rng& rng) {
  return random_matrix(n, 1, rng).col(0);
}

}  // namespace

TEST_CASE("group tables") {
  CHECK_THROWS_AS(GroupTable({{0, 1}, {0, 1}}), ParseError);
  CHECK_THROWS_AS(GroupTable({{0, 1}, {1}}), ParseError);
  std::map<std::string, size_t> expected = {{"trivial", 1}, {"Z2", 2}, {"Z3", 2}, {"Z4", 3},
                                            {"Z2xZ2", 5}, {"S3", 6}, {"Q8", 6}};
  for (const GroupTable& g : test_groups()) {
    std::vector<Subgroup> subs = enumerate_subgroups(g);
    std::set<Subgroup> oracle = brute_force_subgroups(g);
    CHECK(std::set<Subgroup>(subs.begin(), subs.end()) == oracle);
    CHECK(subs.size() == expected[g.name()]);
  }
  CHECK(!quaternion_group().abelian());
  CHECK(direct_product(cyclic_group(2), cyclic_group(2)).abelian());
}

TEST_CASE("constructors satisfy the axioms") {
  for (const GroupTable& g : test_groups()) {
    KacAlgebra a = group_algebra(g);
    KacAlgebra f = function_algebra(g);
    AxiomReport ra = validate_kac(a), rf = validate_kac(f);
    CHECK_MESSAGE(ra.max_residual() < 1e-10, g.name());
    CHECK_MESSAGE(rf.max_residual() < 1e-10, g.name());
    CHECK(ra.passed());
    CHECK(rf.passed());
    CHECK(is_cocommutative(a.structure()));
    CHECK(is_commutative(f.structure()));
    CHECK(is_commutative(a.structure()) == g.abelian());
    CHECK(is_cocommutative(f.structure()) == g.abelian());
    CHECK(a.algebra().dim() == g.order());
    CHECK(a.algebra().closure_residual() < 1e-9);
  }
  KacAlgebra c = group_algebra(cyclic_group(1));
  CHECK(c.n() == 1);
  CHECK(std::abs(c.structure().delta[0](0, 0) - 1.0) < 1e-15);
}

TEST_CASE("tensor products") {
  KacAlgebra z2 = group_algebra(cyclic_group(2));
  KacAlgebra one = group_algebra(cyclic_group(1));
  KacAlgebra s3 = function_algebra(symmetric_group3());
  KacAlgebra t = tensor_kac(s3, one);
  CHECK(t.n() == 6);
  CHECK(isomorphism_residual(s3.structure(), t.structure(), Mat::Identity(6, 6)) < 1e-12);
  CHECK(validate_kac(t).max_residual() < 1e-10);

  KacAlgebra zz = tensor_kac(z2, z2);
  KacAlgebra klein = group_algebra(direct_product(cyclic_group(2), cyclic_group(2)));
  // both index (a, b) as 2a + b
  CHECK(isomorphism_residual(zz.structure(), klein.structure(), Mat::Identity(4, 4)) < 1e-12);

  KacAlgebra mixed = tensor_kac(z2, function_algebra(cyclic_group(3)));
  CHECK(mixed.n() == 6);
  CHECK(validate_kac(mixed).max_residual() < 1e-10);
  CHECK(is_commutative(mixed.structure()));
  CHECK(is_cocommutative(mixed.structure()));

  KacAlgebra big = tensor_kac(group_algebra(symmetric_group3()), function_algebra(cyclic_group(2)));
  CHECK(validate_kac(big).max_residual() < 1e-10);
  CHECK(!is_commutative(big.structure()));
}

TEST_CASE("haar and antipode properties") {
  Rng rng(41);
  for (const GroupTable& g : test_groups()) {
    for (const KacAlgebra& k : {group_algebra(g), function_algebra(g)}) {
      const KacStructure& s = k.structure();
      Vec u = s.unit();
      for (int trial = 0; trial < 50; ++trial) {
        Vec x = random_coords(k.n(), rng);
        Mat dx = s.coproduct(x);
        CHECK((dx * s.haar - s.h(x) * u).norm() < 1e-9);
        CHECK((dx.transpose() * s.haar - s.h(x) * u).norm() < 1e-9);
      }
      for (int i = 0; i < k.n(); ++i) {
        Vec e = Vec::Unit(k.n(), i);
        CHECK(std::abs(s.h(s.apply_antipode(e)) - s.h(e)) < 1e-12);
        CHECK(std::abs(s.epsilon(s.apply_antipode(e)) - s.epsilon(e)) < 1e-12);
        // The concrete representation reproduces h through Omega.
        CHECK(std::abs(k.omega().dot(k.ops()[i] * k.omega()) - s.haar(i)) < 1e-12);
        CHECK((k.coords(k.ops()[i]) - e).norm() < 1e-12);
      }
    }
  }
}

TEST_CASE("corrupted antipode") {
  KacStructure s = group_algebra(cyclic_group(4)).structure();
  s.antipode = Mat::Identity(4, 4);
  AxiomReport r = validate_structure(s);
  CHECK(!r.passed());
  CHECK(r.find("antipode_antimultiplicative")->passed);
  CHECK(r.find("antipode_law")->residual >= 1.0);
  // The flip identity cannot detect this corruption: the coproduct is
  // cocommutative and the identity map commutes with it.
  CHECK(r.find("antipode_coproduct")->passed);
}

TEST_CASE("serialization and loading") {
  KacAlgebra z4 = group_algebra(cyclic_group(4));
  json doc = to_json(z4.structure(), z4.origin());
  KacAlgebra back = load_kac(parse_json_text(doc.dump()));
  CHECK(isomorphism_residual(z4.structure(), back.structure(), Mat::Identity(4, 4)) == 0.0);
  CHECK(back.algebra().distance(z4.algebra()) < 1e-12);
  REQUIRE(back.origin().has_value());
  CHECK(back.origin()->family == "group_algebra");

  KacStructure bad = group_algebra(symmetric_group3()).structure();
  bad.haar = Vec::Zero(6);
  bad.haar(0) = 0.7;
  bad.haar(1) = 0.3;  // weight on a transposition: not a trace
  json bad_doc = to_json(bad);
  try {
    load_kac(bad_doc);
    FAIL("non-tracial Haar entry was accepted");
  } catch (const AxiomError& e) {
    CHECK(e.report().find("haar_trace")->residual >= 1e-9);
    CHECK(!e.report().find("haar_trace")->passed);
  }
  CHECK_THROWS_AS(load_kac(parse_json_text("{\"dim\": 2}")), ParseError);
  CHECK_THROWS_AS(parse_json_text("{oops"), ParseError);
}
