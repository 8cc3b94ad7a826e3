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
#include <cmath>

#include "doctest.h"
#include "kacgalois/duality.hpp"
#include "kacgalois/jones.hpp"
#include "kacgalois/json_io.hpp"
#include "support.hpp"

using namespace kacgalois;

namespace {

Inclusion load_inclusion(const std::string& name) {
  std::string path = std::string(KACGALOIS_FIXTURE_DIR) + "/" + name + ".json";
  return inclusion_from_document(inclusion_from_json(parse_json_text(read_file(path))));
}

// Largest eigenvalue of lambda^T lambda by power iteration.
double power_iteration_norm2(const Eigen::MatrixXd& lambda) {
  Eigen::MatrixXd g = lambda.transpose() * lambda;
  Eigen::VectorXd v = Eigen::VectorXd::Ones(g.rows());
  double value = 0;
  for (int it = 0; it < 2000; ++it) {
    Eigen::VectorXd w = g * v;
    value = w.norm() / v.norm();
    v = w / w.norm();
  }
  return value;
}

// C inside a block-diagonal M with a diagonal faithful density. The GNS space
// is M itself with the Hilbert-Schmidt product and matrix-unit basis; the
// dual weight sends |xi><eta| to xi rho^{-1} eta^*, so the scalar weight has
// density Delta: xi -> rho xi rho^{-1}, and j turns it into Delta^{-1}.
struct ScalarBaseOracle {
  std::vector<double> index_coefficients;
  std::vector<double> a_squared;
};

ScalarBaseOracle scalar_base_oracle(const std::vector<std::vector<double>>& blocks) {
  ScalarBaseOracle out;
  std::vector<std::pair<double, double>> pairs;
  for (const auto& mu : blocks) {
    double inv = 0;
    for (double m : mu) inv += 1.0 / m;
    out.index_coefficients.push_back(inv);
    for (double a : mu)
      for (double b : mu) pairs.emplace_back(a, b);
  }
  size_t n = pairs.size();
  Mat delta = Mat::Zero(n, n);
  for (size_t k = 0; k < n; ++k) delta(k, k) = pairs[k].first / pairs[k].second;
  Mat djd = delta.inverse();
  Mat dih = hermitian_power(delta, -0.5);
  Eigen::VectorXd ev = eigenvalues_sorted(hermitian_part(dih * djd * dih));
  out.a_squared.assign(ev.data(), ev.data() + ev.size());
  return out;
}

std::vector<double> all_a_squared(const RelCommReport& r) {
  std::vector<double> out;
  for (const SummandReport& s : r.summands) out.insert(out.end(), s.a_squared.begin(), s.a_squared.end());
  std::sort(out.begin(), out.end());
  return out;
}

Mat diag2(double a, double b) {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

Inclusion c_in_c2(double lam) {
  MMAlgebra m = MMAlgebra::from_span({diag2(1, 0), diag2(0, 1)}, 2);
  MMAlgebra n = MMAlgebra::from_span({Mat::Identity(2, 2)}, 2);
  CondExpectation e;
  e.d = 2;
  e.map = Mat::Zero(4, 4);
  // vec index 0 is the (0,0) entry, 3 the (1,1) entry
  for (int r : {0, 3}) {
    e.map(r, 0) = lam;
    e.map(r, 3) = 1 - lam;
  }
  return make_inclusion(m, n, e, Mat::Identity(2, 2));
}

Mat solve_weight(const std::vector<Mat>& ops, const std::vector<Mat>& elems, const Mat& e, const Mat& y) {
  size_t k = ops.size();
  int n = static_cast<int>(e.rows()), d = static_cast<int>(elems[0].rows());
  Mat s(n * n, k * k), t(d * d, k * k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      s.col(i * k + j) = vec(ops[i] * e * ops[j]);
      t.col(i * k + j) = vec(elems[i] * elems[j]);
    }
  Vec c = s.completeOrthogonalDecomposition().solve(vec(y));
  return unvec(t * c, d);
}

}  // namespace

TEST_CASE("make_inclusion accepts valid expectations and rejects broken ones") {
  Inclusion inc = load_inclusion("inclusion_c_in_m2_trace");
  CHECK(inc.residuals.max() < 1e-12);
  CHECK((inc.phi.density - Mat::Identity(2, 2) / 2.0).norm() < 1e-12);
  CHECK_NOTHROW(c_in_c2(1.0 / 3.0));

  Inclusion good = c_in_c2(1.0 / 3.0);
  CondExpectation half = good.e;
  half.map *= 0.5;
  CHECK_THROWS_AS(make_inclusion(good.m, good.n, half, Mat::Identity(2, 2)), InvalidExpectationError);
  CHECK_THROWS_AS(c_in_c2(-0.5), InvalidExpectationError);
  CHECK_THROWS_AS(c_in_c2(0.0), NonFaithfulError);

  Inclusion diag = load_inclusion("inclusion_diag_in_m2_trace");
  CHECK_THROWS_AS(make_inclusion(diag.m, diag.n, diag.e, diag2(1, 0)), NonFaithfulError);
  try {
    make_inclusion(good.m, good.n, half, Mat::Identity(2, 2));
  } catch (const InvalidExpectationError& e) {
    CHECK(e.residuals().unital > 0.1);
  }
}

TEST_CASE("basic extension of N = M is trivial") {
  Inclusion base = load_inclusion("inclusion_c_in_m2_trace");
  CondExpectation id;
  id.d = 2;
  id.map = projector_map(base.m);
  Inclusion inc = make_inclusion(base.m, base.m, id, Mat::Identity(2, 2));
  BasicExtension ext = basic_extension(inc);
  CHECK(ext.residuals.max() < 1e-10);
  CHECK((ext.e_n - Mat::Identity(4, 4)).norm() < 1e-12);
  CHECK(ext.m1.distance(MMAlgebra::from_span(ext.m_ops, 4)) < 1e-10);
  for (const Mat& b : base.m.basis()) CHECK((ext.dual_weight(ext.represent(b)) - b).norm() < 1e-10);
  IndexReport ix = index(inc, ext);
  REQUIRE(ix.coefficients.size() == 1);
  CHECK(ix.coefficients[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("basic extension of C in M2 with the trace is all of M4") {
  Inclusion inc = load_inclusion("inclusion_c_in_m2_trace");
  BasicExtension ext = basic_extension(inc);
  CHECK(ext.space_dim == 4);
  CHECK(ext.m1.dim() == 16);
  CHECK(ext.residuals.max() < 1e-10);
  CHECK(push_down_residual(ext) < 1e-12);
  IndexReport ix = index(inc, ext);
  CHECK(ix.total == doctest::Approx(4.0).epsilon(1e-12));
  RelCommReport r = relcomm_decomposition(inc, ext);
  CHECK(r.summands.size() == 1);
  CHECK(r.extremal);
  CHECK(r.criteria_agree);
}

TEST_CASE("C in C2 with a weighted expectation") {
  for (double lam : {1.0 / 3.0, 0.5, 0.2}) {
    Inclusion inc = c_in_c2(lam);
    BasicExtension ext = basic_extension(inc);
    CHECK(ext.m1.dim() == 4);
    CHECK(ext.residuals.max() < 1e-10);
    Vec omega(2);
    omega << std::sqrt(lam), std::sqrt(1 - lam);
    // e_N is the projection onto the cyclic vector, whose GNS coordinates
    // are ext.gns.omega
    CHECK((ext.e_n - ext.gns.omega * ext.gns.omega.adjoint()).norm() < 1e-12);
    CHECK(std::abs(ext.gns.omega.norm() - omega.norm()) < 1e-12);

    ScalarBaseOracle oracle = scalar_base_oracle({{lam}, {1 - lam}});
    IndexReport ix = index(inc, ext);
    std::vector<double> got = ix.coefficients, want = oracle.index_coefficients;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-10));
    CHECK(ix.total == doctest::Approx(1 / lam + 1 / (1 - lam)).epsilon(1e-10));
    CHECK(ix.centrality < 1e-12);

    RelCommReport r = relcomm_decomposition(inc, ext);
    std::vector<double> a2 = all_a_squared(r);
    REQUIRE(a2.size() == oracle.a_squared.size());
    for (size_t i = 0; i < a2.size(); ++i) CHECK(a2[i] == doctest::Approx(oracle.a_squared[i]).epsilon(1e-9));
    // M is abelian, so j fixes the dual weight exactly
    CHECK(r.ehat_j_defect < 1e-10);
    CHECK(r.extremal);
    CHECK(r.criteria_agree);
  }
}

TEST_CASE("weighted C in M2 is not extremal") {
  Inclusion inc = load_inclusion("inclusion_c_in_m2_weighted");
  BasicExtension ext = basic_extension(inc);
  CHECK(ext.residuals.max() < 1e-10);
  ScalarBaseOracle oracle = scalar_base_oracle({{1.0 / 3.0, 2.0 / 3.0}});
  IndexReport ix = index(inc, ext);
  REQUIRE(ix.coefficients.size() == 1);
  CHECK(ix.coefficients[0] == doctest::Approx(oracle.index_coefficients[0]).epsilon(1e-10));
  CHECK(ix.coefficients[0] == doctest::Approx(4.5).epsilon(1e-10));
  RelCommReport r = relcomm_decomposition(inc, ext);
  std::vector<double> a2 = all_a_squared(r);
  REQUIRE(a2.size() == 4);
  for (size_t i = 0; i < 4; ++i) CHECK(a2[i] == doctest::Approx(oracle.a_squared[i]).epsilon(1e-9));
  CHECK(a2.front() == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(a2.back() == doctest::Approx(4.0).epsilon(1e-9));
  CHECK_FALSE(r.extremal);
  CHECK(r.criteria_agree);
  CHECK(r.direct_defect > 1.0);
  Extremality x = extremality(r);
  CHECK_FALSE(x.extremal);
  CHECK(x.agree);
  const SummandReport& s = r.summands[0];
  CHECK(s.partner == 0);
  CHECK(s.trace_a == doctest::Approx(s.trace_a_inverse).epsilon(1e-10));
  CHECK(r.spectrum_inversion < 1e-10);
  CHECK(r.flow < 1e-10);
}

TEST_CASE("Markov fixtures: index equals the squared norm of the inclusion matrix") {
  struct Case {
    const char* name;
    Eigen::MatrixXd lambda;
  };
  Eigen::MatrixXd l1(1, 1), l2(2, 1), l3(1, 1), l4(2, 2), l5(2, 1);
  l1 << 2;
  l2 << 1, 1;
  l3 << 3;
  l4 << 1, 1, 1, 0;
  l5 << 1, 1;
  std::vector<Case> cases = {{"inclusion_c_in_m2_trace", l1},
                             {"inclusion_c_plus_m2_in_m3_markov", l2},
                             {"inclusion_c_in_m3_markov", l3},
                             {"inclusion_golden_markov", l4},
                             {"inclusion_diag_in_m2_trace", l5}};
  for (const Case& c : cases) {
    CAPTURE(c.name);
    Inclusion inc = load_inclusion(c.name);
    BasicExtension ext = basic_extension(inc);
    IndexReport ix = index(inc, ext);
    double want = power_iteration_norm2(c.lambda);
    CHECK(ix.centrality < 1e-10);
    for (double coeff : ix.coefficients) CHECK(std::abs(coeff - want) < 1e-8);
  }
  CHECK(power_iteration_norm2(l4) == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-12));
}

TEST_CASE("push-down on diagonals in M2") {
  Inclusion inc = load_inclusion("inclusion_diag_in_m2_trace");
  BasicExtension ext = basic_extension(inc);
  CHECK(push_down_residual(ext) < 1e-12);
  Rng rng(11);
  for (int s = 0; s < 10; ++s) {
    Vec c = random_matrix(ext.m1.dim(), 1, rng);
    Mat x = Mat::Zero(ext.space_dim, ext.space_dim);
    for (int k = 0; k < ext.m1.dim(); ++k) x += c(k) * ext.m1.basis()[k];
    CHECK((ext.e_n * ext.represent(ext.dual_weight(ext.e_n * x)) - ext.e_n * x).norm() < 1e-12);
  }
  RelCommReport r = relcomm_decomposition(inc, ext);
  CHECK(r.extremal);
  CHECK(r.criteria_agree);
}

TEST_CASE("random inclusions satisfy the basic construction identities") {
  int nonextremal = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CAPTURE(seed);
    InclusionDocument doc = random_inclusion(seed);
    CHECK(doc.ambient_dim <= 6);
    Inclusion inc = inclusion_from_document(doc);
    BasicExtension ext = basic_extension(inc);
    const ExtensionResiduals& r = ext.residuals;
    CHECK(r.three_way < 1e-8);
    CHECK(r.unit < 1e-9);
    CHECK(r.compression < 1e-9);
    CHECK(r.consistency < 1e-9);
    CHECK(r.cross_check < 1e-9);
    CHECK(r.ehat_unit < 1e-9);
    CHECK(r.bimodule < 1e-9);
    CHECK(r.positivity < 1e-9);
    CHECK(push_down_residual(ext) < 1e-9);
    IndexReport ix = index(inc, ext);
    CHECK(ix.centrality < 1e-9);
    CHECK(ix.imaginary < 1e-9);
    for (double c : ix.coefficients) CHECK(c >= 1.0 - 1e-9);

    RelCommReport rc = relcomm_decomposition(inc, ext);
    CHECK(rc.slot_b1 == 0);
    CHECK(rc.slot_b2 == 0);
    CHECK(rc.slot_c == 0);
    CHECK(rc.criteria_agree);
    CHECK(rc.flow < 1e-8);
    CHECK(rc.flow_invariance < 1e-8);
    CHECK(rc.j_antiautomorphism < 1e-9);
    CHECK(rc.j_flow < 1e-8);
    CHECK(rc.scalarization < 1e-9);
    CHECK(rc.spectrum_inversion < 1e-8);
    for (const SummandReport& s : rc.summands) {
      CHECK(s.a.front() > 0);
      CHECK(s.trace_a == doctest::Approx(rc.summands[s.partner].trace_a_inverse).epsilon(1e-8));
    }
    if (!rc.extremal) ++nonextremal;

    Rng rng(1000 + seed);
    Mat omega2 = hermitian_part(inc.n.project(random_positive(doc.ambient_dim, rng)));
    OmegaIndependence oi = omega_independence(inc, ext, rc, omega2);
    CHECK(oi.e_n < 1e-9);
    CHECK(oi.m1 < 1e-9);
    CHECK(oi.flow < 1e-8);
    CHECK(oi.a_spectra < 1e-8);
  }
  CHECK(nonextremal >= 10);
}

TEST_CASE("random inclusions are reproducible from the seed") {
  InclusionDocument a = random_inclusion(17), b = random_inclusion(17), c = random_inclusion(18);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(to_json(a).dump() != to_json(c).dump());
}

TEST_CASE("extension model: M1 itself") {
  Inclusion inc = load_inclusion("inclusion_golden_markov");
  BasicExtension ext = basic_extension(inc);
  ExtensionModel model{ext.m1, ext.e_n, ext.m_ops, [&](const Mat& x) { return ext.dual_weight(x); }};
  ModelVerification v = verify_extension_model(inc, ext, model);
  CHECK(v.failed.empty());
  CHECK(v.passed());
  CHECK((v.u - Mat::Identity(v.u.rows(), v.u.cols())).norm() < 1e-9);
}

TEST_CASE("extension model: a rotated copy is recovered") {
  Inclusion inc = load_inclusion("inclusion_c_in_m2_weighted");
  BasicExtension ext = basic_extension(inc);
  int n = ext.space_dim;
  MMAlgebra mprime = commutant(MMAlgebra::from_span(ext.m_ops, n));
  Rng rng(5);
  Mat h = Mat::Zero(n, n);
  Vec c = random_matrix(mprime.dim(), 1, rng);
  for (int k = 0; k < mprime.dim(); ++k) h += c(k) * mprime.basis()[k];
  h = hermitian_part(h);
  Mat ci(n, n);
  ci.setIdentity();
  Mat w = (h - cplx(0, 1) * ci) * (h + cplx(0, 1) * ci).inverse();
  REQUIRE((w.adjoint() * w - ci).norm() < 1e-12);
  std::vector<Mat> rotated;
  for (const Mat& b : ext.m1.basis()) rotated.push_back(w * b * w.adjoint());
  ExtensionModel model{MMAlgebra::from_span(rotated, n), w * ext.e_n * w.adjoint(), ext.m_ops,
                       [&](const Mat& x) { return ext.dual_weight(w.adjoint() * x * w); }};
  CHECK((model.e - ext.e_n).norm() > 0.1);
  ModelVerification v = verify_extension_model(inc, ext, model);
  CHECK(v.passed());
  for (const Mat& b : ext.m1.basis())
    CHECK((apply_model_isomorphism(ext, model, v, b) - w * b * w.adjoint()).norm() < 1e-9);
}

TEST_CASE("extension model: Heisenberg picture of a group algebra") {
  for (const GroupTable& g : {cyclic_group(2), symmetric_group3()}) {
    KacAlgebra k = group_algebra(g);
    DualKac dk = dual_kac(k);
    int n = k.n();
    const MMAlgebra& a = k.algebra();
    MMAlgebra scalars = MMAlgebra::from_span({Mat::Identity(n, n)}, n);
    Mat haar = k.omega() * k.omega().adjoint();
    CondExpectation e = conditional_expectation(a, scalars, make_state(a, haar));
    Inclusion inc = make_inclusion(a, scalars, e, Mat::Identity(n, n));
    BasicExtension ext = basic_extension(inc);
    std::vector<Mat> units;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) units.push_back(testsupport::unit(n, i, j));
    const Mat& ehat = dk.e_hat();
    ExtensionModel model{MMAlgebra::from_span(units, n), ehat, a.basis(),
                         [&](const Mat& y) { return solve_weight(a.basis(), a.basis(), ehat, y); }};
    ModelVerification v = verify_extension_model(inc, ext, model);
    CHECK(v.hypotheses.max() < 1e-9);
    CHECK(v.passed());
    CHECK(v.unitarity < 1e-9);
  }
}

TEST_CASE("extension model: broken hypotheses are named") {
  Inclusion inc = load_inclusion("inclusion_c_in_m2_trace");
  BasicExtension ext = basic_extension(inc);
  ExtensionModel model{ext.m1, ext.e_n, ext.m_ops, [&](const Mat& x) { return 2.0 * ext.dual_weight(x); }};
  ModelVerification v = verify_extension_model(inc, ext, model);
  CHECK_FALSE(v.passed());
  CHECK(std::find_if(v.failed.begin(), v.failed.end(), [](const char* s) { return std::string(s) == "unit"; }) !=
        v.failed.end());
  int n = ext.space_dim;
  ExtensionModel wrong_e{ext.m1, Mat::Identity(n, n) - ext.e_n, ext.m_ops,
                         [&](const Mat& x) { return ext.dual_weight(x); }};
  ModelVerification w = verify_extension_model(inc, ext, wrong_e);
  CHECK_FALSE(w.passed());
  CHECK_FALSE(w.failed.empty());
}
