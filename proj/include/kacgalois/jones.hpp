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

#include <cstdint>
#include <functional>
#include <vector>

#include "kacgalois/algebra.hpp"
#include "kacgalois/json_io.hpp"

namespace kacgalois {

class InvalidExpectationError : public Error {
 public:
  InvalidExpectationError(const std::string& what, const ExpectationResiduals& r)
      : Error(what), residuals_(r) {}
  const ExpectationResiduals& residuals() const { return residuals_; }

 private:
  ExpectationResiduals residuals_;
};

struct Inclusion {
  MMAlgebra m;
  MMAlgebra n;
  CondExpectation e;
  StateData omega;  // density inside N
  StateData phi;    // omega o E, density inside M
  ExpectationResiduals residuals;
};

// Throws InvalidExpectationError when E fails unitality, range, idempotence,
// bimodularity or positivity, and NonFaithfulError when omega or omega o E
// is not faithful.
Inclusion make_inclusion(const MMAlgebra& m, const MMAlgebra& n, const CondExpectation& e,
                         const Mat& omega_density, const Tolerance& tol = {});
Inclusion inclusion_from_document(const InclusionDocument& doc, const Tolerance& tol = {});

// Density inside `a` of the functional x -> values(k) on the frame vectors.
Mat density_from_values(const MMAlgebra& a, const Vec& values);

struct ExtensionResiduals {
  double projection = 0;    // e_N is a self-adjoint idempotent
  double lambda = 0;        // e_N Lambda(x) = Lambda(E(x))
  double compression = 0;   // e_N x e_N = E(x) e_N
  double three_way = 0;     // J N' J, alg(M, e_N), span(M e_N M)
  double unit = 0;          // 1 in span(M e_N M)
  double consistency = 0;   // x e_N y -> xy is well defined
  double cross_check = 0;   // a second spanning set gives the same map
  double ehat_unit = 0;     // Ehat(e_N) = 1
  double bimodule = 0;
  double positivity = 0;    // -(least eigenvalue of Ehat(y* y)), clipped at 0
  double max() const;
};

struct BasicExtension {
  int d = 0;          // ambient dimension of M
  int space_dim = 0;  // dimension of the GNS space of (M, phi)
  GnsData gns;
  std::vector<Mat> m_ops;  // M basis acting on the GNS space
  std::vector<Mat> n_ops;
  Mat e_n;
  MMAlgebra n_prime;
  MMAlgebra m1;  // J N' J
  MMAlgebra generated;
  MMAlgebra spanned;
  Mat ehat;  // vec(Ehat(x)) = ehat * vec(x)
  ExtensionResiduals residuals;

  Mat represent(const Mat& x) const { return gns.represent(x); }
  Mat dual_weight(const Mat& x) const { return unvec(ehat * vec(x), d); }
  Mat j(const Mat& x) const { return gns.conjugate_by_j(x.adjoint()); }
};

BasicExtension basic_extension(const Inclusion& inc, const Tolerance& tol = {});

// max over a basis of M1 of |e_N Ehat(e_N x) - e_N x|
double push_down_residual(const BasicExtension& ext);

struct IndexReport {
  Mat value;  // Ehat(1) inside M
  double centrality = 0;
  std::vector<double> coefficients;  // one per minimal central projection of M
  double total = 0;
  double imaginary = 0;
};

IndexReport index(const Inclusion& inc, const BasicExtension& ext, const Tolerance& tol = {});

struct SummandReport {
  int partner = -1;  // index of the summand j maps this one onto
  int block_size = 0;
  int multiplicity = 0;
  int n_block = -1;  // minimal central projection of N above the summand
  std::vector<double> a_squared;  // eigenvalues, ascending
  std::vector<double> a;
  double trace_a = 0;
  double trace_a_inverse = 0;
  double flow = 0;
};

struct RelCommReport {
  int dim = 0;
  int slot_a = 0;
  int slot_b1 = 0;
  int slot_b2 = 0;
  int slot_c = 0;
  std::vector<SummandReport> summands;
  double j_antiautomorphism = 0;
  double j_flow = 0;        // j o sigma_t = sigma_t o j
  double scalarization = 0; // E o Ehat lands in the center of N
  double spectrum_inversion = 0;
  double flow = 0;           // sigma_t against Ad(a^{-it}) on every summand
  double flow_invariance = 0;  // sigma_t preserves M1 cap N'
  double a_deviation = 0;     // max |a - 1|
  double direct_defect = 0;   // max |s(E Ehat j(x)) - s(E Ehat x)|
  double ehat_j_defect = 0;   // max |Ehat j(x) - Ehat x|
  bool extremal = false;
  bool criteria_agree = false;
};

extern const double kFlowTimes[3];

RelCommReport relcomm_decomposition(const Inclusion& inc, const BasicExtension& ext,
                                    const Tolerance& tol = {});

struct Extremality {
  bool extremal = false;
  double a_deviation = 0;
  double direct_defect = 0;
  bool agree = false;
};

Extremality extremality(const RelCommReport& r, const Tolerance& tol = {});

struct OmegaIndependence {
  double e_n = 0;
  double m1 = 0;
  double ehat = 0;
  double flow = 0;
  double a_spectra = 0;
  double max() const;
};

// Rebuilds the extension with a second faithful state on N and compares.
OmegaIndependence omega_independence(const Inclusion& inc, const BasicExtension& ext,
                                     const RelCommReport& report, const Mat& omega_density,
                                     const Tolerance& tol = {});

struct ExtensionModel {
  MMAlgebra r;
  Mat e;
  std::vector<Mat> m_images;  // images of the basis of M inside R
  std::function<Mat(const Mat&)> t;  // R -> M
};

struct ModelHypotheses {
  double compression = 0;  // e x e = E(x) e
  double generation = 0;   // R = alg(M, e)
  double t_unit = 0;       // T(e) = 1
  double bimodule = 0;
  double positivity = 0;
  double invariance = 0;   // e commutes with the density of phi o T
  double max() const;
};

struct ModelVerification {
  ModelHypotheses hypotheses;
  std::vector<const char*> failed;
  GnsData source;  // (M1, phi o Ehat)
  GnsData target;  // (R, phi o T)
  Mat u;
  double unitarity = 0;
  double restriction = 0;  // pi|_M = id
  double projection = 0;   // pi(e_N) = e
  double weight = 0;       // T o pi = Ehat
  bool passed(const Tolerance& tol = {}) const;
};

ModelVerification verify_extension_model(const Inclusion& inc, const BasicExtension& ext,
                                          const ExtensionModel& model, const Tolerance& tol = {});

// Element of R that pi sends x to, for x in M1.
Mat apply_model_isomorphism(const BasicExtension& ext, const ExtensionModel& model,
                            const ModelVerification& v, const Mat& x);

// Random N inside M inside M_d, d <= max_ambient and dim M <= max_dim, with
// a faithful expectation that is non-tracial for most seeds.
InclusionDocument random_inclusion(std::uint64_t seed, int max_ambient = 6, int max_dim = 12);

}  // namespace kacgalois
