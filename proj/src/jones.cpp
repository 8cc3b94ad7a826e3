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


#include "kacgalois/jones.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kacgalois {

namespace {

double rel(const Mat& diff, const Mat& ref) { return diff.norm() / std::max(1.0, ref.norm()); }

Mat unit_vector_matrix(int d) { return Mat::Identity(d, d); }

// Coordinates of x against a.basis().
Vec basis_coords(const MMAlgebra& a, const Mat& x) {
  return a.frame().adjoint() * vec(x) / std::sqrt(static_cast<double>(a.ambient_dim()));
}

Mat random_element(const MMAlgebra& a, Rng& rng) {
  Vec c = random_matrix(a.dim(), 1, rng);
  Mat out = Mat::Zero(a.ambient_dim(), a.ambient_dim());
  for (int k = 0; k < a.dim(); ++k) out += c(k) * a.basis()[k];
  return out;
}

double least_positive(const Mat& x) { return std::max(0.0, -min_eigenvalue(hermitian_part(x))); }

std::vector<Mat> first(const std::vector<Mat>& v, size_t count) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(count, v.size()))};
}

// Density inside M1 of x -> phi(Ehat(x)).
Mat psi_density(const Inclusion& inc, const BasicExtension& ext) {
  const Mat& f = ext.m1.frame();
  Vec values(f.cols());
  for (Eigen::Index k = 0; k < f.cols(); ++k)
    values(k) = inc.phi(ext.dual_weight(unvec(f.col(k), ext.space_dim)));
  return hermitian_part(density_from_values(ext.m1, values));
}

Mat ehat_from_span(const std::vector<Mat>& ops, const std::vector<Mat>& elems, const Mat& e, int d,
                   const Tolerance& tol, double* consistency) {
  int n = static_cast<int>(e.rows());
  size_t k = ops.size();
  Mat s(n * n, k * k), t(d * d, k * k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      s.col(i * k + j) = vec(ops[i] * e * ops[j]);
      t.col(i * k + j) = vec(elems[i] * elems[j]);
    }
  Mat map = t * pinv(s, tol.rank);
  if (consistency) *consistency = rel(map * s - t, t);
  return map;
}

}  // namespace

const double kFlowTimes[3] = {0.3, 1.0, 1.4142135623730951};

Mat density_from_values(const MMAlgebra& a, const Vec& values) {
  return unvec(a.frame() * values.conjugate(), a.ambient_dim()).adjoint();
}

Inclusion make_inclusion(const MMAlgebra& m, const MMAlgebra& n, const CondExpectation& e,
                         const Mat& omega_density, const Tolerance& tol) {
  int d = m.ambient_dim();
  if (n.ambient_dim() != d || e.d != d || e.map.rows() != d * d || e.map.cols() != d * d)
    throw DimensionError("inclusion: ambient dimensions disagree");
  if (omega_density.rows() != d || omega_density.cols() != d)
    throw DimensionError("inclusion: omega density shape");
  if (!m.contains_unit(tol) || !n.contains_unit(tol))
    throw DimensionError("inclusion: algebras must contain the unit");
  if (n.excess_over(m) > tol.tau) throw DimensionError("inclusion: N is not inside M");
  Inclusion inc;
  inc.m = m;
  inc.n = n;
  inc.e = e;
  inc.residuals = expectation_residuals(m, n, e);
  const ExpectationResiduals& r = inc.residuals;
  std::pair<const char*, double> checks[] = {{"unital", r.unital},
                                             {"range", r.range},
                                             {"idempotent", r.idempotent},
                                             {"bimodule", r.bimodule},
                                             {"positivity", r.positivity}};
  for (auto [name, value] : checks)
    if (value > tol.tau)
      throw InvalidExpectationError(std::string("inclusion: expectation fails the ") + name +
                                        " check (residual " + std::to_string(value) + ")",
                                    r);
  Mat rw = hermitian_part(n.project(hermitian_part(omega_density)));
  double tr = rw.trace().real();
  if (tr <= tol.tau) throw NonFaithfulError("inclusion: omega pairs to zero with the unit");
  rw /= tr;
  if (min_eigenvalue(rw) <= tol.tau) throw NonFaithfulError("inclusion: omega is not faithful on N");
  inc.omega.density = rw;
  inc.omega.faithful = true;
  const Mat& f = m.frame();
  Vec values(f.cols());
  for (Eigen::Index k = 0; k < f.cols(); ++k) values(k) = inc.omega(e(unvec(f.col(k), d)));
  inc.phi.density = hermitian_part(density_from_values(m, values));
  if (min_eigenvalue(inc.phi.density) <= tol.tau)
    throw NonFaithfulError("inclusion: the expectation is not faithful");
  inc.phi.faithful = true;
  return inc;
}

Inclusion inclusion_from_document(const InclusionDocument& doc, const Tolerance& tol) {
  int d = doc.ambient_dim;
  MMAlgebra m = MMAlgebra::from_span(doc.m_basis, d, tol);
  MMAlgebra n = MMAlgebra::from_span(doc.n_basis, d, tol);
  if (m.closure_residual() > tol.tau) throw DimensionError("inclusion: M is not a *-algebra");
  if (n.closure_residual() > tol.tau) throw DimensionError("inclusion: N is not a *-algebra");
  CondExpectation e;
  e.d = d;
  e.map = doc.e_matrix;
  return make_inclusion(m, n, e, doc.omega_density, tol);
}

double ExtensionResiduals::max() const {
  return std::max({projection, lambda, compression, three_way, unit, consistency, cross_check,
                   ehat_unit, bimodule, positivity});
}

BasicExtension basic_extension(const Inclusion& inc, const Tolerance& tol) {
  BasicExtension ext;
  const MMAlgebra& m = inc.m;
  int d = m.ambient_dim();
  ext.d = d;
  ext.gns = gns(m, inc.phi, tol);
  int n = ext.gns.space_dim;
  ext.space_dim = n;
  for (const Mat& b : m.basis()) ext.m_ops.push_back(ext.gns.represent(b));
  for (const Mat& b : inc.n.basis()) ext.n_ops.push_back(ext.gns.represent(b));

  ext.e_n = Mat(n, n);
  for (int k = 0; k < n; ++k)
    ext.e_n.col(k) = ext.gns.lambda(inc.e(ext.gns.element(Vec::Unit(n, k))));
  ExtensionResiduals& r = ext.residuals;
  r.projection = std::max((ext.e_n * ext.e_n - ext.e_n).norm(), (ext.e_n - ext.e_n.adjoint()).norm());
  for (int k = 0; k < m.dim(); ++k) {
    const Mat& b = m.basis()[k];
    Mat eb = inc.e(b);
    r.lambda = std::max(r.lambda, (ext.e_n * ext.gns.lambda(b) - ext.gns.lambda(eb)).norm());
    Mat lhs = ext.e_n * ext.m_ops[k] * ext.e_n;
    r.compression = std::max(r.compression, rel(lhs - ext.gns.represent(eb) * ext.e_n, lhs));
  }

  ext.n_prime = commutant(MMAlgebra::from_span(ext.n_ops, n, tol), tol);
  std::vector<Mat> flipped;
  for (const Mat& b : ext.n_prime.basis()) flipped.push_back(ext.gns.conjugate_by_j(b));
  ext.m1 = MMAlgebra::from_span(flipped, n, tol);
  std::vector<Mat> gens = ext.m_ops;
  gens.push_back(ext.e_n);
  ext.generated = mm_from_generators(gens, n, tol);
  std::vector<Mat> products;
  for (const Mat& x : ext.m_ops)
    for (const Mat& y : ext.m_ops) products.push_back(x * ext.e_n * y);
  ext.spanned = MMAlgebra::from_span(products, n, tol);
  r.three_way = std::max({ext.m1.distance(ext.generated), ext.m1.distance(ext.spanned),
                          ext.generated.distance(ext.spanned)});
  r.unit = ext.spanned.residual(unit_vector_matrix(n));

  ext.ehat = ehat_from_span(ext.m_ops, m.basis(), ext.e_n, d, tol, &r.consistency);
  Rng rng(0x5eed0001ULL + static_cast<std::uint64_t>(m.dim()));
  Mat g = random_matrix(m.dim(), m.dim(), rng);
  std::vector<Mat> ops2, elems2;
  for (int i = 0; i < m.dim(); ++i) {
    Mat x = Mat::Zero(d, d), xo = Mat::Zero(n, n);
    for (int j = 0; j < m.dim(); ++j) {
      x += g(i, j) * m.basis()[j];
      xo += g(i, j) * ext.m_ops[j];
    }
    elems2.push_back(x);
    ops2.push_back(xo);
  }
  double consistency2 = 0;
  Mat ehat2 = ehat_from_span(ops2, elems2, ext.e_n, d, tol, &consistency2);
  r.cross_check = std::max(rel(ext.ehat - ehat2, ext.ehat), consistency2);
  r.ehat_unit = (ext.dual_weight(ext.e_n) - Mat::Identity(d, d)).norm();

  std::vector<Mat> ms = first(m.basis(), 6), m1s = first(ext.m1.basis(), 6);
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = 0; j < ms.size(); ++j)
      for (const Mat& a : m1s) {
        Mat lhs = ext.dual_weight(ext.m_ops[i] * a * ext.m_ops[j]);
        r.bimodule = std::max(r.bimodule, rel(lhs - ms[i] * ext.dual_weight(a) * ms[j], lhs));
      }
  for (int s = 0; s < 8; ++s) {
    Mat y = random_element(ext.m1, rng);
    Mat img = ext.dual_weight(y.adjoint() * y);
    r.positivity = std::max({r.positivity, least_positive(img) / std::max(1.0, img.norm()),
                             (img - img.adjoint()).norm() / std::max(1.0, img.norm())});
  }
  return ext;
}

double push_down_residual(const BasicExtension& ext) {
  double worst = 0;
  for (const Mat& x : ext.m1.basis()) {
    Mat rhs = ext.e_n * x;
    Mat lhs = ext.e_n * ext.represent(ext.dual_weight(rhs));
    worst = std::max(worst, rel(lhs - rhs, rhs));
  }
  return worst;
}

IndexReport index(const Inclusion& inc, const BasicExtension& ext, const Tolerance& tol) {
  IndexReport out;
  int n = ext.space_dim;
  out.value = ext.dual_weight(Mat::Identity(n, n));
  for (const Mat& b : inc.m.basis())
    out.centrality = std::max(out.centrality, rel(out.value * b - b * out.value, out.value));
  for (const Mat& p : central_decomposition(inc.m, tol).projections) {
    cplx c = (out.value * p).trace() / p.trace();
    out.coefficients.push_back(c.real());
    out.imaginary = std::max(out.imaginary, std::abs(c.imag()));
    out.total += c.real();
  }
  return out;
}

namespace {

struct Summand {
  Mat z;       // central projection on the GNS space
  MMAlgebra block;
  Mat range;   // orthonormal basis of the range of z
  Mat a;       // compressed to the range
};

int closest(const std::vector<Mat>& candidates, const Mat& x, double* distance) {
  int best = -1;
  double best_d = 0;
  for (size_t i = 0; i < candidates.size(); ++i) {
    double dd = (candidates[i] - x).norm();
    if (best < 0 || dd < best_d) {
      best = static_cast<int>(i);
      best_d = dd;
    }
  }
  if (distance) *distance = best_d;
  return best;
}

}  // namespace

RelCommReport relcomm_decomposition(const Inclusion& inc, const BasicExtension& ext,
                                    const Tolerance& tol) {
  RelCommReport out;
  int n = ext.space_dim;
  MMAlgebra rc = intersect(ext.m1, ext.n_prime);
  out.dim = rc.dim();
  out.slot_a = rc.dim();
  CentralDecomposition cd = central_decomposition(rc, tol);
  std::vector<Mat> qs, q_ops;
  for (const Mat& q : central_decomposition(inc.n, tol).projections) {
    qs.push_back(q);
    q_ops.push_back(ext.represent(q));
  }
  auto t_map = [&](const Mat& x) { return inc.e(ext.dual_weight(x)); };
  auto scalar = [&](const Mat& z, int i) { return (z * qs[i]).trace() / qs[i].trace(); };

  std::vector<Summand> parts;
  for (size_t s = 0; s < cd.projections.size(); ++s) {
    Summand p;
    p.z = cd.projections[s];
    std::vector<Mat> cut;
    for (const Mat& b : rc.basis()) cut.push_back(b * p.z);
    p.block = MMAlgebra::from_span(cut, n, tol);
    p.range = orth(p.z, tol.rank);
    parts.push_back(std::move(p));
    SummandReport rep;
    rep.block_size = cd.blocks[s].size;
    rep.multiplicity = cd.blocks[s].multiplicity;
    out.summands.push_back(rep);
  }
  std::vector<Mat> zs;
  for (const Summand& p : parts) zs.push_back(p.z);
  for (size_t s = 0; s < parts.size(); ++s) {
    double dist = 0;
    std::vector<Mat> under;
    for (const Mat& q : q_ops) under.push_back(parts[s].z * q);
    out.summands[s].n_block = closest(under, parts[s].z, &dist);
    out.scalarization = std::max(out.scalarization, dist);
    out.summands[s].partner = closest(zs, ext.j(parts[s].z), &dist);
    out.j_antiautomorphism = std::max(out.j_antiautomorphism, dist);
  }

  for (size_t s = 0; s < parts.size(); ++s) {
    Summand& p = parts[s];
    SummandReport& rep = out.summands[s];
    int qi = rep.n_block;
    int qj = out.summands[rep.partner].n_block;
    const Mat& f = p.block.frame();
    Vec tv(f.cols()), jv(f.cols());
    for (Eigen::Index k = 0; k < f.cols(); ++k) {
      Mat x = unvec(f.col(k), n);
      Mat tx = t_map(x);
      tv(k) = scalar(tx, qi);
      out.scalarization = std::max(out.scalarization, rel(tx - tv(k) * qs[qi], tx));
      jv(k) = scalar(t_map(ext.j(x)), qj);
    }
    Mat dc = hermitian_part(p.range.adjoint() * density_from_values(p.block, tv) * p.range);
    Mat djc = hermitian_part(p.range.adjoint() * density_from_values(p.block, jv) * p.range);
    if (min_eigenvalue(dc) <= tol.tau || min_eigenvalue(djc) <= tol.tau)
      throw InconsistencyError("relative commutant: the dual weight is degenerate on a summand");
    Mat dih = hermitian_power(dc, -0.5);
    Mat a2 = hermitian_part(dih * djc * dih);
    p.a = hermitian_power(a2, 0.5);
    Eigen::VectorXd ev = eigenvalues_sorted(a2);
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      rep.a_squared.push_back(ev(i));
      rep.a.push_back(std::sqrt(ev(i)));
    }
    rep.trace_a = p.a.trace().real();
    rep.trace_a_inverse = hermitian_power(a2, -0.5).trace().real();
    out.a_deviation = std::max(out.a_deviation, op_norm(p.a - Mat::Identity(p.a.rows(), p.a.cols())));
  }
  for (const SummandReport& rep : out.summands) {
    const SummandReport& bar = out.summands[rep.partner];
    if (bar.a.size() != rep.a.size()) {
      out.spectrum_inversion = std::max(out.spectrum_inversion, 1.0);
      continue;
    }
    size_t r = rep.a.size();
    for (size_t i = 0; i < r; ++i)
      out.spectrum_inversion =
          std::max(out.spectrum_inversion, std::abs(rep.a[i] * bar.a[r - 1 - i] - 1.0));
  }

  Mat dpsi = psi_density(inc, ext);
  if (min_eigenvalue(dpsi) <= tol.tau)
    throw InconsistencyError("relative commutant: phi o Ehat is not faithful on M1");
  for (double t : kFlowTimes) {
    Mat u = hermitian_unitary_power(dpsi, t);
    auto sigma = [&](const Mat& x) { Mat y = u * x * u.adjoint(); return y; };
    for (size_t s = 0; s < parts.size(); ++s) {
      const Summand& p = parts[s];
      Mat w = p.range * hermitian_unitary_power(p.a, -t) * p.range.adjoint();
      double worst = 0;
      for (const Mat& b : first(p.block.basis(), 16)) {
        Mat sb = sigma(b);
        worst = std::max(worst, rel(sb - w * b * w.adjoint(), b));
        out.flow_invariance = std::max(out.flow_invariance, rc.residual(sb));
      }
      out.summands[s].flow = std::max(out.summands[s].flow, worst);
      out.flow = std::max(out.flow, worst);
    }
    for (const Mat& b : first(rc.basis(), 16))
      out.j_flow = std::max(out.j_flow, rel(ext.j(sigma(b)) - sigma(ext.j(b)), b));
  }

  std::vector<Mat> rs = first(rc.basis(), 8);
  for (const Mat& x : rs) {
    Mat jx = ext.j(x);
    out.j_antiautomorphism = std::max({out.j_antiautomorphism, rc.residual(jx),
                                       rel(ext.j(x.adjoint()) - jx.adjoint(), x),
                                       rel(ext.j(jx) - x, x)});
    for (const Mat& y : rs)
      out.j_antiautomorphism = std::max(out.j_antiautomorphism, rel(ext.j(x * y) - ext.j(y) * jx, x * y));
  }
  auto total_scalar = [&](const Mat& z) {
    cplx s = 0;
    for (size_t i = 0; i < qs.size(); ++i) s += scalar(z, static_cast<int>(i));
    return s;
  };
  for (const Mat& x : rc.basis()) {
    Mat jx = ext.j(x);
    out.direct_defect = std::max(out.direct_defect, std::abs(total_scalar(t_map(jx)) - total_scalar(t_map(x))));
    out.ehat_j_defect = std::max(out.ehat_j_defect, (ext.dual_weight(jx) - ext.dual_weight(x)).norm());
  }
  out.extremal = out.a_deviation < tol.tau;
  out.criteria_agree = out.extremal == (out.direct_defect < tol.tau);
  return out;
}

Extremality extremality(const RelCommReport& r, const Tolerance& tol) {
  Extremality e;
  e.a_deviation = r.a_deviation;
  e.direct_defect = r.direct_defect;
  e.extremal = r.a_deviation < tol.tau;
  e.agree = e.extremal == (r.direct_defect < tol.tau);
  return e;
}

double OmegaIndependence::max() const { return std::max({e_n, m1, ehat, flow, a_spectra}); }

OmegaIndependence omega_independence(const Inclusion& inc, const BasicExtension& ext,
                                     const RelCommReport& report, const Mat& omega_density,
                                     const Tolerance& tol) {
  OmegaIndependence out;
  Inclusion inc2 = make_inclusion(inc.m, inc.n, inc.e, omega_density, tol);
  BasicExtension ext2 = basic_extension(inc2, tol);
  out.e_n = (ext.e_n - ext2.e_n).norm();
  out.m1 = ext.m1.distance(ext2.m1);
  out.ehat = rel(ext.ehat - ext2.ehat, ext.ehat);
  MMAlgebra rc = intersect(ext.m1, ext.n_prime);
  Mat d1 = psi_density(inc, ext), d2 = psi_density(inc2, ext2);
  for (double t : kFlowTimes) {
    Mat u1 = hermitian_unitary_power(d1, t), u2 = hermitian_unitary_power(d2, t);
    for (const Mat& b : first(rc.basis(), 24))
      out.flow = std::max(out.flow, rel(u1 * b * u1.adjoint() - u2 * b * u2.adjoint(), b));
  }
  RelCommReport r2 = relcomm_decomposition(inc2, ext2, tol);
  std::vector<double> s1, s2;
  for (const SummandReport& s : report.summands) s1.insert(s1.end(), s.a_squared.begin(), s.a_squared.end());
  for (const SummandReport& s : r2.summands) s2.insert(s2.end(), s.a_squared.begin(), s.a_squared.end());
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1.size() != s2.size()) {
    out.a_spectra = 1.0;
  } else {
    for (size_t i = 0; i < s1.size(); ++i) out.a_spectra = std::max(out.a_spectra, std::abs(s1[i] - s2[i]));
  }
  return out;
}

double ModelHypotheses::max() const {
  return std::max({compression, generation, t_unit, bimodule, positivity, invariance});
}

bool ModelVerification::passed(const Tolerance& tol) const {
  return failed.empty() && std::max({unitarity, restriction, projection, weight}) < tol.tau;
}

ModelVerification verify_extension_model(const Inclusion& inc, const BasicExtension& ext,
                                          const ExtensionModel& model, const Tolerance& tol) {
  ModelVerification out;
  const MMAlgebra& m = inc.m;
  const MMAlgebra& r = model.r;
  int d = m.ambient_dim();
  int rd = r.ambient_dim();
  if (static_cast<int>(model.m_images.size()) != m.dim())
    throw DimensionError("extension model: one image per basis element of M is required");
  if (model.e.rows() != rd || model.e.cols() != rd) throw DimensionError("extension model: e shape");
  auto image = [&](const Mat& x) {
    Vec c = basis_coords(m, x);
    Mat y = Mat::Zero(rd, rd);
    for (int k = 0; k < m.dim(); ++k) y += c(k) * model.m_images[k];
    return y;
  };
  ModelHypotheses& h = out.hypotheses;
  for (int k = 0; k < m.dim(); ++k) {
    Mat lhs = model.e * model.m_images[k] * model.e;
    h.compression = std::max(h.compression, rel(lhs - image(inc.e(m.basis()[k])) * model.e, lhs));
  }
  std::vector<Mat> gens = model.m_images;
  gens.push_back(model.e);
  h.generation = mm_from_generators(gens, rd, tol).distance(r);
  h.t_unit = (model.t(model.e) - Mat::Identity(d, d)).norm();
  std::vector<Mat> ms = first(m.basis(), 6), rs = first(r.basis(), 6);
  for (const Mat& x : ms)
    for (const Mat& y : ms)
      for (const Mat& a : rs) {
        Mat lhs = model.t(image(x) * a * image(y));
        h.bimodule = std::max(h.bimodule, rel(lhs - x * model.t(a) * y, lhs));
      }
  Rng rng(0x5eed0002ULL);
  for (int s = 0; s < 8; ++s) {
    Mat y = random_element(r, rng);
    Mat img = model.t(y.adjoint() * y);
    h.positivity = std::max({h.positivity, least_positive(img) / std::max(1.0, img.norm()),
                             (img - img.adjoint()).norm() / std::max(1.0, img.norm())});
  }
  Vec values(r.dim());
  for (int k = 0; k < r.dim(); ++k) values(k) = inc.phi(model.t(unvec(r.frame().col(k), rd)));
  Mat rho = hermitian_part(density_from_values(r, values));
  h.invariance = rel(rho * model.e - model.e * rho, rho);
  std::pair<const char*, double> checks[] = {{"compression", h.compression}, {"generation", h.generation},
                                             {"unit", h.t_unit},             {"bimodule", h.bimodule},
                                             {"positivity", h.positivity},   {"invariance", h.invariance}};
  for (auto [name, value] : checks)
    if (value > tol.tau) out.failed.push_back(name);
  if (!out.failed.empty()) return out;
  if (min_eigenvalue(rho) <= tol.tau) {
    out.failed.push_back("faithfulness");
    return out;
  }

  out.source = gns(ext.m1, make_state(ext.m1, psi_density(inc, ext), tol), tol);
  out.target = gns(r, make_state(r, rho, tol), tol);
  int k = m.dim();
  Mat a1(out.source.space_dim, k * k), a2(out.target.space_dim, k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      a1.col(i * k + j) = out.source.lambda(ext.m_ops[i] * ext.e_n * ext.m_ops[j]);
      a2.col(i * k + j) = out.target.lambda(model.m_images[i] * model.e * model.m_images[j]);
    }
  out.u = a2 * pinv(a1, tol.rank);
  const Mat& u = out.u;
  out.unitarity = std::max((u.adjoint() * u - Mat::Identity(u.cols(), u.cols())).norm(),
                           (u * u.adjoint() - Mat::Identity(u.rows(), u.rows())).norm());
  for (int i = 0; i < k; ++i) {
    Mat lhs = u * out.source.represent(ext.m_ops[i]) * u.adjoint();
    out.restriction = std::max(out.restriction, rel(lhs - out.target.represent(model.m_images[i]), lhs));
  }
  {
    Mat lhs = u * out.source.represent(ext.e_n) * u.adjoint();
    out.projection = rel(lhs - out.target.represent(model.e), lhs);
  }
  for (const Mat& b : first(ext.m1.basis(), 24)) {
    Mat lhs = model.t(apply_model_isomorphism(ext, model, out, b));
    Mat rhs = ext.dual_weight(b);
    out.weight = std::max(out.weight, rel(lhs - rhs, rhs));
  }
  return out;
}

Mat apply_model_isomorphism(const BasicExtension&, const ExtensionModel&, const ModelVerification& v,
                            const Mat& x) {
  Mat op = v.u * v.source.represent(x) * v.u.adjoint();
  return v.target.element(op * v.target.omega);
}

InclusionDocument random_inclusion(std::uint64_t seed, int max_ambient, int max_dim) {
  Rng rng(0x9e3779b97f4a7c15ULL * (seed + 1) + 0x2545f4914f6cdd1dULL);
  std::vector<int> nsz, msz, mult;
  std::vector<std::vector<int>> lam;
  int d = 0;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 10000) throw Error("random_inclusion: no admissible shape");
    int nb = 1 + static_cast<int>(rng() % 2);
    int mb = 1 + static_cast<int>(rng() % 3);
    nsz.assign(nb, 0);
    for (int& s : nsz) s = 1 + static_cast<int>(rng() % 2);
    lam.assign(nb, std::vector<int>(mb, 0));
    for (auto& row : lam)
      for (int& v : row) v = static_cast<int>(rng() % 3);
    mult.assign(mb, 1);
    for (int& v : mult) v = rng() % 4 == 0 ? 2 : 1;
    msz.assign(mb, 0);
    bool ok = true;
    for (int i = 0; i < nb; ++i) {
      int row = 0;
      for (int j = 0; j < mb; ++j) row += lam[i][j];
      ok = ok && row > 0;
    }
    int dim = 0;
    d = 0;
    for (int j = 0; j < mb; ++j) {
      for (int i = 0; i < nb; ++i) msz[j] += lam[i][j] * nsz[i];
      ok = ok && msz[j] > 0;
      dim += msz[j] * msz[j];
      d += mult[j] * msz[j];
    }
    if (ok && d >= 2 && d <= max_ambient && dim <= max_dim) break;
  }
  int nb = static_cast<int>(nsz.size()), mb = static_cast<int>(msz.size());
  std::vector<int> offset(mb, 0);
  for (int j = 1; j < mb; ++j) offset[j] = offset[j - 1] + mult[j - 1] * msz[j - 1];
  auto m_unit = [&](int j, int a, int b) {
    Mat x = Mat::Zero(d, d);
    for (int c = 0; c < mult[j]; ++c) x(offset[j] + c * msz[j] + a, offset[j] + c * msz[j] + b) = 1.0;
    return x;
  };
  Mat w = random_unitary(d, rng);
  InclusionDocument doc;
  doc.ambient_dim = d;
  for (int j = 0; j < mb; ++j)
    for (int a = 0; a < msz[j]; ++a)
      for (int b = 0; b < msz[j]; ++b) doc.m_basis.push_back(w * m_unit(j, a, b) * w.adjoint());
  for (int i = 0; i < nb; ++i)
    for (int a = 0; a < nsz[i]; ++a)
      for (int b = 0; b < nsz[i]; ++b) {
        Mat x = Mat::Zero(d, d);
        for (int j = 0; j < mb; ++j) {
          int pos = 0;
          for (int i2 = 0; i2 < i; ++i2) pos += lam[i2][j] * nsz[i2];
          for (int r = 0; r < lam[i][j]; ++r) x += m_unit(j, pos + r * nsz[i] + a, pos + r * nsz[i] + b);
        }
        doc.n_basis.push_back(w * x * w.adjoint());
      }
  MMAlgebra m = MMAlgebra::from_span(doc.m_basis, d);
  MMAlgebra n = MMAlgebra::from_span(doc.n_basis, d);
  Mat rho;
  if (seed % 4 == 0) {
    rho = Mat::Identity(d, d);
  } else {
    Mat rn = n.project(random_positive(d, rng));
    Mat h = intersect(commutant(n), m).project(random_positive(d, rng));
    rho = hermitian_part(rn * h);
  }
  rho /= rho.trace().real();
  CondExpectation e = conditional_expectation(m, n, make_state(m, rho));
  doc.e_matrix = e.map;
  Mat om = hermitian_part(n.project(random_positive(d, rng)));
  doc.omega_density = om / om.trace().real();
  return doc;
}

}  // namespace kacgalois
