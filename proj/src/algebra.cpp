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

#include "kacgalois/algebra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace kacgalois {

namespace {

Mat basis_from_frame(const Mat& frame, int k, int d) {
  return std::sqrt(static_cast<double>(d)) * unvec(frame.col(k), d);
}

double rel(const Mat& diff, const Mat& ref) {
  return diff.norm() / std::max(1.0, ref.norm());
}

// A few generic elements (and their adjoints) that generate `a`.
std::vector<Mat> generic_generators(const MMAlgebra& a, int count, std::uint64_t salt) {
  std::vector<Mat> out;
  int k = a.dim();
  for (int c = 0; c < count; ++c) {
    std::vector<double> w = generic_weights(2 * k, salt + 17 * c);
    Mat g = Mat::Zero(a.ambient_dim(), a.ambient_dim());
    for (int i = 0; i < k; ++i) g += cplx(w[2 * i], w[2 * i + 1] - 1.0) * a.basis()[i];
    out.push_back(g);
    out.push_back(g.adjoint());
  }
  return out;
}

Mat commutation_system(const std::vector<Mat>& gens, int d) {
  int dd = d * d;
  Mat k(dd * static_cast<int>(gens.size()), dd);
  Mat id = Mat::Identity(d, d);
  for (size_t i = 0; i < gens.size(); ++i)
    k.block(static_cast<Eigen::Index>(i) * dd, 0, dd, dd) =
        kron(gens[i], id) - kron(id, gens[i].transpose());
  return k;
}

}  // namespace

MMAlgebra MMAlgebra::from_span(const std::vector<Mat>& mats, int d, const Tolerance& tol) {
  if (d < 1) throw DimensionError("ambient dimension must be positive");
  for (const Mat& m : mats)
    if (m.rows() != d || m.cols() != d) throw DimensionError("matrix is not d x d");
  return from_frame(orth(stack_vecs(mats, d), tol.rank), d);
}

MMAlgebra MMAlgebra::from_frame(const Mat& frame, int d) {
  MMAlgebra a;
  a.d_ = d;
  a.frame_ = frame;
  a.basis_.reserve(frame.cols());
  for (Eigen::Index k = 0; k < frame.cols(); ++k)
    a.basis_.push_back(basis_from_frame(frame, static_cast<int>(k), d));
  return a;
}

bool MMAlgebra::contains_unit(const Tolerance& tol) const {
  return residual(Mat::Identity(d_, d_)) < tol.tau;
}

Mat MMAlgebra::project(const Mat& x) const {
  if (dim() == 0) return Mat::Zero(d_, d_);
  return unvec(frame_ * (frame_.adjoint() * vec(x)), d_);
}

double MMAlgebra::residual(const Mat& x) const {
  if (x.rows() != d_ || x.cols() != d_) throw DimensionError("residual: shape");
  return span_residual(frame_, vec(x));
}

double MMAlgebra::closure_residual() const {
  double r = residual(Mat::Identity(d_, d_));
  for (int i = 0; i < dim(); ++i) {
    r = std::max(r, residual(basis_[i].adjoint()));
    for (int j = 0; j < dim(); ++j) r = std::max(r, residual(basis_[i] * basis_[j]));
  }
  return r;
}

double MMAlgebra::distance(const MMAlgebra& other) const {
  if (d_ != other.d_) return 1.0;
  return span_distance(frame_, other.frame_);
}

double MMAlgebra::excess_over(const MMAlgebra& other) const {
  if (d_ != other.d_) return 1.0;
  return span_excess(other.frame_, frame_);
}

MMAlgebra mm_from_generators(const std::vector<Mat>& gens, int d, const Tolerance& tol) {
  if (d < 1) throw DimensionError("ambient dimension must be positive");
  std::vector<Mat> all;
  for (const Mat& g : gens) {
    if (g.rows() != d || g.cols() != d) throw DimensionError("generator is not d x d");
    all.push_back(g);
    all.push_back(g.adjoint());
  }
  std::vector<Mat> pool = all;
  pool.push_back(Mat::Identity(d, d));
  Mat frame = orth(stack_vecs(pool, d), tol.rank);
  while (true) {
    std::vector<Vec> cols;
    for (Eigen::Index k = 0; k < frame.cols(); ++k) {
      cols.push_back(frame.col(k));
      Mat b = unvec(frame.col(k), d);
      for (const Mat& g : all) cols.push_back(vec(g * b));
    }
    Mat next = orth(stack_columns(cols, d * d), tol.rank);
    if (next.cols() == frame.cols()) break;
    frame = next;
  }
  return MMAlgebra::from_frame(frame, d);
}

MMAlgebra commutant(const MMAlgebra& a, const Tolerance& tol) {
  int d = a.ambient_dim();
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Mat> gens = generic_generators(a, 2 + attempt, 101 + attempt);
    Mat ns = null_space(commutation_system(gens, d), tol.rank);
    MMAlgebra c = MMAlgebra::from_frame(ns, d);
    double worst = 0;
    for (const Mat& x : c.basis())
      for (const Mat& b : a.basis())
        worst = std::max(worst, (x * b - b * x).norm() / std::max(1.0, x.norm() * b.norm()));
    if (worst < tol.tau) return c;
  }
  Mat ns = null_space(commutation_system(a.basis(), d), tol.rank);
  return MMAlgebra::from_frame(ns, d);
}

MMAlgebra intersect(const MMAlgebra& a, const MMAlgebra& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("intersect: ambient mismatch");
  return MMAlgebra::from_frame(intersect_spans(a.frame(), b.frame()), a.ambient_dim());
}

MMAlgebra center(const MMAlgebra& a, const Tolerance& tol) {
  return intersect(a, commutant(a, tol));
}

CentralDecomposition central_decomposition(const MMAlgebra& a, const Tolerance& tol) {
  int d = a.ambient_dim();
  MMAlgebra z = center(a, tol);
  int nz = z.dim();
  CentralDecomposition out;
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::vector<double> w = generic_weights(2 * nz, 7 + 31 * attempt);
    Mat c = Mat::Zero(d, d);
    for (int k = 0; k < nz; ++k) {
      const Mat& b = z.basis()[k];
      c += w[2 * k] * hermitian_part(b) + w[2 * k + 1] * hermitian_part(cplx(0, -1) * b);
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(c);
    const Eigen::VectorXd& ev = es.eigenvalues();
    double spread = ev(d - 1) - ev(0);
    double gap = 1e-6 * std::max(1.0, spread);
    std::vector<std::vector<int>> clusters{{0}};
    for (int i = 1; i < d; ++i) {
      if (ev(i) - ev(i - 1) > gap) clusters.emplace_back();
      clusters.back().push_back(i);
    }
    if (static_cast<int>(clusters.size()) != nz) continue;
    out.projections.clear();
    out.blocks.clear();
    for (const auto& cl : clusters) {
      Mat v(d, static_cast<Eigen::Index>(cl.size()));
      for (size_t i = 0; i < cl.size(); ++i) v.col(i) = es.eigenvectors().col(cl[i]);
      Mat p = v * v.adjoint();
      std::vector<Mat> corner;
      for (const Mat& b : a.basis()) corner.push_back(p * b * p);
      int r = numerical_rank(stack_vecs(corner, d), tol.rank);
      int m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(r))));
      int rank_p = static_cast<int>(cl.size());
      out.projections.push_back(p);
      out.blocks.push_back({m, m > 0 ? rank_p / m : 0});
    }
    std::vector<size_t> order(out.projections.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto key = [&](size_t i) {
      std::vector<double> diag(d);
      for (int r = 0; r < d; ++r) diag[r] = -std::round(out.projections[i](r, r).real() * 1e6);
      return std::make_tuple(out.blocks[i].size, out.blocks[i].multiplicity, diag);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t x, size_t y) { return key(x) < key(y); });
    CentralDecomposition sorted;
    for (size_t i : order) {
      sorted.projections.push_back(out.projections[i]);
      sorted.blocks.push_back(out.blocks[i]);
    }
    return sorted;
  }
  throw InconsistencyError("central_decomposition: could not separate central summands");
}

std::vector<Mat> matrix_units(const MMAlgebra& a, const Mat& z, int m, const Tolerance& tol) {
  int d = a.ambient_dim();
  if (m == 1) return {z};
  std::vector<Mat> corner_raw;
  for (const Mat& b : a.basis()) corner_raw.push_back(z * b * z);
  Mat cf = orth(stack_vecs(corner_raw, d), tol.rank);
  std::vector<Mat> corner;
  for (Eigen::Index k = 0; k < cf.cols(); ++k) corner.push_back(unvec(cf.col(k), d));

  Eigen::SelfAdjointEigenSolver<Mat> zs(hermitian_part(z));
  std::vector<int> range_idx;
  for (int i = 0; i < d; ++i)
    if (zs.eigenvalues()(i) > 0.5) range_idx.push_back(i);
  Mat vz(d, static_cast<Eigen::Index>(range_idx.size()));
  for (size_t i = 0; i < range_idx.size(); ++i) vz.col(i) = zs.eigenvectors().col(range_idx[i]);

  for (int attempt = 0; attempt < 6; ++attempt) {
    std::vector<double> w = generic_weights(2 * static_cast<int>(corner.size()), 991 + 13 * attempt);
    Mat h = Mat::Zero(d, d);
    for (size_t k = 0; k < corner.size(); ++k)
      h += w[2 * k] * hermitian_part(corner[k]) + w[2 * k + 1] * hermitian_part(cplx(0, -1) * corner[k]);
    Mat hr = vz.adjoint() * h * vz;
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(hr));
    const Eigen::VectorXd& ev = es.eigenvalues();
    int r = static_cast<int>(ev.size());
    double gap = 1e-6 * std::max(1.0, ev(r - 1) - ev(0));
    std::vector<std::vector<int>> clusters{{0}};
    for (int i = 1; i < r; ++i) {
      if (ev(i) - ev(i - 1) > gap) clusters.emplace_back();
      clusters.back().push_back(i);
    }
    if (static_cast<int>(clusters.size()) != m) continue;
    std::vector<Mat> p;
    for (const auto& cl : clusters) {
      Mat v(r, static_cast<Eigen::Index>(cl.size()));
      for (size_t i = 0; i < cl.size(); ++i) v.col(i) = es.eigenvectors().col(cl[i]);
      Mat pv = vz * v;
      p.push_back(pv * pv.adjoint());
    }
    double tr1 = p[0].trace().real();
    std::vector<Mat> col(m);
    col[0] = p[0];
    for (int i = 1; i < m; ++i) {
      Mat best;
      double best_norm = -1;
      for (const Mat& b : corner) {
        Mat v = p[i] * b * p[0];
        double nv = v.norm();
        if (nv > best_norm + 1e-12) {
          best_norm = nv;
          best = v;
        }
      }
      double c = (best.adjoint() * best).trace().real() / tr1;
      col[i] = best / std::sqrt(c);
    }
    std::vector<Mat> units(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) units[i * m + j] = col[i] * col[j].adjoint();
    return units;
  }
  throw InconsistencyError("matrix_units: corner spectrum is degenerate");
}

StateData make_state(const MMAlgebra& a, const Mat& density, const Tolerance& tol) {
  int d = a.ambient_dim();
  if (density.rows() != d || density.cols() != d) throw DimensionError("density: shape");
  StateData s;
  s.density = hermitian_part(a.project(hermitian_part(density)));
  cplx tr = s.density.trace();
  if (std::abs(tr) < 1e-300) throw NonFaithfulError("density pairs to zero with the unit");
  s.density /= tr.real();
  s.faithful = min_eigenvalue(s.density) > tol.tau;
  return s;
}

StateData trace_state(const MMAlgebra& a) {
  int d = a.ambient_dim();
  StateData s;
  s.density = Mat::Identity(d, d) / static_cast<double>(d);
  s.faithful = true;
  return s;
}

Mat GnsData::represent(const Mat& x) const {
  Mat cols(frame.rows(), space_dim);
  for (int l = 0; l < space_dim; ++l) cols.col(l) = vec(x * unvec(frame.col(l), ambient_dim));
  return frame.adjoint() * cols;
}

Vec GnsData::lambda(const Mat& x) const { return frame.adjoint() * vec(x * rho_half); }

Mat GnsData::element(const Vec& xi) const {
  return unvec(frame * xi, ambient_dim) * rho_half_inv;
}

Vec GnsData::apply_j(const Vec& v) const { return j_linear * v.conjugate(); }

Mat GnsData::conjugate_by_j(const Mat& y) const {
  return j_linear * y.conjugate() * j_linear.conjugate();
}

GnsData gns(const MMAlgebra& a, const StateData& phi, const Tolerance& tol) {
  int d = a.ambient_dim();
  GnsData g;
  g.space_dim = a.dim();
  g.ambient_dim = d;
  g.frame = a.frame();
  g.rho = hermitian_part(a.project(phi.density));
  if (min_eigenvalue(g.rho) <= tol.tau)
    throw NonFaithfulError("gns: state is not faithful on the algebra");
  g.rho_half = hermitian_power(g.rho, 0.5);
  g.rho_half_inv = hermitian_power(g.rho, -0.5);
  Mat rho_inv = hermitian_power(g.rho, -1.0);
  g.omega = g.lambda(Mat::Identity(d, d));
  int n = g.space_dim;
  Mat adj(d * d, n), mod(d * d, n);
  for (int l = 0; l < n; ++l) {
    Mat f = unvec(g.frame.col(l), d);
    adj.col(l) = vec(f.adjoint());
    mod.col(l) = vec(g.rho * f * rho_inv);
  }
  g.j_linear = g.frame.adjoint() * adj;
  g.modular = g.frame.adjoint() * mod;
  return g;
}

double GnsResiduals::max() const {
  return std::max({homomorphism, j_omega, delta_omega, j_delta_j, polar});
}

GnsResiduals gns_residuals(const MMAlgebra& a, const GnsData& g) {
  GnsResiduals r;
  int d = a.ambient_dim();
  int k = std::min(a.dim(), 16);
  std::vector<Mat> reps;
  for (int i = 0; i < k; ++i) reps.push_back(g.represent(a.basis()[i]));
  r.homomorphism = rel(g.represent(Mat::Identity(d, d)) - Mat::Identity(g.space_dim, g.space_dim),
                       Mat::Identity(1, 1));
  for (int i = 0; i < k; ++i) {
    r.homomorphism = std::max(r.homomorphism,
                              rel(g.represent(a.basis()[i].adjoint()) - reps[i].adjoint(), reps[i]));
    for (int j = 0; j < k; ++j)
      r.homomorphism = std::max(
          r.homomorphism, rel(g.represent(a.basis()[i] * a.basis()[j]) - reps[i] * reps[j], reps[i]));
  }
  r.j_omega = (g.apply_j(g.omega) - g.omega).norm();
  r.delta_omega = (g.modular * g.omega - g.omega).norm();
  Mat dinv = g.modular.inverse();
  r.j_delta_j = rel(g.conjugate_by_j(g.modular) - dinv, dinv);
  Mat dhalf = hermitian_power(g.modular, 0.5);
  for (const Mat& x : a.basis()) {
    Vec lhs = g.apply_j(dhalf * g.lambda(x));
    Vec rhs = g.lambda(x.adjoint());
    r.polar = std::max(r.polar, (lhs - rhs).norm() / std::max(1.0, rhs.norm()));
  }
  return r;
}

InnerAutomorphism modular_flow(const StateData& phi, const MMAlgebra& a, double t) {
  Mat rho = hermitian_part(a.project(phi.density));
  return {hermitian_unitary_power(rho, t)};
}

double modular_invariance_residual(const MMAlgebra& n, const Mat& rho) {
  Mat rho_inv = hermitian_power(rho, -1.0);
  double worst = 0;
  for (const Mat& b : n.basis()) worst = std::max(worst, n.residual(rho * b * rho_inv));
  return worst;
}

Mat projector_map(const MMAlgebra& a) { return a.frame() * a.frame().adjoint(); }

CondExpectation conditional_expectation(const MMAlgebra& m, const MMAlgebra& n,
                                        const StateData& phi, const Tolerance& tol) {
  int d = m.ambient_dim();
  if (n.ambient_dim() != d) throw DimensionError("conditional_expectation: ambient mismatch");
  if (n.excess_over(m) > tol.tau) throw DimensionError("conditional_expectation: N is not inside M");
  Mat rho = hermitian_part(m.project(phi.density));
  if (min_eigenvalue(rho) <= tol.tau)
    throw NonFaithfulError("conditional_expectation: state is not faithful on M");
  double inv = modular_invariance_residual(n, rho);
  if (inv > tol.tau)
    throw NoExpectationError("no state-preserving expectation: N is not invariant under the modular flow",
                             inv);
  Mat rh = hermitian_power(rho, 0.5);
  Mat rhi = hermitian_power(rho, -0.5);
  std::vector<Mat> s;
  for (const Mat& b : n.basis()) s.push_back(b * rh);
  Mat qs = orth(stack_vecs(s, d), tol.rank);
  Mat pm = projector_map(m);
  Mat pn = projector_map(n);
  CondExpectation e;
  e.d = d;
  e.map = Mat::Zero(d * d, d * d);
  for (int c = 0; c < d * d; ++c) {
    Mat x = unvec(pm.col(c), d);
    Vec y = qs * (qs.adjoint() * vec(x * rh));
    e.map.col(c) = pn * vec(unvec(y, d) * rhi);
  }
  StateData p;
  p.density = rho;
  p.faithful = true;
  e.preserving = p;
  return e;
}

double ExpectationResiduals::max() const {
  return std::max({range, idempotent, unital, bimodule, positivity, preserving});
}

ExpectationResiduals expectation_residuals(const MMAlgebra& m, const MMAlgebra& n,
                                           const CondExpectation& e) {
  ExpectationResiduals r;
  int d = m.ambient_dim();
  Mat id = Mat::Identity(d, d);
  r.unital = (e(id) - id).norm();
  for (const Mat& b : m.basis()) {
    Mat eb = e(b);
    r.range = std::max(r.range, n.residual(eb));
    r.idempotent = std::max(r.idempotent, rel(e(eb) - eb, eb));
    if (e.preserving)
      r.preserving = std::max(r.preserving, std::abs((*e.preserving)(eb) - (*e.preserving)(b)));
  }
  int kn = std::min(n.dim(), 6), km = std::min(m.dim(), 12);
  for (int i = 0; i < kn; ++i)
    for (int j = 0; j < km; ++j)
      for (int l = 0; l < kn; ++l) {
        const Mat& a = n.basis()[i];
        const Mat& x = m.basis()[j];
        const Mat& c = n.basis()[l];
        Mat lhs = e(a * x * c);
        r.bimodule = std::max(r.bimodule, rel(lhs - a * e(x) * c, lhs));
      }
  Mat pm = projector_map(m);
  Mat choi = Mat::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Mat unit = Mat::Zero(d, d);
      unit(a, b) = 1.0;
      Mat img = unvec(e.map * (pm * vec(unit)), d);
      choi.block(a * d, b * d, d, d) = img;
    }
  r.positivity = std::max(0.0, -min_eigenvalue(choi));
  return r;
}

}  // namespace kacgalois
