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


#include "kacgalois/duality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kacgalois {

namespace {

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

Mat lambda_columns(const KacAlgebra& k) {
  Mat p(k.n(), k.n());
  for (int i = 0; i < k.n(); ++i) p.col(i) = k.ops()[i] * k.omega();
  return p;
}

// F x F without forming F.
Mat flip_conjugate(const Mat& x, int n) {
  Mat out(x.rows(), x.cols());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) out(b * n + a, e * n + c) = x(a * n + b, c * n + e);
  return out;
}

// R[(i n + j), (p n + q)] = T(i n + p, j n + q): turns an operator on H (x) H
// into the matrix whose rank-one pieces are vec(a) vec(b)^T for a (x) b.
Mat realign(const Mat& t, int n) {
  Mat r(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < n; ++p)
      for (int j = 0; j < n; ++j)
        for (int q = 0; q < n; ++q) r(i * n + j, p * n + q) = t(i * n + p, j * n + q);
  return r;
}

Vec apply12(const Mat& v, const Vec& psi, int n) {
  Eigen::Map<const Mat> m(psi.data(), n, n * n);
  Mat out = m * v.transpose();
  return Eigen::Map<const Vec>(out.data(), out.size());
}

Vec apply23(const Mat& v, const Vec& psi, int n) {
  Eigen::Map<const Mat> m(psi.data(), n * n, n);
  Mat out = v * m;
  return Eigen::Map<const Vec>(out.data(), out.size());
}

Vec swap23(const Vec& psi, int n) {
  Vec out(psi.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) out((a * n + c) * n + b) = psi((a * n + b) * n + c);
  return out;
}

Vec apply13(const Mat& v, const Vec& psi, int n) {
  return swap23(apply12(v, swap23(psi, n), n), n);
}

// Null vector of a system expected to have a one-dimensional kernel.
Vec kernel_vector(const Mat& system, const char* what) {
  Mat ns = null_space(system);
  if (ns.cols() != 1)
    throw InconsistencyError(std::string(what) + ": expected a one-dimensional solution space, got " +
                             std::to_string(ns.cols()));
  return ns.col(0);
}

}  // namespace

Mat flip(int n) {
  Mat f = Mat::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) f(b * n + a, a * n + b) = 1.0;
  return f;
}

double unitarity_residual(const Mat& v) {
  Mat id = Mat::Identity(v.rows(), v.cols());
  return std::max(max_abs(Mat(v.adjoint() * v - id)), max_abs(Mat(v * v.adjoint() - id)));
}

double pentagon_residual(const Mat& v, int n, std::uint64_t seed) {
  int n3 = n * n * n;
  std::vector<Vec> probes;
  if (n3 <= 512) {
    for (int i = 0; i < n3; ++i) probes.push_back(Vec::Unit(n3, i));
  } else {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int i = 0; i < 64; ++i) {
      Vec p = random_matrix(n3, 1, rng).col(0);
      probes.push_back(p / p.norm());
    }
  }
  double r = 0;
  for (const Vec& p : probes) {
    Vec lhs = apply12(v, apply13(v, apply23(v, p, n), n), n);
    Vec rhs = apply23(v, apply12(v, p, n), n);
    r = std::max(r, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return r;
}

MultiplicativeUnitary multiplicative_unitary(const KacAlgebra& k) {
  int n = k.n();
  const KacStructure& s = k.structure();
  Mat p = lambda_columns(k);
  Mat q = Mat::Zero(n * n, n * n);
  for (int c = 0; c < n; ++c) {
    Mat block = Mat::Zero(n * n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (std::abs(s.delta[c](i, j)) > 0) block += s.delta[c](i, j) * kron(p.col(i), k.ops()[j]);
    q.middleCols(c * n, n) = block;
  }
  Mat pinv = p.partialPivLu().inverse();
  MultiplicativeUnitary mu;
  mu.n = n;
  mu.v = q * kron(pinv, Mat::Identity(n, n));
  mu.isometry = unitarity_residual(mu.v);
  mu.pentagon = pentagon_residual(mu.v, n);
  mu.action = max_abs(Mat(mu.v * kron(p, Mat::Identity(n, n)) - q));
  return mu;
}

Vec DualKac::coords(const Mat& y) const { return pinv_ * vec(y); }

Mat DualKac::op(const Vec& c) const {
  Mat out = Mat::Zero(n(), n());
  for (int k = 0; k < n(); ++k) out += c(k) * hat_basis_[k];
  return out;
}

Mat DualKac::coproduct_op(const Mat& y) const {
  return v_.adjoint() * kron(Mat::Identity(n(), n()), y) * v_;
}

Mat DualKac::antipode_op(const Mat& y) const { return j_ * y.transpose() * j_.conjugate(); }

cplx DualKac::counit(const Mat& y) const { return omega_h_.dot(y * omega_h_); }

cplx DualKac::haar(const Mat& y) const { return y.trace() / static_cast<double>(n()); }

DualKac dual_kac(const KacAlgebra& k, const Tolerance& tol) {
  int n = k.n();
  DualKac d;
  d.n_ = n;
  d.v_ = multiplicative_unitary(k).v;
  d.j_ = k.j_linear();
  d.omega_h_ = k.omega();

  std::vector<Mat> slices;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      Mat y(n, n);
      for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) y(a, c) = d.v_(a * n + p, c * n + q);
      slices.push_back(y);
    }
  d.hat_algebra_ = MMAlgebra::from_span(slices, n, tol);
  if (d.hat_algebra_.dim() != n)
    throw DimensionError("dual algebra has dimension " + std::to_string(d.hat_algebra_.dim()) +
                         ", expected " + std::to_string(n));
  double closure = d.hat_algebra_.closure_residual();
  if (closure > std::sqrt(tol.tau))
    throw DimensionError("slices of V are not closed under products (residual " +
                         std::to_string(closure) + ")");

  d.e_hat_ = d.omega_h_ * d.omega_h_.adjoint();
  CentralDecomposition cd = central_decomposition(d.hat_algebra_, tol);
  int trivial = -1;
  for (size_t b = 0; b < cd.projections.size(); ++b)
    if (cd.blocks[b].size == 1 && max_abs(Mat(cd.projections[b] - d.e_hat_)) < std::sqrt(tol.tau))
      trivial = static_cast<int>(b);
  if (trivial < 0) throw InconsistencyError("projection onto Omega_h is not a minimal central projection of the dual");
  std::vector<int> order = {trivial};
  for (size_t b = 0; b < cd.projections.size(); ++b)
    if (static_cast<int>(b) != trivial) order.push_back(static_cast<int>(b));

  KacStructure s;
  s.n = n;
  for (size_t bi = 0; bi < order.size(); ++bi) {
    int b = order[bi];
    int m = cd.blocks[b].size;
    std::vector<Mat> units = matrix_units(d.hat_algebra_, cd.projections[b], m, tol);
    d.blocks_.push_back({m, static_cast<int>(d.hat_basis_.size())});
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        d.hat_basis_.push_back(units[i * m + j]);
        s.labels.push_back("e" + std::to_string(bi) + "_" + std::to_string(i) + std::to_string(j));
      }
  }
  if (static_cast<int>(d.hat_basis_.size()) != n)
    throw DimensionError("matrix units of the dual do not form a basis");
  d.stacked_ = stack_vecs(d.hat_basis_, n);
  d.pinv_ = (d.stacked_.adjoint() * d.stacked_).inverse() * d.stacked_.adjoint();

  s.left.assign(n, Mat::Zero(n, n));
  s.delta.assign(n, Mat::Zero(n, n));
  s.counit = Vec(n);
  s.antipode = Mat(n, n);
  s.haar = Vec(n);
  s.star = Mat(n, n);
  for (int i = 0; i < n; ++i) {
    const Mat& yi = d.hat_basis_[i];
    for (int j = 0; j < n; ++j) s.left[i].col(j) = d.coords(yi * d.hat_basis_[j]);
    Mat r = realign(d.coproduct_op(yi), n);
    s.delta[i] = d.pinv_ * r * d.pinv_.transpose();
    s.counit(i) = d.counit(yi);
    s.antipode.col(i) = d.coords(d.antipode_op(yi));
    s.haar(i) = d.haar(yi);
    s.star.col(i) = d.coords(yi.adjoint());
  }
  d.hat_ = KacAlgebra::from_structure(std::move(s), std::nullopt, tol);

  const KacStructure& a = k.structure();
  Mat system(n * n, n);
  for (int i = 0; i < n; ++i)
    system.middleRows(i * n, n) = a.left[i] - a.counit(i) * Mat::Identity(n, n);
  Vec c = kernel_vector(system, "integral of A");
  cplx eps = a.epsilon(c);
  if (std::abs(eps) < tol.rank) throw InconsistencyError("integral of A has vanishing counit");
  d.e_coords_ = c / eps;
  d.e_ = k.op(d.e_coords_);
  d.omega_hhat_ = std::sqrt(static_cast<double>(n)) * d.e_ * d.omega_h_;
  return d;
}

double IntegralReport::max() const {
  return std::max({counit_a, counit_hat, projections, omega_hhat, omega_h, haar_e, hhat_state});
}

IntegralReport integral_report(const KacAlgebra& k, const DualKac& d) {
  int n = k.n();
  double sn = std::sqrt(static_cast<double>(n));
  IntegralReport r;
  const Mat& e = d.e();
  const Mat& eh = d.e_hat();
  for (int i = 0; i < n; ++i) {
    const Mat& x = k.ops()[i];
    r.counit_a = std::max(r.counit_a, max_abs(Mat(x * e - k.structure().counit(i) * e)));
    const Mat& y = d.hat_basis()[i];
    r.counit_hat = std::max(r.counit_hat, max_abs(Mat(eh * y - d.counit(y) * eh)));
    r.projections = std::max({r.projections, max_abs(Mat(x * e - e * x)), max_abs(Mat(y * eh - eh * y))});
    r.hhat_state = std::max(r.hhat_state, std::abs(d.omega_hhat().dot(y * d.omega_hhat()) - d.haar(y)));
  }
  r.projections = std::max({r.projections, max_abs(Mat(e * e - e)), max_abs(Mat(e.adjoint() - e)),
                            max_abs(Mat(eh * eh - eh)), max_abs(Mat(eh.adjoint() - eh))});
  r.omega_hhat = (d.omega_hhat() - sn * e * k.omega()).cwiseAbs().maxCoeff();
  r.omega_h = (sn * eh * d.omega_hhat() - k.omega()).cwiseAbs().maxCoeff();
  r.haar_e = std::abs(k.structure().h(d.e_coords()) - 1.0 / n);
  return r;
}

HatUnitaries hat_unitaries(const KacAlgebra& k, const DualKac& d) {
  int n = k.n();
  Mat p = lambda_columns(k);
  HatUnitaries h;
  h.u = p * k.structure().antipode * p.partialPivLu().inverse();
  Mat id = Mat::Identity(n, n);
  Mat u1 = kron(h.u, id);
  Mat u2 = kron(id, h.u);
  h.v_hat = flip_conjugate(u1 * d.v() * u1, n);
  h.v_tilde = flip_conjugate(u2 * d.v() * u2, n);
  return h;
}

double HatUnitaryReport::max() const {
  return std::max({u_unitary, u_involution, v_hat_unitary, v_tilde_unitary, pentagon_v, pentagon_v_hat,
                   pentagon_v_tilde, v_hat_membership, v_tilde_membership, v_hat_action,
                   v_tilde_coproduct});
}

HatUnitaryReport hat_unitary_report(const KacAlgebra& k, const DualKac& d, std::uint64_t seed) {
  int n = k.n();
  Mat id = Mat::Identity(n, n);
  HatUnitaries h = hat_unitaries(k, d);
  HatUnitaryReport r;
  r.u_unitary = unitarity_residual(h.u);
  r.u_involution = max_abs(Mat(h.u * h.u - id));
  r.v_hat_unitary = unitarity_residual(h.v_hat);
  r.v_tilde_unitary = unitarity_residual(h.v_tilde);
  r.pentagon_v = pentagon_residual(d.v(), n, seed);
  r.pentagon_v_hat = pentagon_residual(h.v_hat, n, seed);
  r.pentagon_v_tilde = pentagon_residual(h.v_tilde, n, seed);

  auto comm = [](const Mat& x, const Mat& y) { return max_abs(Mat(x * y - y * x)); };
  MMAlgebra a_prime = commutant(k.algebra());
  MMAlgebra hat_prime = commutant(d.hat_algebra());
  for (const Mat& b : a_prime.basis()) r.v_hat_membership = std::max(r.v_hat_membership, comm(h.v_hat, kron(b, id)));
  for (const Mat& y : d.hat_basis()) {
    r.v_hat_membership = std::max(r.v_hat_membership, comm(h.v_hat, kron(id, y)));
    Mat lhs = h.v_tilde * kron(y, id) * h.v_tilde.adjoint();
    r.v_tilde_coproduct = std::max(r.v_tilde_coproduct, max_abs(Mat(lhs - d.coproduct_op(y))));
  }
  for (const Mat& x : k.ops()) r.v_tilde_membership = std::max(r.v_tilde_membership, comm(h.v_tilde, kron(x, id)));
  for (const Mat& b : hat_prime.basis())
    r.v_tilde_membership = std::max(r.v_tilde_membership, comm(h.v_tilde, kron(id, b)));

  for (int i = 0; i < n; ++i) {
    Mat lhs = h.v_hat.adjoint() * kron(id, Mat(k.ops()[i] * k.omega()));
    Mat rhs = k.delta_op(Vec::Unit(n, i)) * kron(id, Mat(k.omega()));
    r.v_hat_action = std::max(r.v_hat_action, max_abs(Mat(lhs - rhs)));
  }
  return r;
}

cplx pairing(const KacAlgebra& k, const DualKac& d, const Vec& x, const Mat& y) {
  double sn = std::sqrt(static_cast<double>(k.n()));
  return sn * d.omega_hhat().dot(y * k.op(x) * k.omega());
}

Mat pairing_matrix(const KacAlgebra& k, const DualKac& d) {
  int n = k.n();
  Mat p(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) p(a, b) = pairing(k, d, Vec::Unit(n, a), d.hat_basis()[b]);
  return p;
}

double PairingReport::max() const {
  return std::max({product_law, coproduct_law, unit_counit, counit_unit});
}

PairingReport pairing_report(const KacAlgebra& k, const DualKac& d, int samples, std::uint64_t seed) {
  int n = k.n();
  const KacStructure& a = k.structure();
  const KacStructure& b = d.hat().structure();
  Mat pm = pairing_matrix(k, d);
  PairingReport r;
  r.rank = numerical_rank(pm);
  Rng rng(seed);
  auto rel = [](cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)); };
  for (int t = 0; t < samples; ++t) {
    Vec x = random_matrix(n, 1, rng).col(0);
    Vec y = random_matrix(n, 1, rng).col(0);
    Vec z = random_matrix(n, 1, rng).col(0);
    cplx lhs = (a.product(x, y).transpose() * pm * z).value();
    cplx rhs = (x.transpose() * pm * b.coproduct(z) * pm.transpose() * y).value();
    r.product_law = std::max(r.product_law, rel(lhs, rhs));
    lhs = (x.transpose() * pm * b.product(y, z)).value();
    rhs = (y.transpose() * pm.transpose() * a.coproduct(x) * pm * z).value();
    r.coproduct_law = std::max(r.coproduct_law, rel(lhs, rhs));
  }
  Vec ua = a.unit();
  Vec ub = b.unit();
  for (int i = 0; i < n; ++i) {
    r.unit_counit = std::max(r.unit_counit, std::abs((ua.transpose() * pm.col(i)).value() - b.counit(i)));
    r.counit_unit = std::max(r.counit_unit, std::abs((pm.row(i) * ub).value() - a.counit(i)));
  }
  return r;
}

Mat biduality_map(const KacAlgebra& k, const DualKac& d, const DualKac& dd) {
  Mat p1 = pairing_matrix(k, d);
  Mat p2 = pairing_matrix(d.hat(), dd);
  return p2.partialPivLu().solve(Mat(p1.transpose()));
}

double biduality_residual(const KacAlgebra& k, const Tolerance& tol) {
  DualKac d = dual_kac(k, tol);
  DualKac dd = dual_kac(d.hat(), tol);
  return isomorphism_residual(k.structure(), dd.hat().structure(), biduality_map(k, d, dd));
}

double HatAntipodeReport::max() const {
  return std::max({antimultiplicative, star, involutive, haar_trace});
}

HatAntipodeReport hat_antipode_report(const DualKac& d) {
  int n = d.n();
  HatAntipodeReport r;
  const auto& basis = d.hat_basis();
  for (int i = 0; i < n; ++i) {
    const Mat& y = basis[i];
    Mat ky = d.antipode_op(y);
    r.star = std::max(r.star, max_abs(Mat(d.antipode_op(y.adjoint()) - ky.adjoint())));
    r.involutive = std::max(r.involutive, max_abs(Mat(d.antipode_op(ky) - y)));
    for (int j = 0; j < n; ++j) {
      Mat lhs = d.antipode_op(y * basis[j]);
      r.antimultiplicative = std::max(r.antimultiplicative, max_abs(Mat(lhs - d.antipode_op(basis[j]) * ky)));
    }
  }
  // The invariant state of the dual, solved for from the coproduct alone.
  const KacStructure& s = d.hat().structure();
  Vec u = s.unit();
  Mat system(n * n, n);
  for (int k = 0; k < n; ++k)
    system.middleRows(k * n, n) = s.delta[k] - u * Vec::Unit(n, k).transpose();
  Vec phi = kernel_vector(system, "invariant state of the dual");
  phi /= (phi.transpose() * u).value();
  for (int k = 0; k < n; ++k)
    r.haar_trace = std::max(r.haar_trace, std::abs(phi(k) - basis[k].trace() / static_cast<double>(n)));
  return r;
}

}  // namespace kacgalois
