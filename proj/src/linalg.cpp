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

#include "kacgalois/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdio>

namespace kacgalois {

Vec vec(const Mat& x) {
  Vec v(x.rows() * x.cols());
  for (Eigen::Index a = 0; a < x.rows(); ++a)
    for (Eigen::Index b = 0; b < x.cols(); ++b) v(a * x.cols() + b) = x(a, b);
  return v;
}

Mat unvec(const Vec& v, int d) {
  if (v.size() != static_cast<Eigen::Index>(d) * d)
    throw DimensionError("unvec: length is not d*d");
  Mat x(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) x(a, b) = v(a * d + b);
  return x;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat stack_columns(const std::vector<Vec>& cols, int rows) {
  Mat m(rows, static_cast<Eigen::Index>(cols.size()));
  for (size_t k = 0; k < cols.size(); ++k) {
    if (cols[k].size() != rows) throw DimensionError("stack_columns: length");
    m.col(k) = cols[k];
  }
  return m;
}

Mat stack_vecs(const std::vector<Mat>& mats, int d) {
  Mat m(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(mats.size()));
  for (size_t k = 0; k < mats.size(); ++k) {
    if (mats[k].rows() != d || mats[k].cols() != d)
      throw DimensionError("stack_vecs: matrix is not d x d");
    m.col(k) = vec(mats[k]);
  }
  return m;
}

namespace {

double cutoff(double smax, double rank_tol) {
  return rank_tol * std::max(1.0, smax);
}

struct Svd {
  Eigen::VectorXd s;
  Mat u;
  Mat v;
};

// JacobiSVD for moderate sizes. Large inputs use BDCSVD, falling back to
// JacobiSVD when the divide-and-conquer factors are non-finite or not
// orthonormal, which some Eigen releases produce on complex inputs with
// repeated singular values.
Svd svd(const Mat& a, unsigned opts) {
  Svd out;
  if (std::min(a.rows(), a.cols()) > 256) {
    Eigen::BDCSVD<Mat> b(a, opts);
    out.s = b.singularValues();
    if (out.s.allFinite()) {
      if (opts & (Eigen::ComputeThinU | Eigen::ComputeFullU)) out.u = b.matrixU();
      if (opts & (Eigen::ComputeThinV | Eigen::ComputeFullV)) out.v = b.matrixV();
      auto unitary = [](const Mat& q) {
        if (q.size() == 0) return true;
        if (!q.allFinite()) return false;
        Mat g = q.adjoint() * q;
        g.diagonal().array() -= 1.0;
        return g.cwiseAbs().maxCoeff() < 1e-10;
      };
      if (unitary(out.u) && unitary(out.v)) return out;
    }
  }
  Eigen::JacobiSVD<Mat> j(a, opts);
  out.s = j.singularValues();
  out.u = Mat();
  out.v = Mat();
  if (opts & (Eigen::ComputeThinU | Eigen::ComputeFullU)) out.u = j.matrixU();
  if (opts & (Eigen::ComputeThinV | Eigen::ComputeFullV)) out.v = j.matrixV();
  return out;
}

}  // namespace

Mat orth(const Mat& a, double rank_tol) {
  if (a.cols() == 0 || a.rows() == 0) return Mat(a.rows(), 0);
  if (a.cols() > a.rows()) {
    Svd f = svd(a.adjoint(), Eigen::ComputeThinV);
    const Eigen::VectorXd& s = f.s;
    double thr = cutoff(s.size() ? s(0) : 0.0, rank_tol);
    Eigen::Index r = 0;
    while (r < s.size() && s(r) > thr) ++r;
    return f.v.leftCols(r);
  }
  Svd f = svd(a, Eigen::ComputeThinU);
  const Eigen::VectorXd& s = f.s;
  double thr = cutoff(s.size() ? s(0) : 0.0, rank_tol);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > thr) ++r;
  return f.u.leftCols(r);
}

Mat pinv(const Mat& a, double rank_tol) {
  if (a.cols() == 0 || a.rows() == 0) return Mat::Zero(a.cols(), a.rows());
  Svd f = svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  double thr = cutoff(f.s.size() ? f.s(0) : 0.0, rank_tol);
  Mat out = Mat::Zero(a.cols(), a.rows());
  for (Eigen::Index k = 0; k < f.s.size() && f.s(k) > thr; ++k)
    out += f.v.col(k) * (f.u.col(k).adjoint() / f.s(k));
  return out;
}

Mat null_space(const Mat& a, double rank_tol) {
  if (a.cols() == 0) return Mat(0, 0);
  if (a.rows() == 0) return Mat::Identity(a.cols(), a.cols());
  Svd f = svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = f.s;
  double thr = cutoff(s.size() ? s(0) : 0.0, rank_tol);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > thr) ++r;
  return f.v.rightCols(a.cols() - r);
}

int numerical_rank(const Mat& a, double rank_tol) {
  if (a.cols() == 0 || a.rows() == 0) return 0;
  Eigen::VectorXd s = svd(a, 0).s;
  double thr = cutoff(s.size() ? s(0) : 0.0, rank_tol);
  int r = 0;
  while (r < s.size() && s(r) > thr) ++r;
  return r;
}

Mat intersect_spans(const Mat& q1, const Mat& q2) {
  if (q1.cols() == 0 || q2.cols() == 0) return Mat(q1.rows(), 0);
  Mat off = q1 - q2 * (q2.adjoint() * q1);
  Eigen::JacobiSVD<Mat> svd(off, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  Eigen::Index k = q1.cols();
  Eigen::Index r = 0;
  while (r < k && (k - 1 - r >= s.size() || s(k - 1 - r) < 1e-7)) ++r;
  Mat basis = q1 * svd.matrixV().rightCols(r);
  return orth(basis);
}

double span_excess(const Mat& q, const Mat& q2) {
  if (q2.cols() == 0) return 0.0;
  if (q.cols() == 0) return op_norm(q2);
  Mat r = q2 - q * (q.adjoint() * q2);
  return op_norm(r);
}

double span_distance(const Mat& q1, const Mat& q2) {
  if (q1.cols() != q2.cols()) return 1.0;
  if (q1.cols() == 0) return 0.0;
  return std::max(span_excess(q1, q2), span_excess(q2, q1));
}

double span_residual(const Mat& q, const Vec& v) {
  Vec r = q.cols() ? Vec(v - q * (q.adjoint() * v)) : v;
  return r.norm() / std::max(1.0, v.norm());
}

Mat hermitian_part(const Mat& x) { return 0.5 * (x + x.adjoint()); }

Mat hermitian_power(const Mat& h, double p) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(h));
  Eigen::VectorXd ev = es.eigenvalues();
  Vec f(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) <= 0 && p < 0) throw NonFaithfulError("hermitian_power: singular operator");
    f(i) = ev(i) <= 0 ? 0.0 : std::pow(ev(i), p);
  }
  return es.eigenvectors() * f.asDiagonal() * es.eigenvectors().adjoint();
}

Mat hermitian_unitary_power(const Mat& h, double t) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(h));
  Eigen::VectorXd ev = es.eigenvalues();
  Vec f(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) <= 0) throw NonFaithfulError("hermitian_unitary_power: non-positive spectrum");
    f(i) = std::exp(cplx(0.0, t * std::log(ev(i))));
  }
  return es.eigenvectors() * f.asDiagonal() * es.eigenvectors().adjoint();
}

double min_eigenvalue(const Mat& h) {
  if (h.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(h), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

Eigen::VectorXd eigenvalues_sorted(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(h), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Mat random_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      double re = nd(rng);
      double im = nd(rng);
      m(i, j) = cplx(re, im);
    }
  return m;
}

Mat random_unitary(int d, Rng& rng) {
  Mat g = random_matrix(d, d, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(d, d);
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    cplx ph = r(i, i) / std::abs(r(i, i));
    q.col(i) *= ph;
  }
  return q;
}

Mat random_positive(int d, Rng& rng) {
  Mat g = random_matrix(d, d, rng);
  return g * g.adjoint() + 0.5 * Mat::Identity(d, d);
}

std::vector<double> generic_weights(int count, std::uint64_t salt) {
  Rng rng(0x9e3779b97f4a7c15ULL ^ salt);
  std::uniform_real_distribution<double> ud(0.5, 1.5);
  std::vector<double> w(count);
  for (int i = 0; i < count; ++i) w[i] = ud(rng) * (1.0 + 0.37 * i);
  return w;
}

double op_norm(const Mat& x) {
  if (x.size() == 0) return 0.0;
  if (x.rows() == 1 || x.cols() == 1) return x.norm();
  return svd(x, 0).s(0);
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace kacgalois
