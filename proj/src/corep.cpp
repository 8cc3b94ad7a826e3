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


#include "kacgalois/corep.hpp"

#include <algorithm>
#include <cmath>

namespace kacgalois {

namespace {

double max_abs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

std::vector<Corepresentation> irreducible_coreps(const KacAlgebra& k, const DualKac& d) {
  int n = k.n();
  const Mat& v = d.v();
  std::vector<Corepresentation> out;
  for (size_t b = 0; b < d.blocks().size(); ++b) {
    const HatBlock& blk = d.blocks()[b];
    Corepresentation c;
    c.d = blk.d;
    c.block = static_cast<int>(b);
    for (int i = 0; i < blk.d; ++i)
      for (int j = 0; j < blk.d; ++j) {
        // the functional Tr(e_ji . ) / Tr(e_jj) picks the coefficient of e_ij
        const Mat& eji = d.hat_basis()[blk.offset + j * blk.d + i];
        cplx norm = d.hat_basis()[blk.offset + j * blk.d + j].trace();
        Mat w = eji / norm;
        Mat u = Mat::Zero(n, n);
        for (int a = 0; a < n; ++a)
          for (int cc = 0; cc < n; ++cc)
            if (std::abs(w(cc, a)) > 0) u += w(cc, a) * v.block(a * n, cc * n, n, n);
        c.u.push_back(k.coords(u));
      }
    out.push_back(std::move(c));
  }
  return out;
}

double CorepResiduals::max() const { return std::max({coproduct, counit, unitary, conjugate_unitary}); }

CorepResiduals corep_residuals(const KacAlgebra& k, const Corepresentation& c) {
  const KacStructure& s = k.structure();
  Vec one = s.unit();
  CorepResiduals r;
  int d = c.d;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Mat expected = Mat::Zero(s.n, s.n);
      for (int m = 0; m < d; ++m) expected += c.at(i, m) * c.at(m, j).transpose();
      r.coproduct = std::max(r.coproduct, max_abs(Mat(s.coproduct(c.at(i, j)) - expected)));
      r.counit = std::max(r.counit, std::abs(s.epsilon(c.at(i, j)) - (i == j ? 1.0 : 0.0)));
      Vec a = Vec::Zero(s.n), b = Vec::Zero(s.n), ca = Vec::Zero(s.n), cb = Vec::Zero(s.n);
      for (int m = 0; m < d; ++m) {
        a += s.product(s.adjoint(c.at(m, i)), c.at(m, j));
        b += s.product(c.at(i, m), s.adjoint(c.at(j, m)));
        ca += s.product(c.at(m, i), s.adjoint(c.at(m, j)));
        cb += s.product(s.adjoint(c.at(i, m)), c.at(j, m));
      }
      Vec delta = (i == j ? 1.0 : 0.0) * one;
      r.unitary = std::max({r.unitary, max_abs(Vec(a - delta)), max_abs(Vec(b - delta))});
      r.conjugate_unitary = std::max({r.conjugate_unitary, max_abs(Vec(ca - delta)), max_abs(Vec(cb - delta))});
    }
  return r;
}

Mat intertwiners(const KacAlgebra& k, const Corepresentation& u, const Corepresentation& v) {
  int n = k.n();
  int du = u.d;
  int dv = v.d;
  Mat system = Mat::Zero(dv * du * n, dv * du);
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < du; ++j) {
      int row = (i * du + j) * n;
      for (int m = 0; m < du; ++m) system.block(row, i * du + m, n, 1) += u.at(m, j);
      for (int m = 0; m < dv; ++m) system.block(row, m * du + j, n, 1) -= v.at(i, m);
    }
  return null_space(system);
}

Mat unpack_intertwiner(const Vec& t, int rows, int cols) {
  Mat tm(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) tm(i, j) = t(i * cols + j);
  return tm;
}

Corepresentation tensor_corep(const KacAlgebra& k, const Corepresentation& u, const Corepresentation& v) {
  const KacStructure& s = k.structure();
  Corepresentation out;
  out.d = u.d * v.d;
  out.block = -1;
  out.u.resize(out.d * out.d);
  for (int i = 0; i < u.d; ++i)
    for (int kk = 0; kk < v.d; ++kk)
      for (int j = 0; j < u.d; ++j)
        for (int l = 0; l < v.d; ++l)
          out.u[(i * v.d + kk) * out.d + (j * v.d + l)] = s.product(u.at(i, j), v.at(kk, l));
  return out;
}

bool equivalent(const KacAlgebra& k, const Corepresentation& u, const Corepresentation& v,
                const Tolerance& tol) {
  if (u.d != v.d) return false;
  Mat ts = intertwiners(k, u, v);
  if (ts.cols() == 0) return false;
  std::vector<double> w = generic_weights(static_cast<int>(ts.cols()), 0x1e7);
  Vec t = Vec::Zero(ts.rows());
  for (int c = 0; c < ts.cols(); ++c) t += w[c] * ts.col(c);
  Mat tm = unpack_intertwiner(t, u.d, u.d);
  Eigen::JacobiSVD<Mat> svd(tm);
  const Eigen::VectorXd& s = svd.singularValues();
  return s(s.size() - 1) > tol.rank * std::max(1.0, s(0));
}

Corepresentation conjugate(const KacAlgebra& k, const Corepresentation& c) {
  Corepresentation out = c;
  for (Vec& x : out.u) x = k.structure().adjoint(x);
  return out;
}

std::vector<int> conjugation_involution(const KacAlgebra& k, const std::vector<Corepresentation>& xi,
                                        const Tolerance& tol) {
  std::vector<int> out;
  for (const Corepresentation& c : xi) {
    Corepresentation bar = conjugate(k, c);
    int match = -1;
    for (size_t s = 0; s < xi.size() && match < 0; ++s)
      if (equivalent(k, bar, xi[s], tol)) match = static_cast<int>(s);
    if (match < 0) throw InconsistencyError("conjugate corepresentation has no equivalent in the list");
    out.push_back(match);
  }
  for (size_t p = 0; p < out.size(); ++p)
    if (out[out[p]] != static_cast<int>(p)) throw InconsistencyError("conjugation is not an involution");
  return out;
}

double orthogonality_check(const KacAlgebra& k, const std::vector<Corepresentation>& xi) {
  const KacStructure& s = k.structure();
  double r = 0;
  for (size_t p = 0; p < xi.size(); ++p)
    for (size_t q = 0; q < xi.size(); ++q) {
      const Corepresentation& a = xi[p];
      const Corepresentation& b = xi[q];
      for (int i = 0; i < a.d; ++i)
        for (int j = 0; j < a.d; ++j) {
          Vec left = s.adjoint(a.at(i, j));
          for (int kk = 0; kk < b.d; ++kk)
            for (int l = 0; l < b.d; ++l) {
              double expected = (p == q && i == kk && j == l) ? 1.0 / a.d : 0.0;
              r = std::max(r, std::abs(s.h(s.product(left, b.at(kk, l))) - expected));
            }
        }
    }
  return r;
}

int dimension_sum(const std::vector<Corepresentation>& xi) {
  int total = 0;
  for (const Corepresentation& c : xi) total += c.d * c.d;
  return total;
}

FourierCoefficients fourier(const KacAlgebra& k, const std::vector<Corepresentation>& xi, const Vec& x) {
  const KacStructure& s = k.structure();
  FourierCoefficients f;
  for (const Corepresentation& c : xi) {
    Mat block(c.d, c.d);
    for (int i = 0; i < c.d; ++i)
      for (int j = 0; j < c.d; ++j)
        block(i, j) = static_cast<double>(c.d) * s.h(s.product(s.adjoint(c.at(i, j)), x));
    f.blocks.push_back(block);
  }
  return f;
}

Vec reconstruct(const KacAlgebra& k, const std::vector<Corepresentation>& xi, const FourierCoefficients& f) {
  Vec x = Vec::Zero(k.n());
  for (size_t p = 0; p < xi.size(); ++p)
    for (int i = 0; i < xi[p].d; ++i)
      for (int j = 0; j < xi[p].d; ++j) x += f.blocks[p](i, j) * xi[p].at(i, j);
  return x;
}

double peter_weyl_resolution(const KacAlgebra& k, const std::vector<Corepresentation>& xi) {
  int n = k.n();
  Mat e_omega = k.omega() * k.omega().adjoint();
  Mat sum = Mat::Zero(n, n);
  for (const Corepresentation& c : xi)
    for (const Vec& x : c.u) {
      Mat u = k.op(x);
      sum += static_cast<double>(c.d) * u.adjoint() * e_omega * u;
    }
  return max_abs(Mat(sum - Mat::Identity(n, n)));
}

}  // namespace kacgalois
