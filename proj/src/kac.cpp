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

#include "kacgalois/kac.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace kacgalois {

namespace {

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

bool nonzero(cplx c) { return std::abs(c) > 1e-300; }

void check_shapes(const KacStructure& s) {
  int n = s.n;
  if (n < 1) throw DimensionError("Kac structure: dimension must be positive");
  if (static_cast<int>(s.left.size()) != n || static_cast<int>(s.delta.size()) != n)
    throw DimensionError("Kac structure: tensor count does not match dimension");
  for (int i = 0; i < n; ++i) {
    if (s.left[i].rows() != n || s.left[i].cols() != n) throw DimensionError("Kac structure: mult shape");
    if (s.delta[i].rows() != n || s.delta[i].cols() != n) throw DimensionError("Kac structure: delta shape");
  }
  if (s.counit.size() != n || s.haar.size() != n) throw DimensionError("Kac structure: vector shape");
  if (s.antipode.rows() != n || s.antipode.cols() != n) throw DimensionError("Kac structure: antipode shape");
  if (s.star.rows() != n || s.star.cols() != n) throw DimensionError("Kac structure: star shape");
}

Mat gram(const KacStructure& s) {
  int n = s.n;
  Mat g(n, n);
  for (int k = 0; k < n; ++k) {
    Vec xk_star = s.adjoint(Vec::Unit(n, k));
    for (int l = 0; l < n; ++l) g(k, l) = s.h(s.product(xk_star, Vec::Unit(n, l)));
  }
  return g;
}

Vec solve_unit(const KacStructure& s, double* residual) {
  int n = s.n;
  Mat a(n * n, n);
  for (int i = 0; i < n; ++i) a.col(i) = vec(s.left[i]);
  Vec target = vec(Mat::Identity(n, n));
  Vec u = a.colPivHouseholderQr().solve(target);
  if (residual) *residual = max_abs(Vec(a * u - target));
  return u;
}

}  // namespace

Vec KacStructure::product(const Vec& a, const Vec& b) const {
  Vec out = Vec::Zero(n);
  for (int i = 0; i < n; ++i)
    if (nonzero(a(i))) out += a(i) * (left[i] * b);
  return out;
}

Mat KacStructure::coproduct(const Vec& a) const {
  Mat out = Mat::Zero(n, n);
  for (int k = 0; k < n; ++k)
    if (nonzero(a(k))) out += a(k) * delta[k];
  return out;
}

Mat KacStructure::tensor_product(const Mat& s, const Mat& t) const {
  Mat out = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!nonzero(s(a, b))) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          cplx w = s(a, b) * t(c, d);
          if (!nonzero(w)) continue;
          out.noalias() += w * left[a].col(c) * left[b].col(d).transpose();
        }
    }
  return out;
}

Vec KacStructure::unit() const { return solve_unit(*this, nullptr); }

bool AxiomReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const AxiomEntry& e) { return e.passed; });
}

double AxiomReport::max_residual() const {
  double m = 0;
  for (const AxiomEntry& e : entries) m = std::max(m, e.residual);
  return m;
}

const AxiomEntry* AxiomReport::find(const std::string& name) const {
  for (const AxiomEntry& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

AxiomReport validate_structure(const KacStructure& s, const Tolerance& tol) {
  check_shapes(s);
  int n = s.n;
  AxiomReport rep;
  rep.tolerance = tol.tau;
  auto add = [&](const std::string& name, double r) {
    rep.entries.push_back({name, r, r < tol.tau});
  };
  auto e = [n](int k) { return Vec::Unit(n, k); };

  double r = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat lhs = s.left[i] * s.left[j];
      Mat rhs = Mat::Zero(n, n);
      for (int m = 0; m < n; ++m)
        if (nonzero(s.mult(i, j, m))) rhs += s.mult(i, j, m) * s.left[m];
      r = std::max(r, max_abs(Mat(lhs - rhs)));
    }
  add("associativity", r);

  double unit_res = 0;
  Vec u = solve_unit(s, &unit_res);
  add("unit", unit_res);

  add("star_involutive", max_abs(Mat(s.star * s.star.conjugate() - Mat::Identity(n, n))));
  r = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec lhs = s.adjoint(s.product(e(i), e(j)));
      Vec rhs = s.product(s.adjoint(e(j)), s.adjoint(e(i)));
      r = std::max(r, max_abs(Vec(lhs - rhs)));
    }
  add("star_antimultiplicative", r);

  r = 0;
  for (int k = 0; k < n; ++k) {
    const Mat& c = s.delta[k];
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int cc = 0; cc < n; ++cc) {
          cplx lhs = 0, rhs = 0;
          for (int i = 0; i < n; ++i) {
            lhs += c(i, cc) * s.delta[i](a, b);
            rhs += c(a, i) * s.delta[i](b, cc);
          }
          r = std::max(r, std::abs(lhs - rhs));
        }
  }
  add("coassociativity", r);

  r = 0;
  for (int k = 0; k < n; ++k) {
    Vec left_law = s.delta[k].transpose() * s.counit;
    Vec right_law = s.delta[k] * s.counit;
    r = std::max({r, max_abs(Vec(left_law - e(k))), max_abs(Vec(right_law - e(k)))});
  }
  add("counit_law", r);

  r = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat lhs = s.coproduct(s.product(e(i), e(j)));
      Mat rhs = s.tensor_product(s.delta[i], s.delta[j]);
      r = std::max(r, max_abs(Mat(lhs - rhs)));
    }
  add("coproduct_multiplicative", r);
  add("coproduct_unital", max_abs(Mat(s.coproduct(u) - u * u.transpose())));

  r = 0;
  for (int k = 0; k < n; ++k) {
    Mat lhs = s.coproduct(s.adjoint(e(k)));
    Mat rhs = s.star * s.delta[k].conjugate() * s.star.transpose();
    r = std::max(r, max_abs(Mat(lhs - rhs)));
  }
  add("coproduct_star", r);

  r = std::abs(s.epsilon(u) - 1.0);
  for (int i = 0; i < n; ++i) {
    r = std::max(r, std::abs(s.epsilon(s.adjoint(e(i))) - std::conj(s.counit(i))));
    for (int j = 0; j < n; ++j)
      r = std::max(r, std::abs(s.epsilon(s.product(e(i), e(j))) - s.counit(i) * s.counit(j)));
  }
  add("counit_character", r);

  r = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec lhs = s.apply_antipode(s.product(e(i), e(j)));
      Vec rhs = s.product(s.apply_antipode(e(j)), s.apply_antipode(e(i)));
      r = std::max(r, max_abs(Vec(lhs - rhs)));
    }
  add("antipode_antimultiplicative", r);

  r = 0;
  for (int k = 0; k < n; ++k) {
    Vec lhs = s.apply_antipode(s.adjoint(e(k)));
    Vec rhs = s.adjoint(s.apply_antipode(e(k)));
    r = std::max(r, max_abs(Vec(lhs - rhs)));
  }
  add("antipode_star", r);
  add("antipode_involutive", max_abs(Mat(s.antipode * s.antipode - Mat::Identity(n, n))));

  r = 0;
  for (int k = 0; k < n; ++k) {
    Mat lhs = s.antipode * s.delta[k].transpose() * s.antipode.transpose();
    Mat rhs = s.coproduct(s.apply_antipode(e(k)));
    r = std::max(r, max_abs(Mat(lhs - rhs)));
  }
  add("antipode_coproduct", r);

  r = 0;
  for (int k = 0; k < n; ++k) {
    Vec left_law = Vec::Zero(n), right_law = Vec::Zero(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        cplx c = s.delta[k](i, j);
        if (!nonzero(c)) continue;
        left_law += c * s.product(s.apply_antipode(e(i)), e(j));
        right_law += c * s.product(e(i), s.apply_antipode(e(j)));
      }
    Vec target = s.counit(k) * u;
    r = std::max({r, max_abs(Vec(left_law - target)), max_abs(Vec(right_law - target))});
  }
  add("antipode_law", r);

  add("haar_normalized", std::abs(s.h(u) - 1.0));
  Mat g = gram(s);
  double herm = max_abs(Mat(g - g.adjoint()));
  double lmin = min_eigenvalue(g);
  add("haar_positive", std::max(herm, std::max(0.0, -lmin)));
  add("haar_faithful", lmin > tol.rank ? 0.0 : 1.0);

  r = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r = std::max(r, std::abs(s.h(s.product(e(i), e(j))) - s.h(s.product(e(j), e(i)))));
  add("haar_trace", r);

  r = 0;
  for (int k = 0; k < n; ++k) {
    Vec left_inv = s.delta[k] * s.haar;
    Vec right_inv = s.delta[k].transpose() * s.haar;
    Vec target = s.haar(k) * u;
    r = std::max({r, max_abs(Vec(left_inv - target)), max_abs(Vec(right_inv - target))});
  }
  add("haar_invariance", r);
  add("haar_antipode", max_abs(Vec(s.antipode.transpose() * s.haar - s.haar)));
  add("counit_antipode", max_abs(Vec(s.antipode.transpose() * s.counit - s.counit)));
  return rep;
}

KacAlgebra KacAlgebra::from_structure(KacStructure s, std::optional<GroupOrigin> origin,
                                      const Tolerance& tol) {
  check_shapes(s);
  int n = s.n;
  if (s.labels.size() != static_cast<size_t>(n)) {
    s.labels.clear();
    for (int k = 0; k < n; ++k) s.labels.push_back("x" + std::to_string(k));
  }
  Mat g = hermitian_part(gram(s));
  if (min_eigenvalue(g) <= tol.rank)
    throw AxiomError("Haar functional is not faithful and positive", validate_structure(s, tol));
  KacAlgebra k;
  k.s_ = std::move(s);
  k.origin_ = std::move(origin);
  k.w_ = hermitian_power(g, -0.5);
  Mat winv = hermitian_power(g, 0.5);
  Vec u = solve_unit(k.s_, nullptr);
  for (int i = 0; i < n; ++i) k.ops_.push_back(winv * k.s_.left[i] * k.w_);
  k.omega_ = winv * u;
  k.algebra_ = MMAlgebra::from_span(k.ops_, n, tol);
  k.lambda_ = winv;
  k.lambda_lu_ = Eigen::PartialPivLU<Mat>(k.lambda_);
  k.j_ = winv * k.s_.star * k.w_.conjugate();
  return k;
}

Mat KacAlgebra::op(const Vec& coords) const {
  Mat out = Mat::Zero(n(), n());
  for (int k = 0; k < n(); ++k)
    if (nonzero(coords(k))) out += coords(k) * ops_[k];
  return out;
}

Vec KacAlgebra::coords_from_vector(const Vec& xi) const { return lambda_lu_.solve(xi); }

Vec KacAlgebra::coords(const Mat& op) const { return coords_from_vector(op * omega_); }

Mat KacAlgebra::tensor_op(const Mat& c) const {
  int nn = n() * n();
  Mat out = Mat::Zero(nn, nn);
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j)
      if (nonzero(c(i, j))) out += c(i, j) * kron(ops_[i], ops_[j]);
  return out;
}

Mat KacAlgebra::delta_op(const Vec& coords) const { return tensor_op(s_.coproduct(coords)); }

AxiomReport validate_kac(const KacAlgebra& k, const Tolerance& tol) {
  AxiomReport rep = validate_structure(k.structure(), tol);
  int n = k.n();
  double rs = 0, rh = 0;
  for (int i = 0; i < n; ++i) {
    Vec ei = Vec::Unit(n, i);
    Mat star_op = k.op(k.structure().adjoint(ei));
    rs = std::max(rs, (star_op - k.ops()[i].adjoint()).cwiseAbs().maxCoeff());
    rh = std::max(rh, std::abs(k.omega().dot(k.ops()[i] * k.omega()) - k.structure().haar(i)));
  }
  rep.entries.push_back({"representation_star", rs, rs < tol.tau});
  rep.entries.push_back({"representation_state", rh, rh < tol.tau});
  return rep;
}

KacAlgebra group_algebra(const GroupTable& g) {
  int n = g.order();
  KacStructure s;
  s.n = n;
  s.left.assign(n, Mat::Zero(n, n));
  s.delta.assign(n, Mat::Zero(n, n));
  s.counit = Vec::Ones(n);
  s.antipode = Mat::Zero(n, n);
  s.star = Mat::Zero(n, n);
  s.haar = Vec::Unit(n, g.identity());
  for (int i = 0; i < n; ++i) {
    s.labels.push_back("lambda_" + std::to_string(i));
    for (int j = 0; j < n; ++j) s.left[i](g.op(i, j), j) = 1.0;
    s.delta[i](i, i) = 1.0;
    s.antipode(g.inverse(i), i) = 1.0;
    s.star(g.inverse(i), i) = 1.0;
  }
  return KacAlgebra::from_structure(std::move(s), GroupOrigin{"group_algebra", g});
}

KacAlgebra function_algebra(const GroupTable& g) {
  int n = g.order();
  KacStructure s;
  s.n = n;
  s.left.assign(n, Mat::Zero(n, n));
  s.delta.assign(n, Mat::Zero(n, n));
  s.counit = Vec::Unit(n, g.identity());
  s.antipode = Mat::Zero(n, n);
  s.star = Mat::Identity(n, n);
  s.haar = Vec::Constant(n, 1.0 / n);
  for (int i = 0; i < n; ++i) {
    s.labels.push_back("delta_" + std::to_string(i));
    s.left[i](i, i) = 1.0;
    s.antipode(g.inverse(i), i) = 1.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (g.op(a, b) == i) s.delta[i](a, b) = 1.0;
  }
  return KacAlgebra::from_structure(std::move(s), GroupOrigin{"function_algebra", g});
}

KacAlgebra tensor_kac(const KacAlgebra& ka, const KacAlgebra& kb) {
  const KacStructure& a = ka.structure();
  const KacStructure& b = kb.structure();
  KacStructure s;
  s.n = a.n * b.n;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < b.n; ++j) {
      s.labels.push_back(a.labels[i] + "|" + b.labels[j]);
      s.left.push_back(kron(a.left[i], b.left[j]));
      s.delta.push_back(kron(a.delta[i], b.delta[j]));
    }
  s.counit = kron(a.counit, b.counit);
  s.haar = kron(a.haar, b.haar);
  s.antipode = kron(a.antipode, b.antipode);
  s.star = kron(a.star, b.star);
  return KacAlgebra::from_structure(std::move(s));
}

double isomorphism_residual(const KacStructure& a, const KacStructure& b, const Mat& t) {
  if (a.n != b.n || t.rows() != a.n || t.cols() != a.n) return 1.0;
  int n = a.n;
  double r = 0;
  for (int i = 0; i < n; ++i) {
    Vec ti = t.col(i);
    for (int j = 0; j < n; ++j) {
      Vec lhs = t * a.product(Vec::Unit(n, i), Vec::Unit(n, j));
      Vec rhs = b.product(ti, t.col(j));
      r = std::max(r, max_abs(Vec(lhs - rhs)));
    }
    r = std::max(r, max_abs(Mat(b.coproduct(ti) - t * a.delta[i] * t.transpose())));
    r = std::max(r, std::abs(b.epsilon(ti) - a.counit(i)));
    r = std::max(r, std::abs(b.h(ti) - a.haar(i)));
    r = std::max(r, max_abs(Vec(b.apply_antipode(ti) - t * a.antipode.col(i))));
    r = std::max(r, max_abs(Vec(b.adjoint(ti) - t * a.star.col(i))));
  }
  return r;
}

bool is_commutative(const KacStructure& s, double tol) {
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j)
      if ((s.left[i].col(j) - s.left[j].col(i)).cwiseAbs().maxCoeff() > tol) return false;
  return true;
}

bool is_cocommutative(const KacStructure& s, double tol) {
  for (int k = 0; k < s.n; ++k)
    if ((s.delta[k] - s.delta[k].transpose()).cwiseAbs().maxCoeff() > tol) return false;
  return true;
}

}  // namespace kacgalois
