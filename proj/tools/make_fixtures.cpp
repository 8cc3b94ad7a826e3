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


// Writes the bundled JSON fixtures. Every Kac algebra written here is
// re-validated by load_kac when read back; nothing is trusted at load.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <Eigen/Eigenvalues>

#include "kacgalois/json_io.hpp"

using namespace kacgalois;

namespace {

void write(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  out << doc.dump(1) << "\n";
  std::cout << "wrote " << path.string() << "\n";
}

Mat block_diag(const std::vector<Mat>& blocks) {
  int d = 0;
  for (const Mat& b : blocks) d += static_cast<int>(b.rows());
  Mat out = Mat::Zero(d, d);
  int o = 0;
  for (const Mat& b : blocks) {
    out.block(o, o, b.rows(), b.cols()) = b;
    o += static_cast<int>(b.rows());
  }
  return out;
}

Mat diag(std::initializer_list<cplx> v) {
  Vec d(static_cast<Eigen::Index>(v.size()));
  int i = 0;
  for (cplx c : v) d(i++) = c;
  return d.asDiagonal();
}

Vec solve_in_span(const Mat& stacked, const Mat& x) {
  Vec c = stacked.colPivHouseholderQr().solve(vec(x));
  if ((stacked * c - vec(x)).norm() > 1e-12) throw Error("element outside the span");
  return c;
}

// Kac-Paljutkin algebra on C^4 (+) M_2, basis of words in x, y, z.
KacStructure kac_paljutkin() {
  const cplx i(0, 1);
  Mat x = block_diag({diag({1, 1, -1, -1}), diag({1, -1})});
  Mat y = block_diag({diag({1, 1, -1, -1}), diag({-1, 1})});
  Mat s(2, 2);
  s << 0, 1, 1, 0;
  Mat z = block_diag({diag({1, -1, i, -i}), s});
  Mat one = Mat::Identity(6, 6);
  std::vector<Mat> b = {one, x, y, x * y, z, x * z, y * z, x * y * z};
  std::vector<std::string> labels = {"1", "x", "y", "xy", "z", "xz", "yz", "xyz"};
  const int n = 8;
  Mat st = stack_vecs(b, 6);

  Mat id6 = Mat::Identity(6, 6);
  Mat dx = kron(x, x), dy = kron(y, y);
  Mat dz = 0.5 * (kron(id6, id6) + kron(id6, x) + kron(y, id6) - kron(y, x)) * kron(z, z);
  std::vector<Mat> db = {kron(id6, id6), dx, dy, dx * dy, dz, dx * dz, dy * dz, dx * dy * dz};
  std::vector<Mat> pairs;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) pairs.push_back(kron(b[p], b[q]));
  Mat pst = stack_vecs(pairs, 36);

  KacStructure k;
  k.n = n;
  k.labels = labels;
  for (int a = 0; a < n; ++a) {
    Mat l(n, n);
    for (int c = 0; c < n; ++c) l.col(c) = solve_in_span(st, b[a] * b[c]);
    k.left.push_back(l);
    Vec dc = solve_in_span(pst, db[a]);
    Mat dm(n, n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) dm(p, q) = dc(p * n + q);
    k.delta.push_back(dm);
  }
  // Antipode: antimultiplicative, fixing the generators.
  std::vector<Mat> kb = {one, x, y, y * x, z, z * x, z * y, z * y * x};
  k.counit = Vec(n);
  k.haar = Vec(n);
  k.antipode = Mat(n, n);
  k.star = Mat(n, n);
  for (int a = 0; a < n; ++a) {
    k.counit(a) = b[a](0, 0);
    k.haar(a) = (b[a].block(0, 0, 4, 4).trace()) / 8.0 + b[a].block(4, 4, 2, 2).trace() / 4.0;
    k.antipode.col(a) = solve_in_span(st, kb[a]);
    k.star.col(a) = solve_in_span(st, b[a].adjoint());
  }
  return k;
}

Mat diagonal_basis_unit(int d, int i) {
  Mat m = Mat::Zero(d, d);
  m(i, i) = 1;
  return m;
}

std::vector<Mat> full_matrix_basis(int d, int offset, int size) {
  std::vector<Mat> out;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      Mat m = Mat::Zero(d, d);
      m(offset + i, offset + j) = 1;
      out.push_back(m);
    }
  return out;
}

InclusionDocument inclusion(const std::vector<Mat>& m, const std::vector<Mat>& nb, const Mat& phi_density,
                            const Mat& omega_density) {
  int d = static_cast<int>(m[0].rows());
  MMAlgebra ma = MMAlgebra::from_span(m, d);
  MMAlgebra na = MMAlgebra::from_span(nb, d);
  StateData phi = make_state(ma, phi_density);
  CondExpectation e = conditional_expectation(ma, na, phi);
  InclusionDocument doc;
  doc.ambient_dim = d;
  doc.m_basis = m;
  doc.n_basis = nb;
  doc.e_matrix = e.map;
  doc.omega_density = omega_density;
  return doc;
}

// Markov trace weights for the inclusion matrix lambda (rows: blocks of N).
Eigen::VectorXd markov_weights(const Eigen::MatrixXd& lambda) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lambda.transpose() * lambda);
  Eigen::VectorXd t = es.eigenvectors().col(es.eigenvalues().size() - 1).cwiseAbs();
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);
  for (const std::string name : {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "Q8"}) {
    GroupTable g = group_by_name(name);
    write(dir / ("group_algebra_" + name + ".json"), to_json(group_algebra(g).structure(), GroupOrigin{"group_algebra", g}));
    write(dir / ("function_algebra_" + name + ".json"),
          to_json(function_algebra(g).structure(), GroupOrigin{"function_algebra", g}));
  }
  write(dir / "kac_paljutkin.json", to_json(kac_paljutkin()));

  auto scalars = [](int d) { return std::vector<Mat>{Mat::Identity(d, d)}; };
  auto third = [](int d) { return Mat(Mat::Identity(d, d) / static_cast<double>(d)); };
  write(dir / "inclusion_c_in_m2_trace.json", to_json(inclusion(full_matrix_basis(2, 0, 2), scalars(2), third(2), third(2))));
  {
    Mat rho = Mat::Zero(2, 2);
    rho(0, 0) = 1.0 / 3.0;
    rho(1, 1) = 2.0 / 3.0;
    write(dir / "inclusion_c_in_m2_weighted.json", to_json(inclusion(full_matrix_basis(2, 0, 2), scalars(2), rho, third(2))));
  }
  for (auto [tag, lam] : {std::pair<const char*, double>{"e13", 1.0 / 3.0}, {"e12", 0.5}}) {
    std::vector<Mat> c2 = {diagonal_basis_unit(2, 0), diagonal_basis_unit(2, 1)};
    Mat rho = Mat::Zero(2, 2);
    rho(0, 0) = lam;
    rho(1, 1) = 1 - lam;
    write(dir / (std::string("inclusion_c_in_c2_") + tag + ".json"), to_json(inclusion(c2, scalars(2), rho, third(2))));
  }
  {
    std::vector<Mat> diagonals = {diagonal_basis_unit(2, 0), diagonal_basis_unit(2, 1)};
    write(dir / "inclusion_diag_in_m2_trace.json", to_json(inclusion(full_matrix_basis(2, 0, 2), diagonals, third(2), third(2))));
  }
  {
    std::vector<Mat> nb = full_matrix_basis(3, 1, 2);
    nb.push_back(diagonal_basis_unit(3, 0));
    write(dir / "inclusion_c_plus_m2_in_m3_markov.json", to_json(inclusion(full_matrix_basis(3, 0, 3), nb, third(3), third(3))));
  }
  write(dir / "inclusion_c_in_m3_markov.json", to_json(inclusion(full_matrix_basis(3, 0, 3), scalars(3), third(3), third(3))));
  {
    // C^2 in M_2 (+) C: (a, b) -> diag(a, b) (+) a.
    Eigen::MatrixXd lambda(2, 2);
    lambda << 1, 1, 1, 0;
    Eigen::VectorXd t = markov_weights(lambda);
    Mat rho = Mat::Zero(3, 3);
    rho(0, 0) = rho(1, 1) = t(0);
    rho(2, 2) = t(1);
    rho /= rho.trace();
    std::vector<Mat> m = full_matrix_basis(3, 0, 2);
    m.push_back(diagonal_basis_unit(3, 2));
    Mat a = diagonal_basis_unit(3, 0) + diagonal_basis_unit(3, 2);
    Mat b = diagonal_basis_unit(3, 1);
    Mat omega = Mat::Zero(3, 3);
    omega(0, 0) = 0.25;
    omega(2, 2) = 0.25;
    omega(1, 1) = 0.5;
    write(dir / "inclusion_golden_markov.json", to_json(inclusion(m, {a, b}, rho, omega)));
  }
  return 0;
}
