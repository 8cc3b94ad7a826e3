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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kacgalois {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Rng = std::mt19937_64;

struct Tolerance {
  double tau = 1e-9;
  // singular values below rank * max(1, s_max) are treated as zero
  double rank = 1e-8;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NonFaithfulError : public Error {
 public:
  using Error::Error;
};

class NoExpectationError : public Error {
 public:
  NoExpectationError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// vec(x)[a * d + b] = x(a, b)
Vec vec(const Mat& x);
Mat unvec(const Vec& v, int d);
// kron(a, b)[(i * rb + p), (j * cb + q)] = a(i, j) * b(p, q)
Mat kron(const Mat& a, const Mat& b);
Mat stack_columns(const std::vector<Vec>& cols, int rows);
Mat stack_vecs(const std::vector<Mat>& mats, int d);

// Orthonormal basis of the column span.
Mat orth(const Mat& a, double rank_tol = 1e-8);
// Orthonormal basis of the kernel.
Mat null_space(const Mat& a, double rank_tol = 1e-8);
Mat pinv(const Mat& a, double rank_tol = 1e-8);
int numerical_rank(const Mat& a, double rank_tol = 1e-8);

// Both inputs have orthonormal columns.
Mat intersect_spans(const Mat& q1, const Mat& q2);
double span_distance(const Mat& q1, const Mat& q2);
// ||(1 - q q*) q2|| : zero iff span(q2) is inside span(q)
double span_excess(const Mat& q, const Mat& q2);
double span_residual(const Mat& q, const Vec& v);

Mat hermitian_part(const Mat& x);
Mat hermitian_power(const Mat& h, double p);
Mat hermitian_unitary_power(const Mat& h, double t);  // h^{it}
double min_eigenvalue(const Mat& h);
Eigen::VectorXd eigenvalues_sorted(const Mat& h);

Mat random_matrix(int rows, int cols, Rng& rng);
Mat random_unitary(int d, Rng& rng);
Mat random_positive(int d, Rng& rng);

// Deterministic coefficients used to form generic elements.
std::vector<double> generic_weights(int count, std::uint64_t salt);

double op_norm(const Mat& x);
std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

}  // namespace kacgalois
