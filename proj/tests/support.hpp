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

#include <vector>

#include "kacgalois/algebra.hpp"
#include "kacgalois/group.hpp"

namespace testsupport {

using kacgalois::cplx;
using kacgalois::Mat;
using kacgalois::Vec;

inline Mat unit(int d, int a, int b) {
  Mat m = Mat::Zero(d, d);
  m(a, b) = 1.0;
  return m;
}

inline Mat diag(std::vector<double> v) {
  Mat m = Mat::Zero(static_cast<int>(v.size()), static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) m(i, i) = v[i];
  return m;
}

// Block-diagonal multimatrix algebra: one full block of each size, placed
// consecutively, then conjugated by `u`.
inline kacgalois::MMAlgebra block_algebra(const std::vector<int>& sizes, const Mat& u) {
  int d = 0;
  for (int s : sizes) d += s;
  std::vector<Mat> gens;
  int off = 0;
  for (int s : sizes) {
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b) gens.push_back(u * unit(d, off + a, off + b) * u.adjoint());
    off += s;
  }
  return kacgalois::MMAlgebra::from_span(gens, d);
}

// Permutation matrices of the left regular representation of a group given
// by its multiplication table.
inline std::vector<Mat> regular_rep(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  std::vector<Mat> out;
  for (int g = 0; g < n; ++g) {
    Mat p = Mat::Zero(n, n);
    for (int h = 0; h < n; ++h) p(table[g][h], h) = 1.0;
    out.push_back(p);
  }
  return out;
}

// S3 as permutations of {0,1,2}, composed right to left.
inline std::vector<std::vector<int>> s3_table() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                         {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  auto index = [&](const std::vector<int>& p) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = index(c);
    }
  return t;
}

inline std::vector<kacgalois::GroupTable> test_groups() {
  using namespace kacgalois;
  return {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
          direct_product(cyclic_group(2), cyclic_group(2)), symmetric_group3(), quaternion_group()};
}

}  // namespace testsupport
