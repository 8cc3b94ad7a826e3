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

#include "kacgalois/group.hpp"

#include <algorithm>
#include <set>

#include "kacgalois/linalg.hpp"

namespace kacgalois {

GroupTable::GroupTable(std::vector<std::vector<int>> table, std::string name)
    : order_(static_cast<int>(table.size())), name_(std::move(name)) {
  int n = order_;
  if (n < 1) throw ParseError("group table is empty");
  mult_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) throw ParseError("group table is not square");
    for (int b = 0; b < n; ++b) {
      int c = table[a][b];
      if (c < 0 || c >= n) throw ParseError("group table entry out of range");
      mult_[a * n + b] = c;
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = op(e, a) == a && op(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw ParseError("group table has no identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c))) throw ParseError("group table is not associative");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (op(a, b) == identity_ && op(b, a) == identity_) inverse_[a] = b;
  for (int a = 0; a < n; ++a)
    if (inverse_[a] < 0) throw ParseError("group table element has no inverse");
}

std::vector<std::vector<int>> GroupTable::table() const {
  std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) t[a][b] = op(a, b);
  return t;
}

bool GroupTable::abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

GroupTable cyclic_group(int m) {
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  return GroupTable(t, m == 1 ? "trivial" : "Z" + std::to_string(m));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x)
    for (int y = 0; y < na * nb; ++y)
      t[x][y] = a.op(x / nb, y / nb) * nb + b.op(x % nb, y % nb);
  return GroupTable(t, a.name() + "x" + b.name());
}

GroupTable symmetric_group3() {
  // 0 = id, 1 = (01), 2 = (12), 3 = (02), 4 = (012), 5 = (021)
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                         {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return GroupTable(t, "S3");
}

GroupTable quaternion_group() {
  // elements s * q with s in {+1,-1} and q in {1, i, j, k}; index = 4 * [s<0] + q
  const int unit_mult[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int qa = a % 4, qb = b % 4;
      int sign = (a < 4 ? 1 : -1) * (b < 4 ? 1 : -1) * unit_sign[qa][qb];
      t[a][b] = (sign < 0 ? 4 : 0) + unit_mult[qa][qb];
    }
  return GroupTable(t, "Q8");
}

GroupTable group_by_name(const std::string& name) {
  if (name == "trivial" || name == "Z1") return cyclic_group(1);
  if (name == "S3") return symmetric_group3();
  if (name == "Q8") return quaternion_group();
  if (name == "Z2xZ2") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name.size() > 1 && name[0] == 'Z' && name.find('x') == std::string::npos) {
    int m = std::stoi(name.substr(1));
    if (m >= 1) return cyclic_group(m);
  }
  throw ParseError("unknown group name: " + name);
}

Subgroup generated_subgroup(const GroupTable& g, const std::vector<int>& gens) {
  std::set<int> h{g.identity()};
  std::vector<int> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int s : gens) {
        int y = g.op(x, s);
        if (h.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return Subgroup(h.begin(), h.end());
}

std::vector<Subgroup> enumerate_subgroups(const GroupTable& g) {
  std::set<Subgroup> found;
  for (int a = 0; a < g.order(); ++a) found.insert(generated_subgroup(g, {a}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subgroup> current(found.begin(), found.end());
    for (size_t i = 0; i < current.size(); ++i)
      for (size_t j = i + 1; j < current.size(); ++j) {
        std::vector<int> gens = current[i];
        gens.insert(gens.end(), current[j].begin(), current[j].end());
        if (found.insert(generated_subgroup(g, gens)).second) grew = true;
      }
  }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) {
                     return a.size() != b.size() ? a.size() < b.size() : a < b;
                   });
  return out;
}

}  // namespace kacgalois
