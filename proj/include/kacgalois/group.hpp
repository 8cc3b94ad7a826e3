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

#include <string>
#include <vector>

namespace kacgalois {

class GroupTable {
 public:
  GroupTable() = default;
  // Validates associativity, identity and inverses; throws ParseError.
  GroupTable(std::vector<std::vector<int>> table, std::string name = "");

  int order() const { return order_; }
  int op(int a, int b) const { return mult_[a * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int identity() const { return identity_; }
  const std::string& name() const { return name_; }
  std::vector<std::vector<int>> table() const;
  bool abelian() const;

 private:
  int order_ = 0;
  std::vector<int> mult_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::string name_;
};

GroupTable cyclic_group(int m);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
GroupTable symmetric_group3();
GroupTable quaternion_group();
GroupTable group_by_name(const std::string& name);

using Subgroup = std::vector<int>;  // sorted element indices

Subgroup generated_subgroup(const GroupTable& g, const std::vector<int>& gens);
// Every subgroup is the join of its cyclic subgroups, so closing the set of
// cyclic subgroups under pairwise joins reaches all of them.
std::vector<Subgroup> enumerate_subgroups(const GroupTable& g);

}  // namespace kacgalois
