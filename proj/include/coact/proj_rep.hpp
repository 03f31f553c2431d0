// Copyright 2026 The coact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "coact/group.hpp"
#include "coact/matrix.hpp"

namespace coact {

/// A map x -> U_x from group elements to d x d unitaries with U_e = 1.
///
/// Construction checks shapes, U_e = 1 and unitarity. Projectivity
/// (U_x U_y in T U_xy) is certified separately by cocycle_of_projrep.
class ProjRep {
 public:
  ProjRep(GroupPtr group, std::vector<CMatrix> images, double tol = 1e-8);

  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const CMatrix& image(Element x) const { return images_[x]; }
  const std::vector<CMatrix>& images() const { return images_; }

 private:
  GroupPtr group_;
  std::size_t dim_;
  std::vector<CMatrix> images_;
};

}  // namespace coact
