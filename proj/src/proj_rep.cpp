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

#include "coact/proj_rep.hpp"

#include "coact/errors.hpp"

namespace coact {

ProjRep::ProjRep(GroupPtr group, std::vector<CMatrix> images, double tol)
    : group_(std::move(group)), dim_(0), images_(std::move(images)) {
  if (images_.size() != group_->order()) {
    throw InvalidInput("projrep: need one image per group element");
  }
  dim_ = static_cast<std::size_t>(images_.front().rows());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    const auto& u = images_[x];
    if (static_cast<std::size_t>(u.rows()) != dim_ ||
        static_cast<std::size_t>(u.cols()) != dim_) {
      throw InvalidInput("projrep: image " + std::to_string(x) + " has wrong shape");
    }
    if (!all_finite(u)) throw InvalidInput("projrep: non-finite entry");
    if (!is_unitary(u, tol)) {
      throw InvalidInput("projrep: image of " + group_->label(static_cast<Element>(x)) +
                         " is not unitary");
    }
  }
  if (max_abs(images_[kIdentity] - identity_matrix(dim_)) > tol) {
    throw InvalidInput("projrep: identity must map to the identity matrix");
  }
}

}  // namespace coact
