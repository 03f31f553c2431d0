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

#include "coact/group_algebra.hpp"

#include <cmath>

#include "coact/errors.hpp"
#include "coact/star_algebra.hpp"

namespace coact {

namespace {

void require_same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a != b && !(*a == *b)) throw InvalidInput("group algebra: group mismatch");
}

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(GroupPtr group, std::vector<Complex> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_->order()) {
    throw InvalidInput("group algebra element: need one coefficient per element");
  }
}

GroupAlgebraElement GroupAlgebraElement::zero(GroupPtr group) {
  const std::size_t n = group->order();
  return GroupAlgebraElement(std::move(group), std::vector<Complex>(n));
}

GroupAlgebraElement GroupAlgebraElement::basis(GroupPtr group, Element x) {
  auto out = zero(std::move(group));
  out.coeffs_.at(x) = 1.0;
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& other) const {
  require_same_group(group_, other.group_);
  auto out = zero(group_);
  for (Element x = 0; x < group_->order(); ++x) {
    if (coeffs_[x] == Complex{}) continue;
    for (Element y = 0; y < group_->order(); ++y) {
      out.coeffs_[group_->mul(x, y)] += coeffs_[x] * other.coeffs_[y];
    }
  }
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& other) const {
  require_same_group(group_, other.group_);
  auto out = *this;
  for (std::size_t x = 0; x < coeffs_.size(); ++x) out.coeffs_[x] += other.coeffs_[x];
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& other) const {
  return *this + other.scaled(-1.0);
}

GroupAlgebraElement GroupAlgebraElement::scaled(Complex s) const {
  auto out = *this;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

GroupAlgebraElement GroupAlgebraElement::adjoint() const {
  auto out = zero(group_);
  for (Element x = 0; x < group_->order(); ++x) {
    out.coeffs_[group_->inv(x)] = std::conj(coeffs_[x]);
  }
  return out;
}

double GroupAlgebraElement::distance(const GroupAlgebraElement& other) const {
  require_same_group(group_, other.group_);
  double d = 0.0;
  for (std::size_t x = 0; x < coeffs_.size(); ++x) {
    d = std::max(d, std::abs(coeffs_[x] - other.coeffs_[x]));
  }
  return d;
}

bool GroupAlgebraElement::is_unitary(double tol) const {
  const auto one = identity(group_);
  return ((*this) * adjoint()).distance(one) <= tol && (adjoint() * (*this)).distance(one) <= tol;
}

bool GroupAlgebraElement::is_zero(double tol) const {
  return distance(zero(group_)) <= tol;
}

GroupAlgebraElement GroupAlgebraElement::pushforward(GroupPtr target,
                                                     const std::vector<Element>& map) const {
  if (map.size() != group_->order()) throw InvalidInput("pushforward: map size");
  auto out = zero(std::move(target));
  for (Element x = 0; x < group_->order(); ++x) out.coeffs_.at(map[x]) += coeffs_[x];
  return out;
}

GroupAlgebraElement tensor(const GroupAlgebraElement& c, const GroupAlgebraElement& d,
                           GroupPtr product) {
  const std::size_t nh = d.group()->order();
  if (product->order() != c.group()->order() * nh) {
    throw InvalidInput("tensor: product group has the wrong order");
  }
  auto out = GroupAlgebraElement::zero(product);
  std::vector<Complex> coeffs(product->order());
  for (Element x = 0; x < c.group()->order(); ++x) {
    for (Element y = 0; y < nh; ++y) coeffs[x * nh + y] = c.coeff(x) * d.coeff(y);
  }
  return GroupAlgebraElement(std::move(product), std::move(coeffs));
}

GroupAlgebraElement coproduct(const GroupAlgebraElement& c, GroupPtr square) {
  const std::size_t n = c.group()->order();
  std::vector<Element> diagonal(n);
  for (Element x = 0; x < n; ++x) diagonal[x] = static_cast<Element>(x * n + x);
  return c.pushforward(std::move(square), diagonal);
}

GroupMatrix::GroupMatrix(GroupPtr group, std::vector<CMatrix> components)
    : group_(std::move(group)), n_(0), components_(std::move(components)) {
  if (components_.size() != group_->order()) {
    throw InvalidInput("group matrix: need one component per element");
  }
  n_ = static_cast<std::size_t>(components_.front().rows());
  for (const auto& a : components_) {
    if (static_cast<std::size_t>(a.rows()) != n_ || static_cast<std::size_t>(a.cols()) != n_) {
      throw InvalidInput("group matrix: components must all be n x n");
    }
  }
}

GroupMatrix GroupMatrix::zero(GroupPtr group, std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  const std::size_t order = group->order();
  return GroupMatrix(std::move(group), std::vector<CMatrix>(order, CMatrix::Zero(m, m)));
}

GroupMatrix GroupMatrix::identity(GroupPtr group, std::size_t n) {
  auto out = zero(std::move(group), n);
  out.components_[kIdentity] = identity_matrix(n);
  return out;
}

GroupMatrix GroupMatrix::scalar(const GroupAlgebraElement& u, std::size_t n) {
  auto out = zero(u.group(), n);
  for (Element x = 0; x < u.group()->order(); ++x) {
    out.components_[x] = u.coeff(x) * identity_matrix(n);
  }
  return out;
}

GroupMatrix GroupMatrix::operator*(const GroupMatrix& other) const {
  require_same_group(group_, other.group_);
  auto out = zero(group_, n_);
  for (Element x = 0; x < group_->order(); ++x) {
    if (components_[x].isZero(0.0)) continue;
    for (Element y = 0; y < group_->order(); ++y) {
      if (other.components_[y].isZero(0.0)) continue;
      out.components_[group_->mul(x, y)] += components_[x] * other.components_[y];
    }
  }
  return out;
}

GroupMatrix GroupMatrix::operator+(const GroupMatrix& other) const {
  require_same_group(group_, other.group_);
  auto out = *this;
  for (std::size_t x = 0; x < components_.size(); ++x) out.components_[x] += other.components_[x];
  return out;
}

GroupMatrix GroupMatrix::operator-(const GroupMatrix& other) const {
  require_same_group(group_, other.group_);
  auto out = *this;
  for (std::size_t x = 0; x < components_.size(); ++x) out.components_[x] -= other.components_[x];
  return out;
}

GroupMatrix GroupMatrix::adjoint() const {
  auto out = zero(group_, n_);
  for (Element x = 0; x < group_->order(); ++x) {
    out.components_[group_->inv(x)] = components_[x].adjoint();
  }
  return out;
}

double GroupMatrix::distance(const GroupMatrix& other) const {
  require_same_group(group_, other.group_);
  double d = 0.0;
  for (std::size_t x = 0; x < components_.size(); ++x) {
    d = std::max(d, max_abs(components_[x] - other.components_[x]));
  }
  return d;
}

bool GroupMatrix::is_unitary(double tol) const {
  const auto one = identity(group_, n_);
  return (adjoint() * (*this)).distance(one) <= tol && ((*this) * adjoint()).distance(one) <= tol;
}

std::vector<CMatrix> GroupMatrix::conjugate(const CMatrix& a) const {
  const auto m = static_cast<Eigen::Index>(n_);
  std::vector<CMatrix> out(group_->order(), CMatrix::Zero(m, m));
  for (Element x = 0; x < group_->order(); ++x) {
    if (components_[x].isZero(0.0)) continue;
    const CMatrix left = components_[x] * a;
    for (Element y = 0; y < group_->order(); ++y) {
      if (components_[y].isZero(0.0)) continue;
      out[group_->div(x, y)] += left * components_[y].adjoint();
    }
  }
  return out;
}

GroupMatrix GroupMatrix::pushforward(GroupPtr target, const std::vector<Element>& map) const {
  if (map.size() != group_->order()) throw InvalidInput("pushforward: map size");
  auto out = zero(std::move(target), n_);
  for (Element x = 0; x < group_->order(); ++x) out.components_.at(map[x]) += components_[x];
  return out;
}

std::optional<GroupAlgebraElement> GroupMatrix::scalar_part(double tol) const {
  std::vector<Complex> coeffs(group_->order());
  const CMatrix id = identity_matrix(n_);
  for (Element x = 0; x < group_->order(); ++x) {
    const Complex c = components_[x].trace() / static_cast<double>(n_);
    if (max_abs(components_[x] - c * id) > tol) return std::nullopt;
    coeffs[x] = c;
  }
  return GroupAlgebraElement(group_, std::move(coeffs));
}

GroupFourier::GroupFourier(GroupPtr group, const NumericOptions& options)
    : group_(std::move(group)) {
  const std::size_t order = group_->order();
  const auto m = static_cast<Eigen::Index>(order);
  std::vector<CMatrix> left(order, CMatrix::Zero(m, m));
  std::vector<CMatrix> right(order, CMatrix::Zero(m, m));
  for (Element x = 0; x < order; ++x) {
    for (Element y = 0; y < order; ++y) {
      left[x](group_->mul(x, y), y) = 1.0;
      right[x](group_->div(y, x), y) = 1.0;
    }
  }
  const StarAlgebra alg = saturate_star_algebra(left, order, options);
  std::mt19937_64 rng(options.seed);
  for (const auto& blk : alg.blocks()) {
    if (blk.size != blk.multiplicity) {
      throw NumericalError("GroupFourier: regular representation block is not (d, d)");
    }
    const std::size_t d = blk.size;
    Eigen::SelfAdjointEigenSolver<CMatrix> zeig(blk.central_projection);
    const CMatrix range = zeig.eigenvectors().rightCols(static_cast<Eigen::Index>(d * d));
    std::vector<CMatrix> corner;
    corner.reserve(right.size());
    for (const auto& r : right) corner.push_back(range.adjoint() * r * range);
    // A minimal projection of the commutant corner (a copy of M_d) has rank
    // d; its range carries one copy of the irrep.
    CMatrix v;
    for (int attempt = 0; attempt < 8 && v.size() == 0; ++attempt) {
      try {
        auto clusters = random_spectral_decomposition(corner, d * d, rng, options.tol);
        if (clusters.size() == d && static_cast<std::size_t>(clusters.front().cols()) == d) {
          v = range * clusters.front();
        }
      } catch (const NumericalError&) {
      }
    }
    if (v.size() == 0) throw NumericalError("GroupFourier: degenerate commutant sample");
    std::vector<CMatrix> irrep;
    irrep.reserve(order);
    for (const auto& l : left) irrep.push_back(v.adjoint() * l * v);
    irreps_.push_back(std::move(irrep));
  }
}

std::vector<CMatrix> GroupFourier::forward(const GroupMatrix& u) const {
  std::vector<CMatrix> out;
  for (const auto& irrep : irreps_) {
    const auto d = irrep.front().rows();
    CMatrix blk = CMatrix::Zero(static_cast<Eigen::Index>(u.n()) * d,
                                static_cast<Eigen::Index>(u.n()) * d);
    for (Element x = 0; x < group_->order(); ++x) blk += kron(u.component(x), irrep[x]);
    out.push_back(std::move(blk));
  }
  return out;
}

GroupMatrix GroupFourier::inverse(const std::vector<CMatrix>& blocks, std::size_t n) const {
  if (blocks.size() != irreps_.size()) throw InvalidInput("GroupFourier: block count");
  auto out = GroupMatrix::zero(group_, n);
  std::vector<CMatrix> comps(group_->order());
  const auto nn = static_cast<Eigen::Index>(n);
  const double order = static_cast<double>(group_->order());
  for (Element x = 0; x < group_->order(); ++x) {
    CMatrix a = CMatrix::Zero(nn, nn);
    for (std::size_t i = 0; i < irreps_.size(); ++i) {
      const auto d = irreps_[i][x].rows();
      const CMatrix twisted = kron(identity_matrix(n), irreps_[i][x].adjoint()) * blocks[i];
      for (Eigen::Index r = 0; r < nn; ++r) {
        for (Eigen::Index s = 0; s < nn; ++s) {
          Complex tr = 0.0;
          for (Eigen::Index k = 0; k < d; ++k) tr += twisted(r * d + k, s * d + k);
          a(r, s) += static_cast<double>(d) * tr;
        }
      }
    }
    comps[x] = a / order;
  }
  return GroupMatrix(group_, std::move(comps));
}

}  // namespace coact
