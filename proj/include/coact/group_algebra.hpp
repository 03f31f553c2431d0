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

#include <optional>
#include <vector>

#include "coact/group.hpp"
#include "coact/matrix.hpp"

namespace coact {

/// Element sum_x c_x x of the group algebra C[G].
class GroupAlgebraElement {
 public:
  GroupAlgebraElement(GroupPtr group, std::vector<Complex> coeffs);

  static GroupAlgebraElement zero(GroupPtr group);
  static GroupAlgebraElement basis(GroupPtr group, Element x);
  static GroupAlgebraElement identity(GroupPtr group) { return basis(std::move(group), kIdentity); }

  const GroupPtr& group() const { return group_; }
  Complex coeff(Element x) const { return coeffs_[x]; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  GroupAlgebraElement operator*(const GroupAlgebraElement& other) const;
  GroupAlgebraElement operator+(const GroupAlgebraElement& other) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& other) const;
  GroupAlgebraElement scaled(Complex s) const;
  /// sum_x conj(c_x) x^{-1}
  GroupAlgebraElement adjoint() const;

  double distance(const GroupAlgebraElement& other) const;
  bool is_unitary(double tol) const;
  bool is_zero(double tol) const;

  /// The image under x -> map[x] in C[target].
  GroupAlgebraElement pushforward(GroupPtr target, const std::vector<Element>& map) const;

 private:
  GroupPtr group_;
  std::vector<Complex> coeffs_;
};

/// c (x) d in C[G x H], where `product` is direct_product(G, H).
GroupAlgebraElement tensor(const GroupAlgebraElement& c, const GroupAlgebraElement& d,
                           GroupPtr product);

/// delta_G(c) = sum_x c_x x (x) x in C[G x G], `square` = direct_product(G, G).
GroupAlgebraElement coproduct(const GroupAlgebraElement& c, GroupPtr square);

/// Element sum_x a_x (x) x of M_n (x) C[G], multiplied by
/// (sum a_x (x) x)(sum b_y (x) y) = sum_z (sum_{xy=z} a_x b_y) (x) z.
class GroupMatrix {
 public:
  GroupMatrix(GroupPtr group, std::vector<CMatrix> components);

  static GroupMatrix zero(GroupPtr group, std::size_t n);
  static GroupMatrix identity(GroupPtr group, std::size_t n);
  /// 1 (x) u
  static GroupMatrix scalar(const GroupAlgebraElement& u, std::size_t n);

  const GroupPtr& group() const { return group_; }
  std::size_t n() const { return n_; }
  const CMatrix& component(Element x) const { return components_[x]; }
  const std::vector<CMatrix>& components() const { return components_; }

  GroupMatrix operator*(const GroupMatrix& other) const;
  GroupMatrix operator+(const GroupMatrix& other) const;
  GroupMatrix operator-(const GroupMatrix& other) const;
  /// sum_x a_x^* (x) x^{-1}
  GroupMatrix adjoint() const;

  /// Largest entry of any component of the difference.
  double distance(const GroupMatrix& other) const;
  bool is_unitary(double tol) const;

  /// Components of U (a (x) 1) U^*.
  std::vector<CMatrix> conjugate(const CMatrix& a) const;

  GroupMatrix pushforward(GroupPtr target, const std::vector<Element>& map) const;

  /// u with this = 1 (x) u when every component is a scalar matrix.
  std::optional<GroupAlgebraElement> scalar_part(double tol) const;

 private:
  GroupPtr group_;
  std::size_t n_;
  std::vector<CMatrix> components_;
};

/// A complete set of inequivalent unitary irreducible representations of
/// G, read off the Wedderburn decomposition of C[G] in its left regular
/// representation, and the matching Fourier transform on M_n (x) C[G].
class GroupFourier {
 public:
  explicit GroupFourier(GroupPtr group, const NumericOptions& options = {});

  const GroupPtr& group() const { return group_; }
  std::size_t block_count() const { return irreps_.size(); }
  std::size_t block_dim(std::size_t i) const {
    return static_cast<std::size_t>(irreps_[i].front().rows());
  }
  const CMatrix& irrep(std::size_t i, Element x) const { return irreps_[i][x]; }

  /// Block i: sum_x a_x (x) pi_i(x) in M_n (x) M_{d_i} (Kronecker order).
  std::vector<CMatrix> forward(const GroupMatrix& u) const;
  /// Inverse of forward(): a_x = |G|^{-1} sum_i d_i (id (x) tr)((1 (x) pi_i(x)^*) U_i).
  GroupMatrix inverse(const std::vector<CMatrix>& blocks, std::size_t n) const;

 private:
  GroupPtr group_;
  std::vector<std::vector<CMatrix>> irreps_;
};

}  // namespace coact
