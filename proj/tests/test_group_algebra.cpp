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

#include <gtest/gtest.h>

#include <random>

#include "coact/coaction.hpp"
#include "coact/errors.hpp"
#include "coact/group_algebra.hpp"
#include "support.hpp"

namespace coact {
namespace {

GroupAlgebraElement random_element(const GroupPtr& g, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  std::vector<Complex> c(g->order());
  for (auto& v : c) v = {d(rng), d(rng)};
  return GroupAlgebraElement(g, c);
}

// Phase times a group element, followed by 1 - p + a p for each
// p = (1 + z) / 2 with z an involution.
GroupAlgebraElement random_unitary_element(const GroupPtr& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g->order() - 1));
  std::uniform_real_distribution<double> phase(0, 6.28);
  auto u = GroupAlgebraElement::basis(g, pick(rng)).scaled(std::polar(1.0, phase(rng)));
  for (Element z = 1; z < g->order(); ++z) {
    if (g->mul(z, z) != kIdentity) continue;
    const auto one = GroupAlgebraElement::identity(g);
    const auto zz = GroupAlgebraElement::basis(g, z);
    const Complex a = std::polar(1.0, phase(rng));
    const auto p = (one + zz).scaled(0.5);
    u = u * (one - p + p.scaled(a));
  }
  return u;
}

TEST(GroupAlgebra, ConvolutionAndAdjoint) {
  auto s3 = symmetric_group(3);
  std::mt19937_64 rng(1);
  auto a = random_element(s3, rng), b = random_element(s3, rng);
  auto ab = a * b;
  for (Element z = 0; z < 6; ++z) {
    Complex acc = 0;
    for (Element x = 0; x < 6; ++x) acc += a.coeff(x) * b.coeff(s3->mul(s3->inv(x), z));
    EXPECT_LT(std::abs(ab.coeff(z) - acc), 1e-12);
  }
  EXPECT_LT((a * b).adjoint().distance(b.adjoint() * a.adjoint()), 1e-12);
  EXPECT_TRUE(GroupAlgebraElement::basis(s3, 3).is_unitary(1e-12));
  EXPECT_FALSE(a.is_unitary(1e-6));
}

TEST(GroupAlgebra, RandomUnitaryElementsAreUnitary) {
  std::mt19937_64 rng(2);
  for (auto g : {build_cyclic(4), symmetric_group(3), dihedral_group(4)}) {
    auto u = random_unitary_element(g, rng);
    EXPECT_TRUE(u.is_unitary(1e-12));
  }
}

TEST(GroupAlgebra, CoproductAndTensor) {
  auto z3 = build_cyclic(3);
  auto sq = direct_product(*z3, *z3);
  auto x = GroupAlgebraElement::basis(z3, 2);
  auto c = coproduct(x, sq);
  EXPECT_EQ(c.coeff(2 * 3 + 2), Complex(1));
  EXPECT_LT(c.distance(tensor(x, x, sq)), 1e-15);
}

TEST(GroupAlgebra, Pushforward) {
  auto z2 = build_cyclic(2), z4 = build_cyclic(4);
  auto x = GroupAlgebraElement::basis(z2, 1);
  EXPECT_EQ(x.pushforward(z4, {0, 2}).coeff(2), Complex(1));
}

TEST(GroupLike, Examples) {
  auto s3 = symmetric_group(3);
  for (Element x = 0; x < 6; ++x) EXPECT_EQ(is_group_like(GroupAlgebraElement::basis(s3, x)), x);
  auto mix = (GroupAlgebraElement::basis(s3, 1) + GroupAlgebraElement::basis(s3, 3))
                 .scaled(1.0 / std::sqrt(2.0));
  EXPECT_FALSE(is_group_like(mix).has_value());
  EXPECT_FALSE(is_group_like(GroupAlgebraElement::zero(s3)).has_value());
  EXPECT_FALSE(is_group_like(GroupAlgebraElement::basis(s3, 1).scaled(2.0)).has_value());
}

TEST(GroupLike, RandomElementsAreNot) {
  std::mt19937_64 rng(3);
  auto d4 = dihedral_group(4);
  for (int t = 0; t < 20; ++t) EXPECT_FALSE(is_group_like(random_element(d4, rng)).has_value());
}

TEST(GroupMatrix, ProductAndAdjoint) {
  auto z3 = build_cyclic(3);
  std::mt19937_64 rng(4);
  std::vector<CMatrix> a, b;
  for (int i = 0; i < 3; ++i) {
    a.push_back(testing::random_matrix(2, rng));
    b.push_back(testing::random_matrix(2, rng));
  }
  GroupMatrix ua(z3, a), ub(z3, b);
  auto p = ua * ub;
  for (Element z = 0; z < 3; ++z) {
    CMatrix acc = CMatrix::Zero(2, 2);
    for (Element x = 0; x < 3; ++x) acc += a[x] * b[z3->mul(z3->inv(x), z)];
    EXPECT_LT((p.component(z) - acc).norm(), 1e-12);
  }
  EXPECT_LT((ua * ub).adjoint().distance(ub.adjoint() * ua.adjoint()), 1e-12);
}

TEST(GroupMatrix, ScalarPart) {
  auto s3 = symmetric_group(3);
  std::mt19937_64 rng(5);
  auto u = random_unitary_element(s3, rng);
  auto m = GroupMatrix::scalar(u, 3);
  EXPECT_TRUE(m.is_unitary(1e-12));
  auto back = m.scalar_part(1e-10);
  ASSERT_TRUE(back.has_value());
  EXPECT_LT(back->distance(u), 1e-12);
  std::vector<CMatrix> comps(6, CMatrix::Zero(3, 3));
  comps[0] = CMatrix::Identity(3, 3);
  comps[0](0, 0) = 2.0;
  EXPECT_FALSE(GroupMatrix(s3, comps).scalar_part(1e-10).has_value());
}

TEST(GroupFourier, BlockDimensions) {
  GroupFourier f(symmetric_group(3));
  std::vector<std::size_t> dims;
  std::size_t sum_sq = 0;
  for (std::size_t i = 0; i < f.block_count(); ++i) {
    dims.push_back(f.block_dim(i));
    sum_sq += f.block_dim(i) * f.block_dim(i);
  }
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(sum_sq, 6u);
}

TEST(GroupFourier, IrrepsAreUnitaryHomomorphisms) {
  auto g = presented_group_16(2);
  GroupFourier f(g);
  std::size_t sum_sq = 0;
  for (std::size_t i = 0; i < f.block_count(); ++i) {
    sum_sq += f.block_dim(i) * f.block_dim(i);
    for (Element x = 0; x < 16; ++x) {
      EXPECT_TRUE(is_unitary(f.irrep(i, x), 1e-10));
      for (Element y = 0; y < 16; ++y)
        EXPECT_LT((f.irrep(i, x) * f.irrep(i, y) - f.irrep(i, g->mul(x, y))).norm(), 1e-10);
    }
  }
  EXPECT_EQ(sum_sq, 16u);
}

TEST(GroupFourier, RoundTripAndMultiplicative) {
  auto d4 = dihedral_group(4);
  GroupFourier f(d4);
  std::mt19937_64 rng(6);
  std::vector<CMatrix> a, b;
  for (int i = 0; i < 8; ++i) {
    a.push_back(testing::random_matrix(2, rng));
    b.push_back(testing::random_matrix(2, rng));
  }
  GroupMatrix ua(d4, a), ub(d4, b);
  EXPECT_LT(f.inverse(f.forward(ua), 2).distance(ua), 1e-12);
  auto fa = f.forward(ua), fb = f.forward(ub), fab = f.forward(ua * ub);
  for (std::size_t i = 0; i < fa.size(); ++i) EXPECT_LT((fa[i] * fb[i] - fab[i]).norm(), 1e-10);
}

TEST(GroupMatrixCtor, ShapeChecks) {
  auto z2 = build_cyclic(2);
  EXPECT_THROW(GroupMatrix(z2, {CMatrix::Identity(2, 2)}), InvalidInput);
  EXPECT_THROW(GroupMatrix(z2, {CMatrix::Identity(2, 2), CMatrix::Zero(3, 3)}), InvalidInput);
}

}  // namespace
}  // namespace coact
