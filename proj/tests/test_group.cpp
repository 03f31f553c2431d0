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

#include <set>

#include "coact/errors.hpp"
#include "coact/group.hpp"
#include "support.hpp"

namespace coact {
namespace {

bool associative(const FiniteGroup& g) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      for (Element z = 0; z < g.order(); ++z)
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) return false;
  return true;
}

TEST(Cyclic, TrivialGroup) {
  auto g = build_cyclic(1);
  EXPECT_EQ(g->order(), 1u);
  EXPECT_EQ(g->mul(0, 0), 0u);
  EXPECT_TRUE(is_cyclic(*g));
}

TEST(Cyclic, TableAndInverses) {
  auto z4 = build_cyclic(4);
  for (Element i = 0; i < 4; ++i)
    for (Element j = 0; j < 4; ++j) EXPECT_EQ(z4->mul(i, j), (i + j) % 4);
  EXPECT_EQ(z4->inv(2), 2u);
  EXPECT_EQ(build_cyclic(3)->inv(1), 2u);
  EXPECT_TRUE(is_cyclic(*z4));
  EXPECT_EQ(z4->element_order(1), 4u);
  EXPECT_EQ(z4->pow(1, -1), 3u);
}

TEST(Cyclic, ZeroRejected) { EXPECT_THROW(build_cyclic(0), InvalidInput); }

TEST(DirectProduct, KleinFour) {
  auto z2 = build_cyclic(2);
  auto k = direct_product(*z2, *z2);
  EXPECT_EQ(k->order(), 4u);
  EXPECT_FALSE(is_cyclic(*k));
  EXPECT_TRUE(k->is_abelian());
  for (Element x = 0; x < 4; ++x) EXPECT_EQ(k->mul(x, x), kIdentity);
}

TEST(DirectProduct, TrivialFactorGivesSameTable) {
  auto s3 = symmetric_group(3);
  auto p = direct_product(*build_cyclic(1), *s3);
  EXPECT_EQ(*p, *s3);
}

TEST(DirectProduct, Z3xZ3Exponent) {
  auto g = direct_product(*build_cyclic(3), *build_cyclic(3));
  EXPECT_EQ(g->order(), 9u);
  for (Element x = 1; x < 9; ++x) EXPECT_EQ(g->element_order(x), 3u);
}

TEST(DirectProduct, RowMajorPairs) {
  auto g = build_cyclic(2), h = build_cyclic(3);
  auto p = direct_product(*g, *h);
  for (Element a = 0; a < 2; ++a)
    for (Element b = 0; b < 3; ++b)
      for (Element c = 0; c < 2; ++c)
        for (Element d = 0; d < 3; ++d)
          EXPECT_EQ(p->mul(a * 3 + b, c * 3 + d), g->mul(a, c) * 3 + h->mul(b, d));
}

TEST(Symmetric, S3MatchesPermutations) {
  auto s3 = symmetric_group(3);
  EXPECT_EQ(s3->order(), 6u);
  EXPECT_FALSE(s3->is_abelian());
  testing::PermutationS3 ref;
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) t[a][b] = ref.compose(a, b);
  EXPECT_TRUE(testing::isomorphic(*s3, t));
}

TEST(Symmetric, PresentationRelation) {
  auto s3 = symmetric_group(3);
  const Element a = s3->element("a"), b = s3->element("b");
  EXPECT_EQ(s3->element_order(a), 3u);
  EXPECT_EQ(s3->element_order(b), 2u);
  EXPECT_EQ(s3->mul(a, b), s3->mul(b, s3->mul(a, a)));
  EXPECT_EQ(s3->element("ab"), s3->mul(a, b));
}

TEST(Symmetric, SmallAndLarge) {
  EXPECT_EQ(symmetric_group(1)->order(), 1u);
  EXPECT_EQ(symmetric_group(4)->order(), 24u);
  EXPECT_THROW(symmetric_group(7), InvalidInput);
}

TEST(Presented16, Variant1) {
  auto g = presented_group_16(1);
  EXPECT_EQ(g->order(), 16u);
  EXPECT_FALSE(g->is_abelian());
  const Element a = g->element("a"), c = g->element("c");
  EXPECT_EQ(g->mul(g->mul(c, a), g->inv(c)), g->inv(a));
  EXPECT_GT(center(*g).size(), 1u);
}

TEST(Presented16, Variant2) {
  auto g = presented_group_16(2);
  EXPECT_EQ(g->order(), 16u);
  const Element a = g->element("a"), b = g->element("b"), c = g->element("c");
  EXPECT_EQ(g->mul(g->mul(c, a), g->inv(c)), g->mul(a, b));
  EXPECT_EQ(g->mul(a, b), g->mul(b, a));
  EXPECT_EQ(g->mul(b, c), g->mul(c, b));
  EXPECT_EQ(g->element_order(a), 4u);
  // brute-force centre
  std::size_t z = 0;
  for (Element x = 0; x < 16; ++x) {
    bool central = true;
    for (Element y = 0; y < 16; ++y) central &= g->mul(x, y) == g->mul(y, x);
    z += central;
  }
  EXPECT_GT(z, 1u);
  EXPECT_EQ(z, center(*g).size());
  EXPECT_THROW(presented_group_16(3), InvalidInput);
}

TEST(Centralizer, Examples) {
  auto z4 = build_cyclic(4);
  EXPECT_EQ(centralizer(*z4, 1).size(), 4u);
  auto s3 = symmetric_group(3);
  const Element a = s3->element("a");
  const auto c = centralizer(*s3, a);
  EXPECT_EQ(std::set<Element>(c.begin(), c.end()),
            (std::set<Element>{kIdentity, a, s3->mul(a, a)}));
  EXPECT_EQ(centralizer(*s3, kIdentity).size(), 6u);
}

TEST(IsCyclic, Examples) {
  EXPECT_TRUE(is_cyclic(*build_cyclic(4)));
  EXPECT_FALSE(is_cyclic(*direct_product(*build_cyclic(2), *build_cyclic(2))));
  EXPECT_FALSE(is_cyclic(*symmetric_group(3)));
  EXPECT_TRUE(is_cyclic(*direct_product(*build_cyclic(2), *build_cyclic(3))));
}

TEST(SubgroupGenerated, Examples) {
  auto s3 = symmetric_group(3);
  EXPECT_EQ(subgroup_generated(s3, {}).order(), 1u);
  auto h = subgroup_generated(s3, {s3->element("a")});
  EXPECT_EQ(h.order(), 3u);
  EXPECT_TRUE(h.is_cyclic());
  auto k = direct_product(*build_cyclic(2), *build_cyclic(2));
  EXPECT_EQ(subgroup_generated(k, {1, 2}).order(), 4u);
  EXPECT_FALSE(subgroup_generated(k, {1, 2}).is_cyclic());
}

TEST(Subgroup, RejectsNonSubgroup) {
  auto s3 = symmetric_group(3);
  EXPECT_THROW(Subgroup(s3, {kIdentity, s3->element("a")}), InvalidInput);
}

TEST(Groups, AssociativityAndLagrange) {
  std::vector<GroupPtr> groups = {build_cyclic(5), symmetric_group(3), dihedral_group(4),
                                  presented_group_16(1), presented_group_16(2),
                                  direct_product(*build_cyclic(2), *build_cyclic(4))};
  for (const auto& g : groups) {
    EXPECT_TRUE(associative(*g));
    for (Element x = 0; x < g->order(); ++x) {
      for (Element y = 0; y < g->order(); ++y) {
        EXPECT_EQ(g->order() % subgroup_generated(g, {x, y}).order(), 0u);
      }
    }
  }
}

TEST(Groups, Order16NotAbelian) {
  for (int v : {1, 2}) {
    auto g = presented_group_16(v);
    bool found = false;
    for (Element x = 0; x < 16 && !found; ++x)
      for (Element y = 0; y < 16 && !found; ++y) found = g->mul(x, y) != g->mul(y, x);
    EXPECT_TRUE(found);
  }
}

TEST(Dihedral, OrderEight) {
  auto d4 = dihedral_group(4);
  EXPECT_EQ(d4->order(), 8u);
  EXPECT_FALSE(d4->is_abelian());
  EXPECT_EQ(center(*d4).size(), 2u);
}

TEST(FiniteGroupCtor, Validation) {
  EXPECT_THROW(FiniteGroup({{0, 1}, {1, 1}}), InvalidInput);        // not latin
  EXPECT_THROW(FiniteGroup({{1, 0}, {0, 1}}), InvalidInput);        // identity not at 0
  EXPECT_THROW(FiniteGroup({{0, 1, 2}, {1, 0}, {2, 1, 0}}), InvalidInput);
  EXPECT_THROW(FiniteGroup({}), InvalidInput);
  // latin square with identity 0 but not associative
  EXPECT_THROW(FiniteGroup({{0, 1, 2, 3, 4},
                            {1, 0, 3, 4, 2},
                            {2, 4, 0, 1, 3},
                            {3, 2, 4, 0, 1},
                            {4, 3, 1, 2, 0}}),
               InvalidInput);
}

TEST(FiniteGroupLookup, LabelsAndIndices) {
  auto s3 = symmetric_group(3);
  EXPECT_EQ(s3->find("e"), kIdentity);
  EXPECT_EQ(s3->find("3"), Element{3});
  EXPECT_FALSE(s3->find("zz").has_value());
  EXPECT_THROW(s3->element("zz"), InvalidInput);
}

TEST(Embedding, InjectiveHomomorphism) {
  auto z2 = build_cyclic(2), z4 = build_cyclic(4);
  EXPECT_TRUE(is_injective_homomorphism(*z2, *z4, {0, 2}));
  EXPECT_FALSE(is_injective_homomorphism(*z2, *z4, {0, 1}));
  EXPECT_FALSE(is_injective_homomorphism(*z4, *z2, {0, 1, 0, 1}));
}

}  // namespace
}  // namespace coact
