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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coact {

/// Dense index of a group element. The identity is always 0.
using Element = std::uint32_t;

inline constexpr Element kIdentity = 0;

/// A finite group given by its Cayley table.
///
/// Elements are the indices 0..order-1 with the identity at 0. The table is
/// validated on construction (closure, identity, inverses, associativity)
/// and the object is immutable afterwards, so it can be shared freely
/// between threads through `GroupPtr`.
class FiniteGroup {
 public:
  /// `cayley[x][y]` is the index of x*y. Labels may be empty, in which case
  /// elements are labelled by their index. Throws InvalidInput.
  FiniteGroup(std::vector<std::vector<Element>> cayley,
              std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  Element mul(Element x, Element y) const { return table_[x * order_ + y]; }
  Element inv(Element x) const { return inverse_[x]; }
  /// x * y^{-1}
  Element div(Element x, Element y) const { return mul(x, inv(y)); }
  Element pow(Element x, std::int64_t k) const;
  std::size_t element_order(Element x) const;

  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Looks up an element by label, or by decimal index.
  std::optional<Element> find(std::string_view name) const;
  /// Like find() but throws InvalidInput naming the group when missing.
  Element element(std::string_view name) const;

  bool is_abelian() const;
  bool contains(Element x) const { return x < order_; }

  std::vector<std::vector<Element>> cayley() const;

  bool operator==(const FiniteGroup& other) const {
    return table_ == other.table_;
  }

 private:
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Sorted set of elements of a parent group closed under product and
/// inverse.
class Subgroup {
 public:
  /// Throws InvalidInput if `elements` is not a subgroup of `parent`.
  Subgroup(GroupPtr parent, std::vector<Element> elements);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Element x) const;
  bool is_abelian() const;
  bool is_cyclic() const;

 private:
  GroupPtr parent_;
  std::vector<Element> elements_;
};

GroupPtr build_cyclic(std::size_t n);

/// Componentwise product; the pair (g, h) gets index g*|H| + h.
GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// S_n for n <= 6 under composition (s*t)(i) = s(t(i)). For n = 3 the
/// elements are ordered e, a, a^2, b, ab, a^2b with a a 3-cycle and b a
/// transposition, so that ab = ba^2.
GroupPtr symmetric_group(std::size_t n);

/// Dihedral group <r, s | r^n = s^2 = e, srs^{-1} = r^{-1}> of order 2n,
/// elements r^i s^k with index i + n*k.
GroupPtr dihedral_group(std::size_t n);

/// The two order-16 groups
///   <a, b, c | a^4 = b^2 = c^2 = e, ab = ba, bc = cb, cac^{-1} = w>
/// with w = a^{-1} (variant 1) or w = ab (variant 2). Element a^i b^j c^k
/// has index i + 4j + 8k.
GroupPtr presented_group_16(int variant);

std::vector<Element> centralizer(const FiniteGroup& g, Element x);
std::vector<Element> center(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Element>& gens);

/// True iff `map` (indexed by elements of h) is an injective homomorphism
/// h -> g.
bool is_injective_homomorphism(const FiniteGroup& h, const FiniteGroup& g,
                               const std::vector<Element>& map);

}  // namespace coact
