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

#include "coact/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "coact/errors.hpp"

namespace coact {

namespace {

std::string index_label(std::size_t i) { return std::to_string(i); }

// "a^i b^j c^k" style word, "e" for the empty word.
std::string word_label(const std::vector<std::pair<char, std::size_t>>& word) {
  std::string out;
  for (const auto& [letter, exp] : word) {
    if (exp == 0) continue;
    out += letter;
    if (exp > 1) out += "^" + std::to_string(exp);
  }
  return out.empty() ? "e" : out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> cayley,
                         std::vector<std::string> labels)
    : order_(cayley.size()) {
  if (order_ == 0) throw InvalidInput("group: empty Cayley table");
  table_.reserve(order_ * order_);
  for (std::size_t x = 0; x < order_; ++x) {
    if (cayley[x].size() != order_) {
      throw InvalidInput("group: Cayley row " + std::to_string(x) +
                         " has wrong length");
    }
    for (Element v : cayley[x]) {
      if (v >= order_) {
        throw InvalidInput("group: Cayley entry out of range in row " +
                           std::to_string(x));
      }
      table_.push_back(v);
    }
  }
  for (std::size_t x = 0; x < order_; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) {
      throw InvalidInput("group: index 0 is not the identity (fails at " +
                         std::to_string(x) + ")");
    }
  }
  // Latin-square rows give unique right inverses; check they are two-sided.
  inverse_.assign(order_, 0);
  for (Element x = 0; x < order_; ++x) {
    std::optional<Element> found;
    for (Element y = 0; y < order_; ++y) {
      if (mul(x, y) == 0) {
        if (found) {
          throw InvalidInput("group: element " + std::to_string(x) +
                             " has two right inverses");
        }
        found = y;
      }
    }
    if (!found || mul(*found, x) != 0) {
      throw InvalidInput("group: element " + std::to_string(x) +
                         " has no two-sided inverse");
    }
    inverse_[x] = *found;
  }
  for (Element x = 0; x < order_; ++x) {
    for (Element y = 0; y < order_; ++y) {
      const Element xy = mul(x, y);
      for (Element z = 0; z < order_; ++z) {
        if (mul(xy, z) != mul(x, mul(y, z))) {
          std::ostringstream msg;
          msg << "group: not associative at (" << x << ", " << y << ", " << z
              << ")";
          throw InvalidInput(msg.str());
        }
      }
    }
  }
  if (labels.empty()) {
    labels_.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) labels_.push_back(index_label(i));
  } else if (labels.size() != order_) {
    throw InvalidInput("group: label count does not match order");
  } else {
    labels_ = std::move(labels);
  }
}

Element FiniteGroup::pow(Element x, std::int64_t k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Element acc = kIdentity;
  for (std::int64_t i = 0; i < k; ++i) acc = mul(acc, x);
  return acc;
}

std::size_t FiniteGroup::element_order(Element x) const {
  std::size_t k = 1;
  for (Element y = x; y != kIdentity; y = mul(y, x)) ++k;
  return k;
}

std::optional<Element> FiniteGroup::find(std::string_view name) const {
  for (std::size_t i = 0; i < order_; ++i) {
    if (labels_[i] == name) return static_cast<Element>(i);
  }
  std::size_t idx = 0;
  const auto* end = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(name.data(), end, idx);
  if (ec == std::errc() && ptr == end && idx < order_) {
    return static_cast<Element>(idx);
  }
  return std::nullopt;
}

Element FiniteGroup::element(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw InvalidInput("unknown group element '" + std::string(name) + "'");
}

bool FiniteGroup::is_abelian() const {
  for (Element x = 0; x < order_; ++x) {
    for (Element y = x + 1; y < order_; ++y) {
      if (mul(x, y) != mul(y, x)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Element>> FiniteGroup::cayley() const {
  std::vector<std::vector<Element>> rows(order_);
  for (std::size_t x = 0; x < order_; ++x) {
    rows[x].assign(table_.begin() + x * order_,
                   table_.begin() + (x + 1) * order_);
  }
  return rows;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  if (!contains(kIdentity)) throw InvalidInput("subgroup: missing identity");
  for (Element x : elements_) {
    if (!parent_->contains(x)) throw InvalidInput("subgroup: bad element");
    if (!contains(parent_->inv(x))) {
      throw InvalidInput("subgroup: not closed under inverse");
    }
    for (Element y : elements_) {
      if (!contains(parent_->mul(x, y))) {
        throw InvalidInput("subgroup: not closed under product");
      }
    }
  }
}

bool Subgroup::contains(Element x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool Subgroup::is_abelian() const {
  for (Element x : elements_) {
    for (Element y : elements_) {
      if (parent_->mul(x, y) != parent_->mul(y, x)) return false;
    }
  }
  return true;
}

bool Subgroup::is_cyclic() const {
  return std::any_of(elements_.begin(), elements_.end(), [&](Element x) {
    return parent_->element_order(x) == elements_.size();
  });
}

GroupPtr build_cyclic(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic group needs n >= 1");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Element>((i + j) % n);
  }
  return std::make_shared<FiniteGroup>(std::move(t));
}

GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ga = static_cast<Element>(a / nh), ha = static_cast<Element>(a % nh);
    labels[a] = "(" + g.label(ga) + "," + h.label(ha) + ")";
    for (std::size_t b = 0; b < n; ++b) {
      const auto gb = static_cast<Element>(b / nh), hb = static_cast<Element>(b % nh);
      t[a][b] = static_cast<Element>(g.mul(ga, gb) * nh + h.mul(ha, hb));
    }
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(labels));
}

GroupPtr symmetric_group(std::size_t n) {
  if (n == 0 || n > 6) {
    throw InvalidInput("symmetric_group supports 1 <= n <= 6");
  }
  using Perm = std::vector<int>;
  std::vector<Perm> perms;
  std::vector<std::string> labels;
  if (n == 3) {
    const Perm e{0, 1, 2}, a{1, 2, 0}, b{1, 0, 2};
    auto compose = [](const Perm& s, const Perm& t) {
      Perm r(3);
      for (int i = 0; i < 3; ++i) r[i] = s[t[i]];
      return r;
    };
    const Perm a2 = compose(a, a);
    perms = {e, a, a2, b, compose(a, b), compose(a2, b)};
    labels = {"e", "a", "a^2", "b", "ab", "a^2b"};
  } else {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
      std::string l = "[";
      for (std::size_t i = 0; i < n; ++i) l += (i ? " " : "") + std::to_string(p[i]);
      labels.push_back(l + "]");
    } while (std::next_permutation(p.begin(), p.end()));
    labels[0] = "e";
  }
  const std::size_t order = perms.size();
  auto index_of = [&](const Perm& q) {
    return static_cast<Element>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      Perm r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = perms[x][perms[y][i]];
      t[x][y] = index_of(r);
    }
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(labels));
}

GroupPtr dihedral_group(std::size_t n) {
  if (n == 0) throw InvalidInput("dihedral_group needs n >= 1");
  const std::size_t order = 2 * n;
  // r^i s^k * r^i' s^k' = r^(i + (-1)^k i') s^(k + k')
  auto index = [n](std::int64_t i, std::int64_t k) {
    const auto nn = static_cast<std::int64_t>(n);
    return static_cast<Element>(((i % nn) + nn) % nn + nn * (k % 2));
  };
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    const auto i = static_cast<std::int64_t>(x % n), k = static_cast<std::int64_t>(x / n);
    labels[x] = word_label({{'r', x % n}, {'s', x / n}});
    for (std::size_t y = 0; y < order; ++y) {
      const auto i2 = static_cast<std::int64_t>(y % n), k2 = static_cast<std::int64_t>(y / n);
      t[x][y] = index(i + (k ? -i2 : i2), k + k2);
    }
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(labels));
}

GroupPtr presented_group_16(int variant) {
  if (variant != 1 && variant != 2) {
    throw InvalidInput("presented_group_16: variant must be 1 or 2");
  }
  auto index = [](int i, int j, int k) {
    return static_cast<Element>(((i % 4) + 4) % 4 + 4 * (j % 2) + 8 * (k % 2));
  };
  // Moving c^k past a^i' uses c a^i' c^{-1} = a^{-i'} (variant 1) or
  // (ab)^i' = a^i' b^i' (variant 2); b is central in both.
  std::vector<std::vector<Element>> t(16, std::vector<Element>(16));
  std::vector<std::string> labels(16);
  for (int x = 0; x < 16; ++x) {
    const int i = x % 4, j = (x / 4) % 2, k = x / 8;
    labels[x] = word_label({{'a', static_cast<std::size_t>(i)},
                            {'b', static_cast<std::size_t>(j)},
                            {'c', static_cast<std::size_t>(k)}});
    for (int y = 0; y < 16; ++y) {
      const int i2 = y % 4, j2 = (y / 4) % 2, k2 = y / 8;
      int ai = i2, bj = j2;
      if (k == 1) {
        if (variant == 1) {
          ai = -i2;
        } else {
          bj += i2;
        }
      }
      t[x][y] = index(i + ai, j + bj, k + k2);
    }
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(labels));
}

std::vector<Element> centralizer(const FiniteGroup& g, Element x) {
  std::vector<Element> out;
  for (Element y = 0; y < g.order(); ++y) {
    if (g.mul(x, y) == g.mul(y, x)) out.push_back(y);
  }
  return out;
}

std::vector<Element> center(const FiniteGroup& g) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (centralizer(g, x).size() == g.order()) out.push_back(x);
  }
  return out;
}

bool is_cyclic(const FiniteGroup& g) {
  for (Element x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == g.order()) return true;
  }
  return false;
}

Subgroup subgroup_generated(const GroupPtr& g,
                            const std::vector<Element>& gens) {
  std::vector<bool> in(g->order(), false);
  std::vector<Element> members{kIdentity};
  in[kIdentity] = true;
  for (Element s : gens) {
    if (!g->contains(s)) throw InvalidInput("subgroup_generated: bad generator");
  }
  // Closing under right multiplication by generators suffices in a finite
  // group: inverses are positive powers.
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Element s : gens) {
      const Element y = g->mul(members[head], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  return Subgroup(g, std::move(members));
}

bool is_injective_homomorphism(const FiniteGroup& h, const FiniteGroup& g,
                               const std::vector<Element>& map) {
  if (map.size() != h.order()) return false;
  std::vector<bool> hit(g.order(), false);
  for (Element x : map) {
    if (!g.contains(x) || hit[x]) return false;
    hit[x] = true;
  }
  for (Element x = 0; x < h.order(); ++x) {
    for (Element y = 0; y < h.order(); ++y) {
      if (map[h.mul(x, y)] != g.mul(map[x], map[y])) return false;
    }
  }
  return true;
}

}  // namespace coact
