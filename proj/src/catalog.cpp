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

#include "coact/catalog.hpp"

#include <charconv>

#include "coact/errors.hpp"
#include "coact/twisted.hpp"

namespace coact {

namespace {

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::size_t parse_count(const std::string& text, const std::string& name) {
  std::size_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InvalidInput("catalog: bad parameter '" + text + "' in '" + name + "'");
  }
  return v;
}

std::vector<std::size_t> parse_list(const std::string& text, const std::string& name) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t stop = comma == std::string::npos ? text.size() : comma;
    out.push_back(parse_count(text.substr(start, stop - start), name));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int parse_variant(const std::string& text, const std::string& name) {
  const std::size_t v = parse_count(text, name);
  if (v != 1 && v != 2) throw InvalidInput("catalog: variant must be 1 or 2 in '" + name + "'");
  return static_cast<int>(v);
}

InnerExample make_inner(InnerData data) {
  InnerCoaction built = inner_from_data(data);
  return {std::move(data), std::move(built.coaction), std::move(built.unitary)};
}

std::string points_text(const FiniteGroup& g, const std::vector<Element>& pts) {
  std::string s = "(";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ", ";
    s += g.label(pts[i]);
  }
  return s + ")";
}

struct ElementName {
  GroupPtr group;
  Element x;
};

ElementName split_group_element(const std::string& rest, const std::string& name) {
  const std::size_t dash = rest.rfind('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == rest.size()) {
    throw InvalidInput("catalog: expected <group>-<element> in '" + name + "'");
  }
  GroupPtr g = catalog_group(rest.substr(0, dash));
  const Element x = g->element(rest.substr(dash + 1));
  return {std::move(g), x};
}

}  // namespace

InnerExample example_m2(const GroupPtr& g, Element x) {
  if (!g->contains(x)) throw InvalidInput("example_m2: element out of range");
  return make_inner(InnerData{g, identity_matrix(2), {x, kIdentity}});
}

InnerExample example_m3(const GroupPtr& g, Element x) {
  if (!g->contains(x)) throw InvalidInput("example_m3: element out of range");
  return make_inner(InnerData{g, identity_matrix(3), {kIdentity, kIdentity, x}});
}

InnerExample s3_effective_inner(std::size_t n) {
  if (n < 4) throw InvalidInput("s3_effective_inner: there are none for n < 4");
  GroupPtr s3 = symmetric_group(3);
  std::vector<Element> points(n, kIdentity);
  points[0] = s3->element("a");
  points[1] = s3->element("b");
  points[2] = s3->element("ab");
  return make_inner(InnerData{s3, identity_matrix(n), std::move(points)});
}

bool spectrum_is_subgroup(const Coaction& delta) {
  const FiniteGroup& g = *delta.group();
  const std::vector<Element> sp = spectrum(delta);
  std::vector<char> in(g.order(), 0);
  for (auto x : sp) in[x] = 1;
  if (!in[kIdentity]) return false;
  for (auto x : sp) {
    if (!in[g.inv(x)]) return false;
    for (auto y : sp) {
      if (!in[g.mul(x, y)]) return false;
    }
  }
  return true;
}

ErgodicConstruction klein_four_on_m2() {
  ProjRep rep = clock_shift_rep(2);
  Coaction delta = coaction_from_projrep(rep);
  return {std::move(delta), std::move(rep)};
}

ErgodicConstruction zpzp_on_mp(std::size_t p) {
  ProjRep rep = clock_shift_rep(p);
  Coaction delta = coaction_from_projrep(rep);
  return {std::move(delta), std::move(rep)};
}

ErgodicConstruction order16_on_m4(int variant) {
  ProjRep rep = order16_rep(variant);
  Coaction delta = coaction_from_projrep(rep);
  return {std::move(delta), std::move(rep)};
}

Cocycle extend_cocycle(const Cocycle& omega, const FiniteGroup& k) {
  const FiniteGroup& g = *omega.group();
  GroupPtr product = direct_product(g, k);
  const std::size_t order = product->order();
  const std::size_t kn = k.order();
  std::vector<std::int64_t> exps(order * order);
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) {
      exps[a * order + b] = omega.exponent(static_cast<Element>(a / kn), static_cast<Element>(b / kn));
    }
  }
  return Cocycle(std::move(product), omega.modulus(), std::move(exps));
}

GroupPtr catalog_group(const std::string& name) {
  if (name.empty()) throw InvalidInput("catalog: empty group name");
  if (name == "klein4") return direct_product(*build_cyclic(2), *build_cyclic(2));
  if (starts_with(name, "order16-")) return presented_group_16(parse_variant(name.substr(8), name));
  if (const std::size_t cross = name.find('x'); cross != std::string::npos) {
    GroupPtr left = catalog_group(name.substr(0, cross));
    GroupPtr right = catalog_group(name.substr(cross + 1));
    return direct_product(*left, *right);
  }
  const std::string rest = name.substr(1);
  switch (name[0]) {
    case 'z': {
      const std::size_t n = parse_count(rest, name);
      if (n == 0) throw InvalidInput("catalog: z0 is not a group");
      return build_cyclic(n);
    }
    case 's':
      return symmetric_group(parse_count(rest, name));
    case 'd':
      return dihedral_group(parse_count(rest, name));
    default:
      throw InvalidInput("catalog: unknown group '" + name + "'");
  }
}

CatalogEntry catalog_entry(const std::string& name) {
  if (starts_with(name, "inner-data-m2-")) {
    auto [g, x] = split_group_element(name.substr(14), name);
    InnerExample ex = example_m2(g, x);
    return {name, ex.data, "points " + points_text(*g, ex.data.points) + " on M_2"};
  }
  if (starts_with(name, "inner-data-m3-")) {
    auto [g, x] = split_group_element(name.substr(14), name);
    InnerExample ex = example_m3(g, x);
    return {name, ex.data, "points " + points_text(*g, ex.data.points) + " on M_3"};
  }
  if (starts_with(name, "inner-data-s3-")) {
    InnerExample ex = s3_effective_inner(parse_count(name.substr(14), name));
    return {name, ex.data, "effective inner S_3 points " + points_text(*ex.data.group, ex.data.points)};
  }
  if (starts_with(name, "m2-")) {
    auto [g, x] = split_group_element(name.substr(3), name);
    InnerExample ex = example_m2(g, x);
    return {name, ex.coaction,
            "inner coaction on M_2 from points " + points_text(*g, ex.data.points)};
  }
  if (starts_with(name, "m3-")) {
    auto [g, x] = split_group_element(name.substr(3), name);
    InnerExample ex = example_m3(g, x);
    return {name, ex.coaction,
            "inner coaction on M_3 from points " + points_text(*g, ex.data.points)};
  }
  if (starts_with(name, "s3-inner-")) {
    InnerExample ex = s3_effective_inner(parse_count(name.substr(9), name));
    return {name, ex.coaction,
            "effective inner coaction of S_3 from points " + points_text(*ex.data.group, ex.data.points)};
  }
  if (name == "klein4-on-m2") {
    return {name, klein_four_on_m2().coaction,
            "ergodic coaction of Z_2 x Z_2 on M_2 graded by the Pauli matrices"};
  }
  if (starts_with(name, "zpzp-on-m")) {
    const std::size_t p = parse_count(name.substr(9), name);
    return {name, zpzp_on_mp(p).coaction,
            "ergodic coaction of Z_p x Z_p on M_p graded by clock and shift, p = " + std::to_string(p)};
  }
  if (starts_with(name, "order16-") && ends_with(name, "-on-m4")) {
    const int v = parse_variant(name.substr(8, name.size() - 8 - 6), name);
    return {name, order16_on_m4(v).coaction,
            "ergodic coaction on M_4 of the order-16 group, variant " + std::to_string(v)};
  }
  if (starts_with(name, "clock-shift-")) {
    const std::size_t p = parse_count(name.substr(12), name);
    return {name, clock_shift_rep(p), "clock and shift unitaries D^a S^b, p = " + std::to_string(p)};
  }
  if (starts_with(name, "order16-rep-")) {
    const int v = parse_variant(name.substr(12), name);
    return {name, order16_rep(v),
            "4 x 4 unitaries A^i B^j C^k of the order-16 group, variant " + std::to_string(v)};
  }
  if (name == "bicharacter-2-times-z2") {
    Cocycle omega = extend_cocycle(bicharacter_cocycle({2}), *build_cyclic(2));
    return {name, omega, "Z_2 x Z_2 bicharacter cocycle extended trivially over Z_2"};
  }
  if (starts_with(name, "bicharacter-")) {
    const std::vector<std::size_t> orders = parse_list(name.substr(12), name);
    return {name, bicharacter_cocycle(orders), "bicharacter cocycle on H x H^"};
  }
  if (starts_with(name, "cocycle-clock-shift-")) {
    const std::size_t p = parse_count(name.substr(20), name);
    return {name, cocycle_of_projrep(clock_shift_rep(p)),
            "cocycle of the clock and shift unitaries, p = " + std::to_string(p)};
  }
  if (starts_with(name, "cocycle-order16-")) {
    const int v = parse_variant(name.substr(16), name);
    return {name, cocycle_of_projrep(order16_rep(v)),
            "cocycle of the order-16 unitaries, variant " + std::to_string(v)};
  }
  if (starts_with(name, "trivial-")) {
    return {name, Cocycle::trivial(catalog_group(name.substr(8))), "trivial cocycle"};
  }
  GroupPtr g;
  try {
    g = catalog_group(name);
  } catch (const InvalidInput&) {
    throw InvalidInput("catalog: unknown name '" + name + "'");
  }
  return {name, g, "group " + name};
}

bool is_catalog_name(const std::string& name) {
  try {
    catalog_entry(name);
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

std::vector<std::string> catalog_names() {
  return {"z4",
          "s3",
          "d4",
          "klein4",
          "order16-1",
          "order16-2",
          "trivial-s3",
          "bicharacter-2",
          "bicharacter-2,2",
          "bicharacter-2-times-z2",
          "cocycle-clock-shift-3",
          "cocycle-order16-1",
          "cocycle-order16-2",
          "clock-shift-3",
          "order16-rep-1",
          "order16-rep-2",
          "m2-z4-1",
          "m3-s3-a",
          "klein4-on-m2",
          "zpzp-on-m3",
          "order16-1-on-m4",
          "order16-2-on-m4",
          "s3-inner-4",
          "inner-data-s3-4"};
}

std::vector<std::string> catalog_cocycle_names() {
  return {"trivial-z4",        "trivial-klein4",       "trivial-s3",
          "trivial-d4",        "trivial-order16-1",    "bicharacter-2",
          "bicharacter-3",     "bicharacter-4",        "bicharacter-2,2",
          "bicharacter-2-times-z2", "cocycle-clock-shift-2", "cocycle-clock-shift-3",
          "cocycle-clock-shift-5",  "cocycle-order16-1",     "cocycle-order16-2"};
}

}  // namespace coact
