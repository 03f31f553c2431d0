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

#include <string>
#include <variant>
#include <vector>

#include "coact/coaction.hpp"
#include "coact/cocycle.hpp"
#include "coact/group.hpp"
#include "coact/proj_rep.hpp"

namespace coact {

struct InnerExample {
  InnerData data;
  Coaction coaction;
  ImplementingUnitary unitary;
};

/// Inner coaction on M_2 from points (x, e).
InnerExample example_m2(const GroupPtr& g, Element x);
/// Inner coaction on M_3 from points (e, e, x).
InnerExample example_m3(const GroupPtr& g, Element x);
/// Inner coaction of S_3 on M_n from (a, b, ab, e, ..., e). Throws
/// InvalidInput for n < 4.
InnerExample s3_effective_inner(std::size_t n);

/// Whether sp(delta) is a subgroup.
bool spectrum_is_subgroup(const Coaction& delta);

ErgodicConstruction klein_four_on_m2();
ErgodicConstruction zpzp_on_mp(std::size_t p);
ErgodicConstruction order16_on_m4(int variant);

/// omega((g, a), (h, b)) = omega(g, h) on direct_product(G, K).
Cocycle extend_cocycle(const Cocycle& omega, const FiniteGroup& k);

using CatalogPayload = std::variant<GroupPtr, Cocycle, ProjRep, Coaction, InnerData>;

struct CatalogEntry {
  std::string name;
  CatalogPayload payload;
  std::string provenance;
};

/// Resolves a catalog name. Throws InvalidInput for unknown names.
///
///   groups     z<n>, s<n>, d<n>, klein4, order16-<v>, <g>x<h>
///   cocycles   trivial-<group>, bicharacter-<d1,d2,...>,
///              cocycle-clock-shift-<p>, cocycle-order16-<v>,
///              bicharacter-2-times-z2
///   reps       clock-shift-<p>, order16-rep-<v>
///   coactions  m2-<group>-<x>, m3-<group>-<x>, klein4-on-m2,
///              zpzp-on-m<p>, order16-<v>-on-m4, s3-inner-<n>
///   inner data inner-data-m2-<group>-<x>, inner-data-m3-<group>-<x>,
///              inner-data-s3-<n>
CatalogEntry catalog_entry(const std::string& name);
bool is_catalog_name(const std::string& name);

/// Representative names, one per family.
std::vector<std::string> catalog_names();
/// Every cocycle entry used for cross-checks.
std::vector<std::string> catalog_cocycle_names();

GroupPtr catalog_group(const std::string& name);

}  // namespace coact
