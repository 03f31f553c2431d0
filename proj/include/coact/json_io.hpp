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

#include "json.hpp"

#include "coact/catalog.hpp"
#include "coact/coaction.hpp"
#include "coact/cocycle.hpp"
#include "coact/group.hpp"
#include "coact/group_algebra.hpp"
#include "coact/proj_rep.hpp"

namespace coact {

using Json = nlohmann::ordered_json;

Json group_to_json(const FiniteGroup& g);
/// Accepts a group object or a catalog group name.
GroupPtr group_from_json(const Json& j);

/// { "rows", "cols", "re": [[...]], "im": [[...]] }
Json matrix_to_json(const CMatrix& a);
CMatrix matrix_from_json(const Json& j);

Json element_to_json(const GroupAlgebraElement& c);
GroupAlgebraElement element_from_json(const Json& j);

Json cocycle_to_json(const Cocycle& omega);
/// Runs verify_cocycle unless `validate` is false.
Cocycle cocycle_from_json(const Json& j, bool validate = true);

Json coboundary_to_json(const CoboundaryData& m);

Json projrep_to_json(const ProjRep& u);
ProjRep projrep_from_json(const Json& j);

Json coaction_to_json(const Coaction& delta);
/// Checks shapes only; the coaction axioms are left to verify_coaction.
Coaction coaction_from_json(const Json& j);

Json fell_bundle_to_json(const FellBundle& bundle);
FellBundle fell_bundle_from_json(const Json& j, double tol = 1e-9);

Json inner_data_to_json(const InnerData& d);
InnerData inner_data_from_json(const Json& j);

Json unitary_to_json(const ImplementingUnitary& u);
ImplementingUnitary unitary_from_json(const Json& j);

Json catalog_entry_to_json(const CatalogEntry& e);

}  // namespace coact
