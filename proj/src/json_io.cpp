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

#include "coact/json_io.hpp"

#include "coact/errors.hpp"

namespace coact {

namespace {

const Json& field(const Json& j, const char* key, const char* where) {
  if (!j.is_object()) throw InvalidInput(std::string(where) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string(where) + ": missing field '" + key + "'");
  return *it;
}

template <typename T>
T as(const Json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

std::size_t count_field(const Json& j, const char* key, const char* where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw InvalidInput(std::string(where) + ": '" + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Json matrix_list(const std::vector<CMatrix>& mats) {
  Json arr = Json::array();
  for (const auto& m : mats) arr.push_back(matrix_to_json(m));
  return arr;
}

std::vector<CMatrix> matrix_list_from(const Json& j, const char* where) {
  if (!j.is_array()) throw InvalidInput(std::string(where) + ": expected an array of matrices");
  std::vector<CMatrix> out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    try {
      out.push_back(matrix_from_json(j[k]));
    } catch (const InvalidInput& e) {
      throw InvalidInput(std::string(where) + "[" + std::to_string(k) + "]: " + e.what());
    }
  }
  return out;
}

Json complex_list(const std::vector<Complex>& v) {
  Json re = Json::array(), im = Json::array();
  for (auto c : v) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  return Json{{"re", re}, {"im", im}};
}

std::vector<Complex> complex_list_from(const Json& j, const char* where) {
  const auto re = as<std::vector<double>>(field(j, "re", where), where);
  const auto im = as<std::vector<double>>(field(j, "im", where), where);
  if (re.size() != im.size()) throw InvalidInput(std::string(where) + ": re/im length mismatch");
  std::vector<Complex> out(re.size());
  for (std::size_t k = 0; k < re.size(); ++k) out[k] = {re[k], im[k]};
  return out;
}

}  // namespace

Json group_to_json(const FiniteGroup& g) {
  Json cayley = Json::array();
  for (const auto& row : g.cayley()) cayley.push_back(row);
  return Json{{"order", g.order()}, {"cayley", cayley}, {"labels", g.labels()}};
}

GroupPtr group_from_json(const Json& j) {
  if (j.is_string()) return catalog_group(j.get<std::string>());
  const std::size_t order = count_field(j, "order", "group");
  auto cayley = as<std::vector<std::vector<Element>>>(field(j, "cayley", "group"), "group.cayley");
  if (cayley.size() != order) throw InvalidInput("group: cayley table has wrong number of rows");
  std::vector<std::string> labels;
  if (auto it = j.find("labels"); it != j.end()) {
    labels = as<std::vector<std::string>>(*it, "group.labels");
  }
  return std::make_shared<const FiniteGroup>(std::move(cayley), std::move(labels));
}

Json matrix_to_json(const CMatrix& a) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json rr = Json::array(), ir = Json::array();
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      rr.push_back(a(i, k).real());
      ir.push_back(a(i, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"re", re}, {"im", im}};
}

CMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = count_field(j, "rows", "matrix");
  const std::size_t cols = count_field(j, "cols", "matrix");
  const auto re = as<std::vector<std::vector<double>>>(field(j, "re", "matrix"), "matrix.re");
  std::vector<std::vector<double>> im;
  if (auto it = j.find("im"); it != j.end()) {
    im = as<std::vector<std::vector<double>>>(*it, "matrix.im");
  } else {
    im.assign(rows, std::vector<double>(cols, 0.0));
  }
  if (re.size() != rows || im.size() != rows) throw InvalidInput("matrix: row count mismatch");
  CMatrix a(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (re[i].size() != cols || im[i].size() != cols) {
      throw InvalidInput("matrix: row " + std::to_string(i) + " has wrong length");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = {re[i][k], im[i][k]};
    }
  }
  if (!all_finite(a)) throw InvalidInput("matrix: non-finite entry");
  return a;
}

Json element_to_json(const GroupAlgebraElement& c) {
  Json j = complex_list(c.coeffs());
  return Json{{"group", group_to_json(*c.group())}, {"re", j["re"]}, {"im", j["im"]}};
}

GroupAlgebraElement element_from_json(const Json& j) {
  GroupPtr g = group_from_json(field(j, "group", "element"));
  return GroupAlgebraElement(std::move(g), complex_list_from(j, "element"));
}

Json cocycle_to_json(const Cocycle& omega) {
  Json table = Json::array();
  for (const auto& row : omega.table()) table.push_back(row);
  return Json{{"group", group_to_json(*omega.group())},
              {"modulus", omega.modulus()},
              {"exponents", table}};
}

Cocycle cocycle_from_json(const Json& j, bool validate) {
  GroupPtr g = group_from_json(field(j, "group", "cocycle"));
  const auto modulus = as<std::int64_t>(field(j, "modulus", "cocycle"), "cocycle.modulus");
  const auto table = as<std::vector<std::vector<std::int64_t>>>(field(j, "exponents", "cocycle"),
                                                                "cocycle.exponents");
  Cocycle omega(std::move(g), modulus, table);
  if (validate) {
    if (auto r = verify_cocycle(omega); !r.valid) throw InvalidInput("cocycle: " + r.failure);
  }
  return omega;
}

Json coboundary_to_json(const CoboundaryData& m) {
  return Json{{"modulus", m.modulus()}, {"values", m.values()}};
}

Json projrep_to_json(const ProjRep& u) {
  return Json{{"group", group_to_json(*u.group())}, {"dim", u.dim()},
              {"images", matrix_list(u.images())}};
}

ProjRep projrep_from_json(const Json& j) {
  GroupPtr g = group_from_json(field(j, "group", "rep"));
  return ProjRep(std::move(g), matrix_list_from(field(j, "images", "rep"), "rep.images"));
}

Json coaction_to_json(const Coaction& delta) {
  Json j{{"group", group_to_json(*delta.group())}, {"n", delta.n()}};
  if (!delta.is_full_matrix_algebra()) j["blocks"] = delta.blocks();
  j["maps"] = matrix_list(delta.maps());
  return j;
}

Coaction coaction_from_json(const Json& j) {
  GroupPtr g = group_from_json(field(j, "group", "coaction"));
  const std::size_t n = count_field(j, "n", "coaction");
  std::vector<std::size_t> blocks;
  if (auto it = j.find("blocks"); it != j.end()) {
    blocks = as<std::vector<std::size_t>>(*it, "coaction.blocks");
  }
  return Coaction(std::move(g), n, matrix_list_from(field(j, "maps", "coaction"), "coaction.maps"),
                  std::move(blocks));
}

Json fell_bundle_to_json(const FellBundle& bundle) {
  Json fibres = Json::array();
  for (const auto& s : bundle.fibres()) fibres.push_back(matrix_list(s));
  Json j{{"group", group_to_json(*bundle.group())}, {"n", bundle.n()}};
  if (bundle.blocks().size() > 1) j["blocks"] = bundle.blocks();
  j["subspaces"] = fibres;
  return j;
}

FellBundle fell_bundle_from_json(const Json& j, double tol) {
  GroupPtr g = group_from_json(field(j, "group", "bundle"));
  const std::size_t n = count_field(j, "n", "bundle");
  std::vector<std::size_t> blocks;
  if (auto it = j.find("blocks"); it != j.end()) {
    blocks = as<std::vector<std::size_t>>(*it, "bundle.blocks");
  }
  const Json& subs = field(j, "subspaces", "bundle");
  if (!subs.is_array()) throw InvalidInput("bundle: 'subspaces' must be an array");
  std::vector<std::vector<CMatrix>> fibres;
  for (const auto& s : subs) fibres.push_back(matrix_list_from(s, "bundle.subspaces"));
  return FellBundle(std::move(g), n, std::move(fibres), std::move(blocks), tol);
}

Json inner_data_to_json(const InnerData& d) {
  return Json{{"group", group_to_json(*d.group)},
              {"basis", matrix_to_json(d.basis)},
              {"points", d.points}};
}

InnerData inner_data_from_json(const Json& j) {
  InnerData d{group_from_json(field(j, "group", "inner data")),
              matrix_from_json(field(j, "basis", "inner data")),
              as<std::vector<Element>>(field(j, "points", "inner data"), "inner data.points")};
  d.validate();
  return d;
}

Json unitary_to_json(const ImplementingUnitary& u) {
  return Json{{"group", group_to_json(*u.group())}, {"n", u.n()},
              {"components", matrix_list(u.value().components())}};
}

ImplementingUnitary unitary_from_json(const Json& j) {
  GroupPtr g = group_from_json(field(j, "group", "unitary"));
  GroupMatrix v(std::move(g), matrix_list_from(field(j, "components", "unitary"),
                                               "unitary.components"));
  return ImplementingUnitary(std::move(v));
}

Json catalog_entry_to_json(const CatalogEntry& e) {
  Json j{{"name", e.name}, {"provenance", e.provenance}};
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GroupPtr>) {
          j["kind"] = "group";
          j["group"] = group_to_json(*p);
        } else if constexpr (std::is_same_v<T, Cocycle>) {
          j["kind"] = "cocycle";
          j["cocycle"] = cocycle_to_json(p);
        } else if constexpr (std::is_same_v<T, ProjRep>) {
          j["kind"] = "rep";
          j["rep"] = projrep_to_json(p);
        } else if constexpr (std::is_same_v<T, Coaction>) {
          j["kind"] = "coaction";
          j["coaction"] = coaction_to_json(p);
        } else {
          j["kind"] = "inner-data";
          j["inner_data"] = inner_data_to_json(p);
        }
      },
      e.payload);
  return j;
}

}  // namespace coact
