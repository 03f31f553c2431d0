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

#include "coact/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "coact/catalog.hpp"
#include "coact/coaction.hpp"
#include "coact/errors.hpp"
#include "coact/json_io.hpp"
#include "coact/twisted.hpp"

namespace coact {

namespace {

constexpr double kMaxTol = 1e-3;

struct Outcome {
  Json result;
  bool passed = true;
};

Json labels_of(const FiniteGroup& g, const std::vector<Element>& xs) {
  Json arr = Json::array();
  for (auto x : xs) arr.push_back(g.label(x));
  return arr;
}

Json blocks_json(const StarAlgebra& b) {
  Json arr = Json::array();
  for (const auto& blk : b.blocks()) {
    arr.push_back(Json{{"size", blk.size}, {"multiplicity", blk.multiplicity}});
  }
  return arr;
}

Json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(path + ": malformed JSON: " + e.what());
  }
}

// Accepts a bare object, a catalog entry, or a report wrapping it.
Json unwrap(Json j, const char* key, const char* marker) {
  if (j.is_object() && j.contains("result") && j["result"].is_object()) j = j["result"];
  while (j.is_object() && !j.contains(marker) && j.contains(key) && j[key].is_object()) {
    j = j[key];
  }
  return j;
}

class Resolver {
 public:
  explicit Resolver(Json& provenance) : provenance_(provenance) {}

  GroupPtr group(const std::string& arg) {
    return resolve<GroupPtr>(
        arg, "group", "cayley", [](const Json& j) { return group_from_json(j); },
        [](const CatalogPayload& p) -> GroupPtr {
          return std::visit(
              [](const auto& v) -> GroupPtr {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, GroupPtr>) return v;
                else if constexpr (std::is_same_v<T, InnerData>) return v.group;
                else return v.group();
              },
              p);
        });
  }

  Cocycle cocycle(const std::string& arg, bool validate = true) {
    return resolve<Cocycle>(
        arg, "cocycle", "exponents", [&](const Json& j) { return cocycle_from_json(j, validate); },
        [](const CatalogPayload& p) -> Cocycle {
          if (auto c = std::get_if<Cocycle>(&p)) return *c;
          throw InvalidInput("catalog entry is not a cocycle");
        });
  }

  ProjRep rep(const std::string& arg) {
    return resolve<ProjRep>(
        arg, "rep", "images", [](const Json& j) { return projrep_from_json(j); },
        [](const CatalogPayload& p) -> ProjRep {
          if (auto r = std::get_if<ProjRep>(&p)) return *r;
          throw InvalidInput("catalog entry is not a projective representation");
        });
  }

  Coaction coaction(const std::string& arg) {
    return resolve<Coaction>(
        arg, "coaction", "maps", [](const Json& j) { return coaction_from_json(j); },
        [](const CatalogPayload& p) -> Coaction {
          if (auto c = std::get_if<Coaction>(&p)) return *c;
          if (auto d = std::get_if<InnerData>(&p)) return inner_from_data(*d).coaction;
          throw InvalidInput("catalog entry is not a coaction");
        });
  }

  FellBundle bundle(const std::string& arg, double tol) {
    return resolve<FellBundle>(
        arg, "bundle", "subspaces", [&](const Json& j) { return fell_bundle_from_json(j, tol); },
        [&](const CatalogPayload& p) -> FellBundle {
          if (auto c = std::get_if<Coaction>(&p)) return spectral_subspaces(*c, tol);
          throw InvalidInput("catalog entry is not a coaction");
        });
  }

  InnerData inner_data(const std::string& arg) {
    return resolve<InnerData>(
        arg, "inner_data", "points", [](const Json& j) { return inner_data_from_json(j); },
        [](const CatalogPayload& p) -> InnerData {
          if (auto d = std::get_if<InnerData>(&p)) return *d;
          throw InvalidInput("catalog entry is not inner data");
        });
  }

  ImplementingUnitary unitary(const std::string& arg) {
    return resolve<ImplementingUnitary>(
        arg, "unitary", "components", [](const Json& j) { return unitary_from_json(j); },
        [](const CatalogPayload&) -> ImplementingUnitary {
          throw InvalidInput("catalog entries are not unitaries");
        });
  }

 private:
  template <typename T, typename FromJson, typename FromCatalog>
  T resolve(const std::string& arg, const char* key, const char* marker, FromJson from_json,
            FromCatalog from_catalog) {
    std::string catalog_error;
    try {
      CatalogEntry e = catalog_entry(arg);
      T value = from_catalog(e.payload);
      provenance_.push_back(Json{{"name", e.name}, {"provenance", e.provenance}});
      return value;
    } catch (const InvalidInput& ex) {
      catalog_error = ex.what();
    }
    if (!std::filesystem::exists(arg)) {
      throw InvalidInput("'" + arg + "' is neither a file nor a catalog name (" + catalog_error + ")");
    }
    const Json raw = load_document(arg);
    if (raw.is_object()) {
      if (auto it = raw.find("provenance"); it != raw.end() && it->is_array()) {
        for (const auto& p : *it) provenance_.push_back(p);
      } else if (it != raw.end() && it->is_string() && raw.contains("name")) {
        provenance_.push_back(Json{{"name", raw["name"]}, {"provenance", *it}});
      }
    }
    const Json doc = unwrap(raw, key, marker);
    try {
      return from_json(doc);
    } catch (const InvalidInput& ex) {
      throw InvalidInput(arg + ": " + ex.what());
    }
  }

  Json& provenance_;
};

void pretty(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) {
    if (v.is_number_float()) {
      std::ostringstream s;
      s << std::setprecision(6) << v.get<double>();
      return s.str();
    }
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  auto flat = [](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v) {
      if (e.is_structured()) return false;
    }
    return true;
  };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (!v.is_structured()) {
        os << pad << it.key() << ": " << scalar(v) << "\n";
      } else if (flat(v)) {
        os << pad << it.key() << ": [";
        for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << scalar(v[k]);
        os << "]\n";
      } else {
        os << pad << it.key() << ":\n";
        pretty(v, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (!v.is_structured()) {
        os << pad << "- " << scalar(v) << "\n";
      } else if (flat(v)) {
        os << pad << "- [";
        for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << scalar(v[k]);
        os << "]\n";
      } else {
        os << pad << "-\n";
        pretty(v, os, indent + 2);
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

std::vector<std::int64_t> random_coboundary(std::size_t order, std::int64_t modulus,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(0, modulus - 1);
  std::vector<std::int64_t> values(order, 0);
  for (std::size_t x = 1; x < order; ++x) values[x] = dist(rng);
  return values;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-group cocycles, twisted group algebras and coactions on matrix algebras",
               "coact"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "json";
  app.add_option("--tol", tol, "numerical tolerance in (0, 1e-3]");
  auto* seed_opt = app.add_option("--seed", seed, "64-bit seed (default: $COACT_SEED or 0)");
  app.add_option("--out", out_path, "write the report to this file");
  app.add_option("--format", format, "json or pretty-text")
      ->check(CLI::IsMember({"json", "pretty-text"}));

  std::string arg1, arg2;
  std::string element;
  std::vector<std::size_t> orders;
  std::size_t number = 0;
  std::optional<std::int64_t> modulus;
  std::string target;
  std::vector<Element> embedding;
  std::string enum_group;
  std::optional<std::size_t> cap;

  auto* group_cmd = app.add_subcommand("group", "finite groups")->require_subcommand(1);
  auto* g_build = group_cmd->add_subcommand("build", "validate and print a group");
  g_build->add_option("group", arg1, "catalog name or JSON file")->required();
  auto* g_center = group_cmd->add_subcommand("center", "center of a group");
  g_center->add_option("group", arg1)->required();
  auto* g_centralizer = group_cmd->add_subcommand("centralizer", "centralizer of an element");
  g_centralizer->add_option("group", arg1)->required();
  g_centralizer->add_option("element", element, "label or index")->required();

  auto* cocycle_cmd = app.add_subcommand("cocycle", "2-cocycles")->require_subcommand(1);
  auto* c_verify = cocycle_cmd->add_subcommand("verify", "check the cocycle identity");
  c_verify->add_option("cocycle", arg1)->required();
  auto* c_normalize = cocycle_cmd->add_subcommand("normalize", "cohomologous normalized cocycle");
  c_normalize->add_option("cocycle", arg1)->required();
  auto* c_regular = cocycle_cmd->add_subcommand("regular", "omega-regular elements");
  c_regular->add_option("cocycle", arg1)->required();
  auto* c_coboundary = cocycle_cmd->add_subcommand("coboundary", "twist by a seeded coboundary");
  c_coboundary->add_option("cocycle", arg1)->required();
  c_coboundary->add_option("--modulus", modulus, "modulus of the coboundary values");
  auto* c_bichar = cocycle_cmd->add_subcommand("bicharacter", "bicharacter cocycle on H x H^");
  c_bichar->add_option("orders", orders, "cyclic orders d_1 ... d_k")->required()->delimiter(',');

  auto* rep_cmd = app.add_subcommand("rep", "projective representations")->require_subcommand(1);
  auto* r_regular = rep_cmd->add_subcommand("regular", "regular omega-representation");
  r_regular->add_option("cocycle", arg1)->required();
  auto* r_clock = rep_cmd->add_subcommand("clock-shift", "clock and shift unitaries");
  r_clock->add_option("p", number, "prime")->required();
  auto* r_order16 = rep_cmd->add_subcommand("order16", "order-16 unitaries with relation checks");
  r_order16->add_option("variant", number, "1 or 2")->required();
  auto* r_cocycle = rep_cmd->add_subcommand("cocycle-of", "cocycle of a projective representation");
  r_cocycle->add_option("rep", arg1)->required();
  auto* r_universal = rep_cmd->add_subcommand("universal", "linear independence of the U_x");
  r_universal->add_option("rep", arg1)->required();

  auto* twisted_cmd = app.add_subcommand("twisted", "twisted group algebras")->require_subcommand(1);
  std::vector<CLI::App*> twisted_subs;
  for (const char* name : {"dim", "blocks", "central-type"}) {
    auto* s = twisted_cmd->add_subcommand(name, std::string("C*_omega(G): ") + name);
    s->add_option("cocycle", arg1);
    s->add_option("--bicharacter", orders, "use the bicharacter cocycle for these orders")
        ->delimiter(',');
    twisted_subs.push_back(s);
  }

  auto* coaction_cmd = app.add_subcommand("coaction", "coactions on matrix algebras")->require_subcommand(1);
  std::map<std::string, CLI::App*> co;
  for (const char* name : {"verify", "spectrum", "fixed", "ergodic", "inner", "implement"}) {
    co[name] = coaction_cmd->add_subcommand(name, std::string("coaction ") + name);
    co[name]->add_option("coaction", arg1, "catalog name or JSON file")->required();
  }
  co["differ"] = coaction_cmd->add_subcommand("differ", "u with U' = U (1 (x) u)");
  co["differ"]->add_option("unitary", arg1)->required();
  co["differ"]->add_option("other", arg2)->required();
  co["cocycle-of-u"] = coaction_cmd->add_subcommand("cocycle-of-u", "defect of an implementing unitary");
  co["cocycle-of-u"]->add_option("unitary", arg1)->required();
  co["inflate"] = coaction_cmd->add_subcommand("inflate", "push forward along an embedding H -> G");
  co["inflate"]->add_option("coaction", arg1)->required();
  co["inflate"]->add_option("--group", target, "target group")->required();
  co["inflate"]->add_option("--embedding", embedding, "image of each element of H")
      ->required()
      ->delimiter(',');
  co["from-bundle"] = coaction_cmd->add_subcommand("from-bundle", "coaction of a Fell bundle");
  co["from-bundle"]->add_option("bundle", arg1)->required();
  co["from-inner"] = coaction_cmd->add_subcommand("from-inner", "coaction of inner data");
  co["from-inner"]->add_option("data", arg1)->required();
  co["ergodic-from-cocycle"] =
      coaction_cmd->add_subcommand("ergodic-from-cocycle", "ergodic coaction of a central-type cocycle");
  co["ergodic-from-cocycle"]->add_option("cocycle", arg1)->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "exhaustive searches")->require_subcommand(1);
  auto* e_inner = enumerate_cmd->add_subcommand("inner", "effective inner coactions on M_n");
  e_inner->add_option("--group", enum_group)->required();
  e_inner->add_option("--n", number)->required();
  e_inner->add_option("--cap", cap, "stop after this many tuples");

  auto* catalog_cmd = app.add_subcommand("catalog", "print a catalog entry");
  catalog_cmd->add_option("name", arg1)->required();

  std::vector<const char*> argv{"coact"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (!(tol > 0.0 && tol <= kMaxTol)) {
    err << "error: --tol must lie in (0, 1e-3]\n";
    return 2;
  }
  if (seed_opt->count() == 0) {
    if (const char* env = std::getenv("COACT_SEED")) {
      try {
        std::size_t used = 0;
        seed = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument("trailing text");
      } catch (const std::exception&) {
        err << "error: COACT_SEED is not a 64-bit integer\n";
        return 2;
      }
    }
  }
  const NumericOptions numeric{tol, seed};

  Json provenance = Json::array();
  Resolver resolve(provenance);
  std::string command;
  Outcome outcome;
  int failure_code = 0;
  try {
    if (group_cmd->parsed()) {
      const GroupPtr g = resolve.group(arg1);
      if (g_build->parsed()) {
        command = "group build";
        outcome.result = Json{{"order", g->order()},
                              {"abelian", g->is_abelian()},
                              {"cyclic", is_cyclic(*g)},
                              {"group", group_to_json(*g)}};
      } else if (g_center->parsed()) {
        command = "group center";
        const auto z = center(*g);
        outcome.result = Json{{"center", labels_of(*g, z)}, {"order", z.size()}};
      } else {
        command = "group centralizer";
        const Element x = g->element(element);
        const auto c = centralizer(*g, x);
        outcome.result = Json{{"element", g->label(x)}, {"centralizer", labels_of(*g, c)},
                              {"order", c.size()}};
      }
    } else if (cocycle_cmd->parsed()) {
      if (c_verify->parsed()) {
        command = "cocycle verify";
        const Cocycle omega = resolve.cocycle(arg1, false);
        const CocycleReport r = verify_cocycle(omega);
        outcome.result = Json{{"valid", r.valid}};
        if (!r.valid) {
          outcome.result["failure"] = r.failure;
          if (r.witness) {
            outcome.result["witness"] = labels_of(*omega.group(), {(*r.witness)[0], (*r.witness)[1],
                                                                   (*r.witness)[2]});
          }
        }
        outcome.passed = r.valid;
      } else if (c_normalize->parsed()) {
        command = "cocycle normalize";
        const Cocycle omega = resolve.cocycle(arg1);
        const Normalization nz = normalize(omega);
        outcome.result = Json{{"input_normalized", is_normalized(omega)},
                              {"coboundary", coboundary_to_json(nz.coboundary)},
                              {"cocycle", cocycle_to_json(nz.cocycle)}};
      } else if (c_regular->parsed()) {
        command = "cocycle regular";
        const Cocycle omega = resolve.cocycle(arg1);
        const auto reg = regular_elements(omega);
        outcome.result = Json{{"regular", labels_of(*omega.group(), reg)}, {"count", reg.size()},
                              {"only_identity", reg.size() == 1}};
      } else if (c_coboundary->parsed()) {
        command = "cocycle coboundary";
        const Cocycle omega = resolve.cocycle(arg1);
        const std::int64_t m = modulus.value_or(omega.modulus());
        if (m <= 0) throw InvalidInput("--modulus must be positive");
        const CoboundaryData cob(omega.group(), m, random_coboundary(omega.group()->order(), m, seed));
        outcome.result = Json{{"coboundary", coboundary_to_json(cob)},
                              {"cocycle", cocycle_to_json(apply_coboundary(omega, cob))}};
      } else {
        command = "cocycle bicharacter";
        outcome.result = Json{{"orders", orders}, {"cocycle", cocycle_to_json(bicharacter_cocycle(orders))}};
      }
    } else if (rep_cmd->parsed()) {
      if (r_regular->parsed()) {
        command = "rep regular";
        outcome.result = Json{{"rep", projrep_to_json(regular_omega_rep(resolve.cocycle(arg1)))}};
      } else if (r_clock->parsed()) {
        command = "rep clock-shift";
        const ProjRep u = clock_shift_rep(number);
        outcome.result = Json{{"p", number}, {"universality_margin", universality_margin(u)},
                              {"rep", projrep_to_json(u)}};
      } else if (r_order16->parsed()) {
        command = "rep order16";
        if (number != 1 && number != 2) throw InvalidInput("variant must be 1 or 2");
        const int v = static_cast<int>(number);
        Json rel = Json::array();
        for (const auto& r : order16_relations(v)) {
          const bool ok = r.residual <= 1e-12;
          outcome.passed = outcome.passed && ok;
          rel.push_back(Json{{"relation", r.relation}, {"residual", r.residual}, {"holds", ok}});
        }
        outcome.result = Json{{"variant", v}, {"relations", rel}};
        if (outcome.passed) outcome.result["rep"] = projrep_to_json(order16_rep(v));
      } else if (r_cocycle->parsed()) {
        command = "rep cocycle-of";
        outcome.result = Json{{"cocycle", cocycle_to_json(cocycle_of_projrep(resolve.rep(arg1)))}};
      } else {
        command = "rep universal";
        const ProjRep u = resolve.rep(arg1);
        outcome.result = Json{{"universal", is_universal(u, tol)},
                              {"universality_margin", universality_margin(u)}};
      }
    } else if (twisted_cmd->parsed()) {
      if (arg1.empty() == orders.empty()) {
        throw InvalidInput("give exactly one of a cocycle argument or --bicharacter");
      }
      const Cocycle omega = orders.empty() ? resolve.cocycle(arg1) : bicharacter_cocycle(orders);
      if (twisted_subs[0]->parsed()) {
        command = "twisted dim";
        const StarAlgebra alg = twisted_algebra(omega, numeric);
        outcome.result = Json{{"dim", alg.dim()}, {"order", omega.group()->order()},
                              {"dim_equals_order", alg.dim() == omega.group()->order()}};
      } else if (twisted_subs[1]->parsed()) {
        command = "twisted blocks";
        const StarAlgebra alg = twisted_algebra(omega, numeric);
        outcome.result = Json{{"dim", alg.dim()}, {"simple", alg.is_simple()},
                              {"blocks", blocks_json(alg)}};
      } else {
        command = "twisted central-type";
        const CentralTypeResult ct = central_type(omega, numeric);
        outcome.result = Json{{"central_type", ct.central_type}, {"order", omega.group()->order()},
                              {"blocks", blocks_json(ct.algebra)}};
        if (ct.central_type) outcome.result["n"] = ct.degree;
      }
    } else if (coaction_cmd->parsed()) {
      if (co["verify"]->parsed()) {
        command = "coaction verify";
        const CoactionReport r = verify_coaction(resolve.coaction(arg1), tol);
        outcome.result = Json{{"ok", r.ok}, {"max_residual", r.max_residual}};
        if (!r.ok) {
          outcome.result["failed_invariant"] = r.failed_invariant;
          outcome.result["witness"] = r.witness;
        }
        outcome.passed = r.ok;
      } else if (co["spectrum"]->parsed()) {
        command = "coaction spectrum";
        const Coaction delta = resolve.coaction(arg1);
        const FiniteGroup& g = *delta.group();
        Json dims = Json::object();
        for (Element x = 0; x < g.order(); ++x) dims[g.label(x)] = spectral_dim(delta, x);
        outcome.result = Json{{"spectrum", labels_of(g, spectrum(delta))},
                              {"effective", is_effective(delta)},
                              {"subgroup", spectrum_is_subgroup(delta)},
                              {"dims", dims}};
      } else if (co["fixed"]->parsed()) {
        command = "coaction fixed";
        const StarAlgebra f = fixed_algebra(resolve.coaction(arg1), numeric);
        outcome.result = Json{{"dim", f.dim()}, {"blocks", blocks_json(f)},
                              {"seed_used", f.options().seed}};
      } else if (co["ergodic"]->parsed()) {
        command = "coaction ergodic";
        const Coaction delta = resolve.coaction(arg1);
        const bool ergodic = is_ergodic(delta), effective = is_effective(delta);
        outcome.result = Json{{"ergodic", ergodic}, {"effective", effective},
                              {"order", delta.group()->order()}, {"n", delta.n()}};
        if (ergodic && effective) {
          outcome.result["order_is_n_squared"] = delta.group()->order() == delta.n() * delta.n();
          outcome.result["group_cyclic"] = is_cyclic(*delta.group());
          outcome.result["spanning_unitaries"] = projrep_to_json(spanning_unitaries(delta, tol));
        }
      } else if (co["inner"]->parsed()) {
        command = "coaction inner";
        const InnerTest t = is_inner(resolve.coaction(arg1), numeric);
        outcome.result = Json{{"inner", t.inner}, {"fixed_blocks", blocks_json(t.fixed)}};
        outcome.result["witness"] = t.witness ? inner_data_to_json(*t.witness) : Json(nullptr);
      } else if (co["implement"]->parsed()) {
        command = "coaction implement";
        const Coaction delta = resolve.coaction(arg1);
        const ImplementingUnitary u = implement_unitary(delta, numeric);
        outcome.result = Json{{"residual", implementation_residual(delta, u.value())},
                              {"unitary", unitary_to_json(u)}};
      } else if (co["differ"]->parsed()) {
        command = "coaction differ";
        const GroupAlgebraElement u = unitaries_differ_by(resolve.unitary(arg1), resolve.unitary(arg2));
        outcome.result = Json{{"unitary", u.is_unitary(1e-8)}, {"u", element_to_json(u)}};
      } else if (co["cocycle-of-u"]->parsed()) {
        command = "coaction cocycle-of-u";
        const UnitaryCocycle c = cocycle_of_unitary(resolve.unitary(arg1));
        outcome.result = Json{{"residual", c.residual}, {"trivial", c.trivial},
                              {"unitary", c.u.is_unitary(1e-8)}, {"u", element_to_json(c.u)}};
      } else if (co["inflate"]->parsed()) {
        command = "coaction inflate";
        const Coaction delta = inflate(resolve.coaction(arg1), resolve.group(target), embedding);
        outcome.result = Json{{"coaction", coaction_to_json(delta)}};
      } else if (co["from-bundle"]->parsed()) {
        command = "coaction from-bundle";
        outcome.result = Json{{"coaction", coaction_to_json(from_fell_bundle(resolve.bundle(arg1, tol), tol))}};
      } else if (co["from-inner"]->parsed()) {
        command = "coaction from-inner";
        const InnerCoaction ic = inner_from_data(resolve.inner_data(arg1));
        outcome.result = Json{{"coaction", coaction_to_json(ic.coaction)},
                              {"unitary", unitary_to_json(ic.unitary)}};
      } else {
        command = "coaction ergodic-from-cocycle";
        const ErgodicConstruction e = ergodic_from_cocycle(resolve.cocycle(arg1), numeric);
        outcome.result = Json{{"coaction", coaction_to_json(e.coaction)}, {"rep", projrep_to_json(e.rep)}};
      }
    } else if (enumerate_cmd->parsed()) {
      command = "enumerate inner";
      const GroupPtr g = resolve.group(enum_group);
      const auto tuples = enumerate_effective_inner(*g, number, cap);
      Json list = Json::array();
      for (const auto& t : tuples) list.push_back(labels_of(*g, t));
      outcome.result = Json{{"order", g->order()},
                            {"n", number},
                            {"count", tuples.size()},
                            {"capped", cap.has_value() && tuples.size() >= *cap},
                            {"convention", "last point fixed at e; distinct orderings counted separately"},
                            {"tuples", list}};
    } else if (catalog_cmd->parsed()) {
      command = "catalog";
      const CatalogEntry e = catalog_entry(arg1);
      provenance.push_back(Json{{"name", e.name}, {"provenance", e.provenance}});
      outcome.result = catalog_entry_to_json(e);
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    failure_code = 1;
    outcome.passed = false;
    outcome.result = Json{{"error", e.what()}};
  }

  Json report{{"tool", "coact"},
              {"version", kToolVersion},
              {"command", command},
              {"seed", seed},
              {"tolerance", tol},
              {"provenance", provenance},
              {"status", outcome.passed ? "pass" : "fail"},
              {"result", outcome.result}};
  std::ostringstream text;
  if (format == "json") {
    text << report.dump(2) << "\n";
  } else {
    pretty(report, text, 0);
  }
  if (out_path.empty()) {
    out << text.str();
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return 2;
    }
    file << text.str();
  }
  if (failure_code) return failure_code;
  return outcome.passed ? 0 : 1;
}

}  // namespace coact
