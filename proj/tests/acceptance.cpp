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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "coact/catalog.hpp"
#include "coact/cli.hpp"
#include "coact/coaction.hpp"
#include "coact/errors.hpp"
#include "coact/json_io.hpp"
#include "coact/twisted.hpp"
#include "support.hpp"

namespace {

using namespace coact;

class Check {
 public:
  void expect(bool cond, const std::string& what) {
    ++count_;
    if (!cond && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  std::size_t count() const { return count_; }

 private:
  std::string failure_;
  std::size_t count_ = 0;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

Json cli_json(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return Json::parse(out.str());
}

// Spectrum closed under product and inverse, checked from the element list.
bool closed(const FiniteGroup& g, const std::vector<Element>& sp) {
  const std::set<Element> s(sp.begin(), sp.end());
  for (auto x : s) {
    if (!s.count(g.inv(x))) return false;
    for (auto y : s)
      if (!s.count(g.mul(x, y))) return false;
  }
  return true;
}

// ---------------------------------------------------------------- shared data

struct InnerCase {
  std::string label;
  InnerData data;
  InnerCoaction inner;
};

std::vector<InnerCase> inner_cases() {
  const std::vector<std::pair<std::string, GroupPtr>> groups = {
      {"s3", symmetric_group(3)},
      {"z4", build_cyclic(4)},
      {"klein4", direct_product(*build_cyclic(2), *build_cyclic(2))},
      {"d4", dihedral_group(4)}};
  std::vector<InnerCase> out;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::mt19937_64 rng(1000 + seed);
    const auto& [name, g] = groups[seed % groups.size()];
    const std::size_t n = 1 + seed % 5;
    InnerData d = testing::random_inner_data(g, n, rng);
    out.push_back({name + " n=" + std::to_string(n) + " seed=" + std::to_string(seed), d,
                   inner_from_data(d)});
  }
  return out;
}

std::vector<std::pair<std::string, ErgodicConstruction>> ergodic_catalog() {
  return {{"klein4-on-m2", klein_four_on_m2()},  {"zpzp-on-m2", zpzp_on_mp(2)},
          {"zpzp-on-m3", zpzp_on_mp(3)},         {"zpzp-on-m5", zpzp_on_mp(5)},
          {"order16-1-on-m4", order16_on_m4(1)}, {"order16-2-on-m4", order16_on_m4(2)}};
}

// ---------------------------------------------------------------- criteria

std::string criterion1(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  int code3 = 0, code4 = 0;
  const Json r3 = cli_json({"enumerate", "inner", "--group", "s3", "--n", "3"}, code3);
  const Json r4 = cli_json({"enumerate", "inner", "--group", "s3", "--n", "4"}, code4);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(code3 == 0 && code4 == 0, "enumerate exited nonzero");
  c.expect(r3["result"]["count"] == 0, "n=3 returned tuples");
  const Json& tuples = r4["result"]["tuples"];
  c.expect(!tuples.empty(), "n=4 returned no tuples");
  c.expect(std::find(tuples.begin(), tuples.end(), Json::parse(R"(["a","b","ab","e"])")) !=
               tuples.end(),
           "(a, b, ab, e) missing from n=4 list");
  c.expect(secs < 1.0, "enumeration took " + fmt(secs) + " s");
  auto s3 = symmetric_group(3);
  for (const auto& t : tuples) {
    std::vector<Element> pts;
    for (const auto& lab : t) pts.push_back(s3->element(lab.get<std::string>()));
    const InnerData d{s3, CMatrix::Identity(4, 4), pts};
    c.expect(spectrum(inner_from_data(d).coaction).size() == 6, "tuple with spectrum != S_3");
  }
  return "n=3: 0 tuples; n=4: " + std::to_string(tuples.size()) +
         " tuples incl. (a,b,ab,e), all effective; " + fmt(secs) + " s";
}

std::string criterion2(Check& c) {
  std::string margins;
  for (std::size_t p : {2, 3, 5}) {
    const ProjRep u = clock_shift_rep(p);
    const double m = universality_margin(u);
    c.expect(testing::span_dim(u.images()) == p * p, "rank != p^2 for p=" + std::to_string(p));
    c.expect(m > 1e-6, "singular-value margin too small for p=" + std::to_string(p));
    const Cocycle w = cocycle_of_projrep(u);
    c.expect(verify_cocycle(w).valid, "extracted cocycle invalid");
    c.expect(testing::cocycle_identity_holds(w), "extracted cocycle fails direct check");
    const StarAlgebra a = twisted_algebra(w);
    c.expect(a.is_simple() && a.blocks().front().size == p && a.blocks().front().multiplicity == p,
             "twisted algebra not a single (p, p) block for p=" + std::to_string(p));
    margins += (margins.empty() ? "" : ", ") + ("p=" + std::to_string(p) + " margin " + fmt(m));
  }
  return margins + "; cocycles exact; blocks (p,p)";
}

std::string criterion3(Check& c) {
  double worst = 0;
  for (int v : {1, 2}) {
    for (const auto& r : order16_relations(v)) worst = std::max(worst, r.residual);
    const ProjRep u = order16_rep(v);
    c.expect(testing::span_dim(u.images()) == 16, "16 unitaries not independent");
    c.expect(is_universal(u), "is_universal false");
    const auto ct = central_type(cocycle_of_projrep(u));
    c.expect(ct.central_type && ct.degree == 4 && ct.algebra.blocks().size() == 1 &&
                 ct.algebra.blocks()[0].size == 4 && ct.algebra.blocks()[0].multiplicity == 4,
             "variant " + std::to_string(v) + " not central type with block (4,4)");
    const auto e = order16_on_m4(v);
    c.expect(is_ergodic(e.coaction) && is_effective(e.coaction),
             "variant " + std::to_string(v) + " coaction not ergodic and effective");
  }
  c.expect(worst <= 1e-12, "relation residual " + fmt(worst));
  return "max relation residual " + fmt(worst) + "; both variants central type (4,4), ergodic, effective";
}

std::string criterion4(Check& c) {
  std::size_t cases = 0, central = 0;
  std::uint64_t seed = 4000;
  for (const auto& name : catalog_cocycle_names()) {
    const Cocycle base = std::get<Cocycle>(catalog_entry(name).payload);
    std::vector<Cocycle> family{base};
    std::mt19937_64 rng(seed++);
    for (int k = 0; k < 20; ++k) {
      std::uniform_int_distribution<std::int64_t> d(0, 11);
      std::vector<std::int64_t> m(base.group()->order());
      for (std::size_t i = 1; i < m.size(); ++i) m[i] = d(rng);
      family.push_back(apply_coboundary(base, CoboundaryData(base.group(), 12, m)));
    }
    for (const auto& w : family) {
      ++cases;
      const auto ct = central_type(w);
      const auto reg = regular_elements(w);
      const bool only_e = reg == std::vector<Element>{kIdentity};
      c.expect(ct.central_type == only_e, name + ": central type and regularity disagree");
      c.expect(reg == testing::regular_by_definition(w), name + ": regular set differs from definition");
      c.expect((testing::twisted_center_dim(w) == 1) == ct.central_type,
               name + ": centre dimension disagrees with central_type");
      c.expect(ct.algebra.dim() == w.group()->order(), name + ": dim C*_w(G) != |G|");
      c.expect(testing::span_dim(testing::left_twisted_operators(w)) == w.group()->order(),
               name + ": twisted operators not independent");
      central += ct.central_type;
    }
  }
  return std::to_string(cases) + " cocycles (" + std::to_string(catalog_cocycle_names().size()) +
         " catalog x 21), " + std::to_string(central) + " central type; dim = |G| in all";
}

std::string criterion5(Check& c, const std::vector<InnerCase>& cases) {
  const double tol = 1e-9;
  double worst_regen = 0, worst_round = 0;
  for (const auto& k : cases) {
    const Coaction& delta = k.inner.coaction;
    const FiniteGroup& g = *k.data.group;
    c.expect(verify_coaction(delta, tol).ok, k.label + ": verify_coaction failed");
    const FellBundle b = spectral_subspaces(delta, tol);
    c.expect(verify_fell_bundle(b, tol).ok, k.label + ": Fell bundle invariants");
    const double round = from_fell_bundle(b, tol).distance(delta);
    worst_round = std::max(worst_round, round);
    c.expect(round <= 10 * tol, k.label + ": from_fell_bundle deviation " + fmt(round));
    const InnerTest t = is_inner(delta, {tol, 0});
    c.expect(t.inner && t.witness.has_value(), k.label + ": is_inner false");
    if (t.witness) {
      const double regen = inner_from_data(*t.witness).coaction.distance(delta);
      worst_regen = std::max(worst_regen, regen);
      c.expect(regen <= 1e-9, k.label + ": witness regenerates with deviation " + fmt(regen));
    }
    for (std::size_t i = 0; i < k.data.n(); ++i)
      for (std::size_t j = 0; j < k.data.n(); ++j) {
        const CMatrix eij = k.data.basis.col(static_cast<Eigen::Index>(i)) *
                            k.data.basis.col(static_cast<Eigen::Index>(j)).adjoint();
        c.expect(in_spectral_subspace(delta, g.div(k.data.points[i], k.data.points[j]), eij, tol),
                 k.label + ": e_ij outside A_{x_i x_j^-1}");
      }
  }
  return std::to_string(cases.size()) + " inner coactions; round trip " + fmt(worst_round) +
         ", witness regeneration " + fmt(worst_regen);
}

struct Implemented {
  std::string label;
  ImplementingUnitary u;
};

std::string criterion6(Check& c, const std::vector<InnerCase>& cases,
                       std::vector<Implemented>& implemented) {
  std::vector<std::pair<std::string, Coaction>> all;
  for (const auto& k : cases) all.emplace_back(k.label, k.inner.coaction);
  for (auto& [name, e] : ergodic_catalog()) all.emplace_back(name, e.coaction);
  double worst = 0, worst_u = 0;
  std::uint64_t seed = 6000;
  for (const auto& [label, delta] : all) {
    const auto u1 = implement_unitary(delta, {1e-9, seed++});
    const auto u2 = implement_unitary(delta, {1e-9, seed++});
    const double r = std::max(implementation_residual(delta, u1.value()),
                              implementation_residual(delta, u2.value()));
    worst = std::max(worst, r);
    c.expect(r <= 1e-8, label + ": implementation residual " + fmt(r));
    try {
      const auto f = unitaries_differ_by(u1, u2, 1e-8);
      const auto ff = f.adjoint() * f;
      worst_u = std::max(worst_u, ff.distance(GroupAlgebraElement::identity(delta.group())));
      c.expect(f.is_unitary(1e-8), label + ": u not unitary");
    } catch (const PreconditionError& e) {
      c.expect(false, label + ": " + e.what());
    }
    implemented.push_back({label, u1});
  }
  return std::to_string(all.size()) + " coactions x 2 seeds; max residual " + fmt(worst) +
         "; right factors unitary (|u*u - 1| <= " + fmt(worst_u) + ")";
}

std::string criterion7(Check& c) {
  std::vector<std::pair<std::string, Coaction>> all;
  for (auto& [name, e] : ergodic_catalog()) all.emplace_back(name, e.coaction);
  for (auto orders : std::vector<std::vector<std::size_t>>{{2}, {3}, {2, 2}, {4}}) {
    std::string name = "bicharacter";
    for (auto d : orders) name += "-" + std::to_string(d);
    all.emplace_back(name, ergodic_from_cocycle(bicharacter_cocycle(orders)).coaction);
  }
  for (int v : {1, 2}) {
    all.emplace_back("order16-" + std::to_string(v) + " via cocycle",
                     ergodic_from_cocycle(cocycle_of_projrep(order16_rep(v)), {1e-9, 5}).coaction);
  }
  for (const auto& [name, delta] : all) {
    const FiniteGroup& g = *delta.group();
    c.expect(is_ergodic(delta) && is_effective(delta), name + ": not ergodic and effective");
    c.expect(g.order() == delta.n() * delta.n(), name + ": |G| != n^2");
    c.expect(!is_cyclic(g), name + ": cyclic group");
    const FellBundle b = spectral_subspaces(delta);
    for (const auto& f : b.fibres()) c.expect(f.size() == 1, name + ": fibre not one-dimensional");
    const ProjRep u = spanning_unitaries(delta);
    for (Element x = 0; x < g.order(); ++x) {
      c.expect(is_unitary(u.image(x), 1e-9), name + ": spanning element not unitary");
      c.expect(in_spectral_subspace(delta, x, u.image(x)), name + ": U_x outside A_x");
    }
    c.expect(closed(g, spectrum(delta)), name + ": spectrum not closed");
    const auto table = composition_table(action_from_ergodic(delta));
    for (Element x = 0; x < g.order(); ++x)
      for (Element y = 0; y < g.order(); ++y)
        c.expect(table[x][y].has_value() && *table[x][y] == g.mul(x, y),
                 name + ": Ad U composition table differs from Cayley table");
  }
  return std::to_string(all.size()) + " ergodic effective coactions; |G| = n^2, noncyclic, " +
         "1-dim fibres, closed spectra, composition tables match";
}

std::string criterion8(Check& c, const std::vector<InnerCase>& cases,
                       const std::vector<Implemented>& implemented) {
  for (const auto& k : cases) {
    const auto r = cocycle_of_unitary(k.inner.unitary);
    c.expect(r.trivial, k.label + ": inner-data defect is not 1");
  }
  double worst = 0;
  for (const auto& [label, u] : implemented) {
    const auto r = cocycle_of_unitary(u);
    worst = std::max(worst, r.residual);
    c.expect(r.residual <= 1e-8, label + ": identity residual " + fmt(r.residual));
    c.expect(r.u.is_unitary(1e-8), label + ": defect not unitary");
  }
  return std::to_string(cases.size()) + " inner-data defects exactly 1; " +
         std::to_string(implemented.size()) + " implemented unitaries, max residual " + fmt(worst);
}

std::string criterion9(Check& c) {
  std::vector<std::pair<std::string, Coaction>> family;
  const std::vector<GroupPtr> groups = {symmetric_group(3), build_cyclic(4),
                                        direct_product(*build_cyclic(2), *build_cyclic(2)),
                                        dihedral_group(4)};
  std::mt19937_64 rng(9000);
  for (int i = 0; i < 12; ++i) {
    const auto& g = groups[i % groups.size()];
    const std::size_t n = 2 + i % 3;
    family.emplace_back("inner " + std::to_string(i),
                        inner_from_data(testing::random_inner_data(g, n, rng)).coaction);
  }
  family.emplace_back("klein4-on-m2", klein_four_on_m2().coaction);
  family.emplace_back("zpzp-on-m3", zpzp_on_mp(3).coaction);
  family.emplace_back("order16-1-on-m4", order16_on_m4(1).coaction);
  family.emplace_back("order16-2-on-m4", order16_on_m4(2).coaction);
  family.emplace_back("bicharacter-2,2", ergodic_from_cocycle(bicharacter_cocycle({2, 2})).coaction);
  family.emplace_back("m3-z4", example_m3(build_cyclic(4), 1).coaction);
  // ergodic on M_2 tensored with the trivial coaction on M_2
  {
    const ProjRep u = clock_shift_rep(2);
    std::vector<std::vector<CMatrix>> fibres;
    for (const auto& m : u.images()) {
      std::vector<CMatrix> f;
      for (const auto& e : matrix_units(2)) f.push_back(kron(m, e));
      fibres.push_back(f);
    }
    family.emplace_back("klein4 (x) trivial M_2",
                        from_fell_bundle(FellBundle(u.group(), 4, fibres)));
  }
  // inflations
  {
    const auto k = klein_four_on_m2().coaction;
    const auto k8 = direct_product(*k.group(), *build_cyclic(2));
    family.emplace_back("klein4-on-m2 inflated", inflate(k, k8, {0, 2, 4, 6}));
    const auto z2 = build_cyclic(2);
    const auto inner = inner_from_data(testing::random_inner_data(z2, 3, rng)).coaction;
    family.emplace_back("inner z2 inflated to d4", inflate(inner, dihedral_group(4), {0, 4}));
    const auto inner4 = inner_from_data(testing::random_inner_data(build_cyclic(4), 4, rng)).coaction;
    auto z4xz2 = direct_product(*build_cyclic(4), *build_cyclic(2));
    family.emplace_back("inner z4 inflated", inflate(inner4, z4xz2, {0, 2, 4, 6}));
  }
  // random conjugates of everything so far
  const std::size_t base = family.size();
  for (std::size_t i = 0; i < base; ++i) {
    const auto& [name, d] = family[i];
    family.emplace_back(name + " conjugated", testing::conjugated(d, testing::haar_unitary(d.n(), rng)));
  }
  std::size_t inner = 0, not_inner = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& [name, d] = family[i];
    c.expect(d.n() <= 4, name + ": n > 4");
    c.expect(verify_coaction(d).ok, name + ": not a coaction");
    const bool lib = is_inner(d).inner;
    const bool oracle = testing::brute_force_inner(d, 777 + i);
    c.expect(lib == oracle, name + ": is_inner " + (lib ? "true" : "false") + ", oracle " +
                                (oracle ? "true" : "false"));
    (oracle ? inner : not_inner) += 1;
  }
  c.expect(inner > 0 && not_inner > 0, "family does not mix inner and non-inner cases");
  return std::to_string(family.size()) + " coactions (" + std::to_string(inner) + " inner, " +
         std::to_string(not_inner) + " not); 100% agreement with brute-force search";
}

}  // namespace

int main() {
  int failures = 0;
  std::vector<InnerCase> cases;
  std::vector<Implemented> implemented;
  const std::vector<std::pair<int, std::function<std::string(Check&)>>> criteria = {
      {1, criterion1},
      {2, criterion2},
      {3, criterion3},
      {4, criterion4},
      {5, [&](Check& c) {
         cases = inner_cases();
         return criterion5(c, cases);
       }},
      {6, [&](Check& c) { return criterion6(c, cases, implemented); }},
      {7, criterion7},
      {8, [&](Check& c) { return criterion8(c, cases, implemented); }},
      {9, criterion9},
  };
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [k, fn] : criteria) {
    Check c;
    std::string summary;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      summary = fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.ok()) {
      std::cout << "PASS criterion " << k << ": " << summary << " [" << c.count() << " checks, "
                << fmt(secs) << " s]\n";
    } else {
      ++failures;
      std::cout << "FAIL criterion " << k << ": " << c.failure() << " [" << fmt(secs) << " s]\n";
    }
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << " in " << fmt(total) << " s\n";
  return failures == 0 ? 0 : 1;
}
