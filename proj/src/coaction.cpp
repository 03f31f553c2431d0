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

#include "coact/coaction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "coact/errors.hpp"
#include "coact/twisted.hpp"

namespace coact {

namespace {

constexpr double kUnitaryTol = 1e-8;
constexpr double kReadTol = 1e-6;
constexpr int kMaxAttempts = 8;

std::vector<std::size_t> resolve_blocks(std::size_t n, std::vector<std::size_t> blocks) {
  if (blocks.empty()) return {n};
  std::size_t total = 0;
  for (auto b : blocks) {
    if (b == 0) throw InvalidInput("blocks: zero-sized block");
    total += b;
  }
  if (total != n) throw InvalidInput("blocks: sizes do not sum to n");
  return blocks;
}

std::vector<std::pair<std::size_t, std::size_t>> block_units(
    const std::vector<std::size_t>& blocks) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  std::size_t offset = 0;
  for (auto b : blocks) {
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < b; ++j) units.emplace_back(offset + i, offset + j);
    }
    offset += b;
  }
  return units;
}

bool in_blocks(const std::vector<std::size_t>& blocks, const CMatrix& a, double tol) {
  const auto n = static_cast<std::size_t>(a.rows());
  std::vector<std::size_t> owner(n);
  std::size_t offset = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (std::size_t i = 0; i < blocks[k]; ++i) owner[offset + i] = k;
    offset += blocks[k];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (owner[i] != owner[j] && std::abs(a(i, j)) > tol) return false;
    }
  }
  return true;
}

std::string unit_name(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "e_" << i << j;
  if (i > 9 || j > 9) {
    os.str("");
    os << "e_(" << i << "," << j << ")";
  }
  return os.str();
}

struct Tracker {
  CoactionReport report;
  double limit;
  bool check(double residual, const std::string& invariant, const std::string& witness) {
    report.max_residual = std::max(report.max_residual, residual);
    if (residual > limit || !std::isfinite(residual)) {
      if (report.ok) {
        report.ok = false;
        report.failed_invariant = invariant;
        report.witness = witness;
      }
      return false;
    }
    return true;
  }
};

std::size_t rank_of_projection(const CMatrix& e) {
  const double t = e.trace().real();
  return t < 0.5 ? 0 : static_cast<std::size_t>(std::llround(t));
}

}  // namespace

Coaction::Coaction(GroupPtr group, std::size_t n, std::vector<CMatrix> maps,
                   std::vector<std::size_t> blocks)
    : group_(std::move(group)), n_(n), maps_(std::move(maps)),
      blocks_(resolve_blocks(n, std::move(blocks))), units_(block_units(blocks_)) {
  if (!group_) throw InvalidInput("coaction: missing group");
  if (n_ == 0) throw InvalidInput("coaction: n must be positive");
  if (maps_.size() != group_->order()) {
    throw InvalidInput("coaction: expected one map per group element");
  }
  const auto m = static_cast<Eigen::Index>(n_ * n_);
  for (const auto& e : maps_) {
    if (e.rows() != m || e.cols() != m) throw InvalidInput("coaction: map has wrong shape");
    if (!all_finite(e)) throw InvalidInput("coaction: non-finite entry");
  }
}

Coaction Coaction::trivial(GroupPtr group, std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n * n);
  std::vector<CMatrix> maps(group->order(), CMatrix::Zero(m, m));
  maps[kIdentity] = CMatrix::Identity(m, m);
  return Coaction(std::move(group), n, std::move(maps));
}

CMatrix Coaction::apply(Element x, const CMatrix& a) const {
  if (x >= maps_.size()) throw InvalidInput("coaction: element out of range");
  if (static_cast<std::size_t>(a.rows()) != n_ || static_cast<std::size_t>(a.cols()) != n_) {
    throw InvalidInput("coaction: argument has wrong shape");
  }
  return unvec_rm(maps_[x] * vec_rm(a), n_);
}

CMatrix Coaction::algebra_projection() const {
  const auto m = static_cast<Eigen::Index>(n_ * n_);
  CMatrix p = CMatrix::Zero(m, m);
  for (auto [i, j] : units_) {
    const auto k = static_cast<Eigen::Index>(i * n_ + j);
    p(k, k) = 1.0;
  }
  return p;
}

double Coaction::distance(const Coaction& other) const {
  if (!(*group_ == *other.group_) || n_ != other.n_) {
    throw InvalidInput("coaction: comparing coactions of different shape");
  }
  double d = 0.0;
  for (std::size_t x = 0; x < maps_.size(); ++x) d = std::max(d, max_abs(maps_[x] - other.maps_[x]));
  return d;
}

CoactionReport verify_coaction(const Coaction& delta, double tol) {
  const FiniteGroup& g = *delta.group();
  const std::size_t n = delta.n();
  Tracker t{{}, 10.0 * tol};
  const CMatrix p = delta.algebra_projection();

  for (Element x = 0; x < g.order(); ++x) {
    const CMatrix& e = delta.map(x);
    t.check(std::max(max_abs(e - e * p), max_abs(e - p * e)), "support in A",
            "x=" + g.label(x));
  }
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      CMatrix expect = x == y ? delta.map(x) : CMatrix::Zero(p.rows(), p.cols());
      t.check(max_abs(delta.map(x) * delta.map(y) - expect), "E_x E_y = delta_xy E_x",
              "x=" + g.label(x) + " y=" + g.label(y));
    }
  }
  CMatrix sum = CMatrix::Zero(p.rows(), p.cols());
  for (const auto& e : delta.maps()) sum += e;
  {
    Eigen::Index r = 0, c = 0;
    (sum - p).cwiseAbs().maxCoeff(&r, &c);
    t.check(max_abs(sum - p), "sum E_x = id",
            "entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
  }

  const auto& units = delta.algebra_units();
  std::vector<std::vector<CMatrix>> images(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    images[x].reserve(units.size());
    for (auto [i, j] : units) images[x].push_back(delta.apply(x, matrix_unit(n, i, j)));
  }
  auto unit_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < units.size(); ++k) {
      if (units[k].first == i && units[k].second == j) return k;
    }
    return units.size();
  };
  for (Element x = 0; x < g.order(); ++x) {
    for (std::size_t k = 0; k < units.size(); ++k) {
      auto [i, j] = units[k];
      const std::size_t kt = unit_index(j, i);
      t.check(max_abs(images[x][kt] - images[g.inv(x)][k].adjoint()),
              "E_x(a^*) = E_{x^-1}(a)^*", "x=" + g.label(x) + " a=" + unit_name(i, j));
    }
  }
  for (std::size_t k1 = 0; k1 < units.size(); ++k1) {
    for (std::size_t k2 = 0; k2 < units.size(); ++k2) {
      auto [i, j] = units[k1];
      auto [k, l] = units[k2];
      std::vector<CMatrix> rhs(g.order(), CMatrix::Zero(static_cast<Eigen::Index>(n),
                                                        static_cast<Eigen::Index>(n)));
      for (Element x = 0; x < g.order(); ++x) {
        for (Element y = 0; y < g.order(); ++y) rhs[g.mul(x, y)] += images[x][k1] * images[y][k2];
      }
      const CMatrix prod = j == k ? matrix_unit(n, i, l)
                                  : CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      for (Element z = 0; z < g.order(); ++z) {
        t.check(max_abs(delta.apply(z, prod) - rhs[z]), "E_z(ab) = sum E_x(a) E_y(b)",
                "z=" + g.label(z) + " a=" + unit_name(i, j) + " b=" + unit_name(k, l));
      }
    }
  }
  return t.report;
}

FellBundle::FellBundle(GroupPtr group, std::size_t n, std::vector<std::vector<CMatrix>> subspaces,
                       std::vector<std::size_t> blocks, double tol)
    : group_(std::move(group)), n_(n), blocks_(resolve_blocks(n, std::move(blocks))) {
  if (!group_) throw InvalidInput("fell bundle: missing group");
  if (subspaces.size() != group_->order()) {
    throw InvalidInput("fell bundle: expected one subspace per group element");
  }
  subspaces_.reserve(subspaces.size());
  for (const auto& s : subspaces) {
    for (const auto& a : s) {
      if (static_cast<std::size_t>(a.rows()) != n_ || static_cast<std::size_t>(a.cols()) != n_) {
        throw InvalidInput("fell bundle: basis element has wrong shape");
      }
      if (!all_finite(a)) throw InvalidInput("fell bundle: non-finite entry");
    }
    subspaces_.push_back(s.empty() ? s : orthonormal_span(s, tol));
  }
}

std::size_t FellBundle::total_dim() const {
  std::size_t d = 0;
  for (const auto& s : subspaces_) d += s.size();
  return d;
}

CoactionReport verify_fell_bundle(const FellBundle& bundle, double tol) {
  const FiniteGroup& g = *bundle.group();
  const std::size_t n = bundle.n();
  Tracker t{{}, 10.0 * tol};
  for (Element x = 0; x < g.order(); ++x) {
    for (std::size_t k = 0; k < bundle.fibre(x).size(); ++k) {
      if (!in_blocks(bundle.blocks(), bundle.fibre(x)[k], t.limit)) {
        t.check(std::numeric_limits<double>::infinity(), "A_x in A", "x=" + g.label(x));
      }
    }
  }
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      const auto& target = bundle.fibre(g.mul(x, y));
      for (const auto& a : bundle.fibre(x)) {
        for (const auto& b : bundle.fibre(y)) {
          const CMatrix ab = a * b;
          t.check(max_abs(ab - project_onto(target, ab)), "A_x A_y in A_xy",
                  "x=" + g.label(x) + " y=" + g.label(y));
        }
      }
    }
  }
  for (Element x = 0; x < g.order(); ++x) {
    const auto& target = bundle.fibre(g.inv(x));
    if (target.size() != bundle.fibre(x).size()) {
      t.check(std::numeric_limits<double>::infinity(), "A_x^* = A_{x^-1}", "x=" + g.label(x));
      continue;
    }
    for (const auto& a : bundle.fibre(x)) {
      const CMatrix as = a.adjoint();
      t.check(max_abs(as - project_onto(target, as)), "A_x^* = A_{x^-1}", "x=" + g.label(x));
    }
  }
  std::size_t algebra_dim = 0;
  for (auto b : bundle.blocks()) algebra_dim += b * b;
  std::vector<CMatrix> all;
  for (const auto& s : bundle.fibres()) all.insert(all.end(), s.begin(), s.end());
  const std::size_t span = all.empty() ? 0 : orthonormal_span(all, tol).size();
  if (all.size() != algebra_dim || span != algebra_dim) {
    std::ostringstream os;
    os << "sum of dims " << all.size() << ", span " << span << ", dim A " << algebra_dim;
    t.check(std::numeric_limits<double>::infinity(), "A = direct sum of A_x", os.str());
  }
  (void)n;
  return t.report;
}

FellBundle spectral_subspaces(const Coaction& delta, double tol) {
  const std::size_t n = delta.n();
  std::vector<std::vector<CMatrix>> fibres;
  fibres.reserve(delta.maps().size());
  for (const auto& e : delta.maps()) {
    const Eigen::JacobiSVD<CMatrix> svd(e, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    const std::size_t r = decide_rank(s, tol, std::max(1.0, s.size() ? s(0) : 0.0));
    std::vector<CMatrix> basis;
    basis.reserve(r);
    for (std::size_t k = 0; k < r; ++k) {
      basis.push_back(unvec_rm(svd.matrixU().col(static_cast<Eigen::Index>(k)), n));
    }
    fibres.push_back(std::move(basis));
  }
  FellBundle bundle(delta.group(), n, std::move(fibres), delta.blocks(), tol);
  if (auto r = verify_fell_bundle(bundle, tol); !r.ok) {
    throw PreconditionError("grading violation: " + r.failed_invariant);
  }
  return bundle;
}

Coaction from_fell_bundle(const FellBundle& bundle, double tol) {
  if (auto r = verify_fell_bundle(bundle, tol); !r.ok) {
    throw PreconditionError("invalid grading: " + r.failed_invariant);
  }
  const std::size_t n = bundle.n();
  const auto m = static_cast<Eigen::Index>(n * n);
  const auto d = static_cast<Eigen::Index>(bundle.total_dim());
  CMatrix stacked(m, d);
  Eigen::Index col = 0;
  for (const auto& s : bundle.fibres()) {
    for (const auto& a : s) stacked.col(col++) = vec_rm(a);
  }
  const CMatrix coords = stacked.completeOrthogonalDecomposition().pseudoInverse();
  std::vector<CMatrix> maps;
  maps.reserve(bundle.fibres().size());
  col = 0;
  for (const auto& s : bundle.fibres()) {
    const auto k = static_cast<Eigen::Index>(s.size());
    maps.push_back(stacked.middleCols(col, k) * coords.middleRows(col, k));
    col += k;
  }
  Coaction delta(bundle.group(), n, std::move(maps), bundle.blocks());
  if (auto r = verify_coaction(delta, tol); !r.ok) {
    throw NumericalError("from_fell_bundle: result fails " + r.failed_invariant);
  }
  return delta;
}

bool in_spectral_subspace(const Coaction& delta, Element x, const CMatrix& a, double tol) {
  return (delta.apply(x, a) - a).norm() <= tol * a.norm();
}

std::size_t spectral_dim(const Coaction& delta, Element x) {
  return rank_of_projection(delta.map(x));
}

std::vector<Element> spectrum(const Coaction& delta) {
  std::vector<Element> out;
  for (Element x = 0; x < delta.group()->order(); ++x) {
    if (spectral_dim(delta, x) > 0) out.push_back(x);
  }
  return out;
}

bool is_effective(const Coaction& delta) {
  return spectrum(delta).size() == delta.group()->order();
}

StarAlgebra fixed_algebra(const Coaction& delta, const NumericOptions& options) {
  const FellBundle bundle = spectral_subspaces(delta, options.tol);
  std::vector<CMatrix> gens = bundle.fibre(kIdentity);
  StarAlgebra b = saturate_star_algebra(gens, delta.n(), options);
  if (b.dim() != gens.size()) throw NumericalError("fixed_algebra: A_e is not closed");
  return b;
}

bool is_ergodic(const Coaction& delta) { return spectral_dim(delta, kIdentity) == 1; }

void InnerData::validate(double tol) const {
  if (!group) throw InvalidInput("inner data: missing group");
  if (points.empty()) throw InvalidInput("inner data: no points");
  const auto n = static_cast<Eigen::Index>(points.size());
  if (basis.rows() != n || basis.cols() != n) {
    throw InvalidInput("inner data: basis must be n x n with n = number of points");
  }
  if (!all_finite(basis) || !is_unitary(basis, tol)) {
    throw InvalidInput("inner data: basis is not unitary");
  }
  for (auto x : points) {
    if (!group->contains(x)) throw InvalidInput("inner data: point out of range");
  }
}

InnerData InnerData::normalized() const {
  InnerData out = *this;
  const Element shift = group->inv(points.back());
  for (auto& x : out.points) x = group->mul(x, shift);
  return out;
}

ImplementingUnitary::ImplementingUnitary(GroupMatrix value, double tol) : value_(std::move(value)) {
  if (!value_.is_unitary(tol)) throw PreconditionError("implementing unitary is not unitary");
}

InnerCoaction inner_from_data(const InnerData& data) {
  data.validate();
  const FiniteGroup& g = *data.group;
  const std::size_t n = data.n();
  const auto m = static_cast<Eigen::Index>(n * n);
  std::vector<CMatrix> proj(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = data.basis.col(static_cast<Eigen::Index>(i));
    proj[i] = c * c.adjoint();
  }
  std::vector<CMatrix> maps(g.order(), CMatrix::Zero(m, m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      maps[g.div(data.points[i], data.points[j])] += sandwich_operator(proj[i], proj[j]);
    }
  }
  GroupMatrix u = GroupMatrix::zero(data.group, n);
  std::vector<CMatrix> comps = u.components();
  for (std::size_t i = 0; i < n; ++i) comps[data.points[i]] += proj[i];
  return {Coaction(data.group, n, std::move(maps)),
          ImplementingUnitary(GroupMatrix(data.group, std::move(comps)))};
}

InnerTest is_inner(const Coaction& delta, const NumericOptions& options) {
  if (!delta.is_full_matrix_algebra()) {
    throw InvalidInput("is_inner: coaction must be on a full matrix algebra");
  }
  const std::size_t n = delta.n();
  const FiniteGroup& g = *delta.group();
  StarAlgebra fixed = fixed_algebra(delta, options);
  InnerTest result{false, std::nullopt, fixed};
  for (const auto& b : fixed.blocks()) {
    if (b.multiplicity != 1) return result;
  }
  result.inner = true;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(attempt));
    std::vector<CMatrix> clusters;
    try {
      clusters = random_spectral_decomposition(fixed.basis(), n, rng, options.tol);
    } catch (const NumericalError&) {
      continue;
    }
    if (clusters.size() != n) continue;
    CMatrix v(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) v.col(static_cast<Eigen::Index>(i)) = clusters[i].col(0);
    const auto last = static_cast<Eigen::Index>(n - 1);
    std::vector<Element> points(n, kIdentity);
    bool read_all = true;
    for (std::size_t i = 0; i + 1 < n && read_all; ++i) {
      const CMatrix e = v.col(static_cast<Eigen::Index>(i)) * v.col(last).adjoint();
      std::optional<Element> found;
      for (Element x = 0; x < g.order(); ++x) {
        if (max_abs(delta.apply(x, e) - e) <= kReadTol) {
          found = x;
          break;
        }
      }
      if (!found) read_all = false;
      else points[i] = *found;
    }
    if (!read_all) continue;
    result.witness = InnerData{delta.group(), v, points};
    return result;
  }
  throw NumericalError("is_inner: could not read off a witness");
}

double implementation_residual(const Coaction& delta, const GroupMatrix& u) {
  if (!(*u.group() == *delta.group()) || u.n() != delta.n()) {
    throw InvalidInput("implementation_residual: shape mismatch");
  }
  double r = 0.0;
  for (auto [i, j] : delta.algebra_units()) {
    const CMatrix a = matrix_unit(delta.n(), i, j);
    const std::vector<CMatrix> conj = u.conjugate(a);
    for (Element x = 0; x < delta.group()->order(); ++x) {
      r = std::max(r, max_abs(delta.apply(x, a) - conj[x]));
    }
  }
  return r;
}

ImplementingUnitary implement_unitary(const Coaction& delta, const NumericOptions& options) {
  if (!delta.is_full_matrix_algebra()) {
    throw InvalidInput("implement_unitary: coaction must be on a full matrix algebra");
  }
  const std::size_t n = delta.n();
  const FiniteGroup& g = *delta.group();
  const GroupFourier fourier(delta.group(), options);
  std::vector<CMatrix> blocks;
  blocks.reserve(fourier.block_count());
  for (std::size_t b = 0; b < fourier.block_count(); ++b) {
    const std::size_t d = fourier.block_dim(b);
    const auto nd = static_cast<Eigen::Index>(n * d);
    auto alpha = [&](std::size_t i, std::size_t j) {
      const CMatrix a = matrix_unit(n, i, j);
      CMatrix image = CMatrix::Zero(nd, nd);
      for (Element x = 0; x < g.order(); ++x) image += kron(delta.apply(x, a), fourier.irrep(b, x));
      return image;
    };
    // U (e_k (x) f_j) = alpha(e_k0) F f_j for an orthonormal frame F of the
    // range of alpha(e_00).
    const Eigen::SelfAdjointEigenSolver<CMatrix> eig(alpha(0, 0));
    const auto dd = static_cast<Eigen::Index>(d);
    if (std::abs(eig.eigenvalues()(nd - dd) - 1.0) > kReadTol ||
        (nd > dd && std::abs(eig.eigenvalues()(nd - dd - 1)) > kReadTol)) {
      throw NumericalError("implement_unitary: delta(e_11) has the wrong rank");
    }
    std::mt19937_64 rng(options.seed + 1 + static_cast<std::uint64_t>(b));
    const CMatrix frame = eig.eigenvectors().rightCols(dd) * random_unitary(d, rng);
    CMatrix ub(nd, nd);
    for (std::size_t k = 0; k < n; ++k) {
      ub.middleCols(static_cast<Eigen::Index>(k) * dd, dd) = alpha(k, 0) * frame;
    }
    blocks.push_back(std::move(ub));
  }
  GroupMatrix u = fourier.inverse(blocks, n);
  if (!u.is_unitary(kUnitaryTol)) throw NumericalError("implement_unitary: result is not unitary");
  if (implementation_residual(delta, u) > kUnitaryTol) {
    throw NumericalError("implement_unitary: result does not implement the coaction");
  }
  return ImplementingUnitary(std::move(u));
}

GroupAlgebraElement unitaries_differ_by(const ImplementingUnitary& u,
                                        const ImplementingUnitary& u_prime, double tol) {
  if (!(*u.group() == *u_prime.group()) || u.n() != u_prime.n()) {
    throw InvalidInput("unitaries_differ_by: shape mismatch");
  }
  const GroupMatrix w = u.value().adjoint() * u_prime.value();
  auto scalar = w.scalar_part(tol);
  if (!scalar) throw PreconditionError("not a 1 (x) u factor");
  if (!scalar->is_unitary(tol)) throw PreconditionError("not a 1 (x) u factor: u not unitary");
  return *scalar;
}

UnitaryCocycle cocycle_of_unitary(const ImplementingUnitary& u, double tol) {
  const GroupPtr& g = u.group();
  const std::size_t order = g->order();
  const GroupPtr square = direct_product(*g, *g);
  std::vector<Element> diagonal(order), first(order), second(order);
  for (Element x = 0; x < order; ++x) {
    diagonal[x] = static_cast<Element>(x * order + x);
    first[x] = static_cast<Element>(x * order);
    second[x] = x;
  }
  const GroupMatrix& v = u.value();
  const GroupMatrix lhs = v.pushforward(square, diagonal);
  const GroupMatrix legs = v.pushforward(square, first) * v.pushforward(square, second);
  const GroupMatrix w = legs.adjoint() * lhs;
  auto scalar = w.scalar_part(tol);
  if (!scalar) throw PreconditionError("first leg not scalar");
  UnitaryCocycle out{*scalar, 0.0, false};
  out.residual = lhs.distance(legs * GroupMatrix::scalar(out.u, u.n()));
  out.trivial = out.u.distance(GroupAlgebraElement::identity(square)) <= 1e-12;
  return out;
}

Coaction coaction_from_projrep(const ProjRep& rep, double tol) {
  std::vector<std::vector<CMatrix>> fibres;
  fibres.reserve(rep.images().size());
  for (const auto& u : rep.images()) fibres.push_back({u});
  return from_fell_bundle(FellBundle(rep.group(), rep.dim(), std::move(fibres), {}, tol), tol);
}

ErgodicConstruction ergodic_from_cocycle(const Cocycle& omega, const NumericOptions& options) {
  ProjRep rep = irreducible_cut(omega, options);
  Coaction delta = coaction_from_projrep(rep, options.tol);
  return {std::move(delta), std::move(rep)};
}

ProjRep spanning_unitaries(const Coaction& delta, double tol) {
  if (!delta.is_full_matrix_algebra() || !is_ergodic(delta) || !is_effective(delta)) {
    throw PreconditionError("non-ergodic input");
  }
  const FellBundle bundle = spectral_subspaces(delta, tol);
  const std::size_t n = delta.n();
  std::vector<CMatrix> images;
  images.reserve(bundle.fibres().size());
  for (Element x = 0; x < bundle.fibres().size(); ++x) {
    if (bundle.fibre(x).size() != 1) throw PreconditionError("non-ergodic input");
    if (x == kIdentity) {
      images.push_back(identity_matrix(n));
      continue;
    }
    CMatrix b = bundle.fibre(x).front();
    const double c = (b.adjoint() * b).trace().real() / static_cast<double>(n);
    b /= std::sqrt(c);
    Eigen::Index r = 0, col = 0;
    b.cwiseAbs().maxCoeff(&r, &col);
    const Complex pivot = b(r, col);
    b *= std::conj(pivot) / std::abs(pivot);
    images.push_back(std::move(b));
  }
  return ProjRep(delta.group(), std::move(images));
}

std::vector<CMatrix> action_from_ergodic(const Coaction& delta, double tol) {
  const ProjRep rep = spanning_unitaries(delta, tol);
  std::vector<CMatrix> maps;
  maps.reserve(rep.images().size());
  for (const auto& u : rep.images()) maps.push_back(sandwich_operator(u, u.adjoint()));
  const FiniteGroup& g = *delta.group();
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      if (max_abs(maps[x] * maps[y] - maps[g.mul(x, y)]) > kUnitaryTol) {
        throw NumericalError("action_from_ergodic: not a homomorphism");
      }
    }
  }
  return maps;
}

std::vector<std::vector<std::optional<Element>>> composition_table(
    const std::vector<CMatrix>& maps, double tol) {
  std::vector<std::vector<std::optional<Element>>> table(
      maps.size(), std::vector<std::optional<Element>>(maps.size()));
  for (std::size_t x = 0; x < maps.size(); ++x) {
    for (std::size_t y = 0; y < maps.size(); ++y) {
      const CMatrix p = maps[x] * maps[y];
      for (std::size_t z = 0; z < maps.size(); ++z) {
        if (max_abs(p - maps[z]) <= tol) {
          table[x][y] = static_cast<Element>(z);
          break;
        }
      }
    }
  }
  return table;
}

Coaction inflate(const Coaction& delta, GroupPtr target, const std::vector<Element>& embedding) {
  if (!target) throw InvalidInput("inflate: missing target group");
  if (!is_injective_homomorphism(*delta.group(), *target, embedding)) {
    throw InvalidInput("inflate: embedding is not an injective homomorphism");
  }
  const auto m = static_cast<Eigen::Index>(delta.n() * delta.n());
  std::vector<CMatrix> maps(target->order(), CMatrix::Zero(m, m));
  for (Element h = 0; h < delta.group()->order(); ++h) maps[embedding[h]] = delta.map(h);
  return Coaction(std::move(target), delta.n(), std::move(maps), delta.blocks());
}

std::optional<Element> is_group_like(const GroupAlgebraElement& c, double tol) {
  if (c.is_zero(tol)) return std::nullopt;
  const GroupPtr& g = c.group();
  const GroupPtr square = direct_product(*g, *g);
  const GroupAlgebraElement lhs = coproduct(c, square);
  const GroupAlgebraElement rhs = tensor(c, c, square);
  if (lhs.distance(rhs) > tol) return std::nullopt;
  Element best = 0;
  for (Element x = 1; x < g->order(); ++x) {
    if (std::abs(c.coeff(x)) > std::abs(c.coeff(best))) best = x;
  }
  if (c.distance(GroupAlgebraElement::basis(g, best)) > std::sqrt(tol)) {
    throw NumericalError("is_group_like: solution of delta_G(c) = c (x) c is not a group element");
  }
  return best;
}

std::vector<std::vector<Element>> enumerate_effective_inner(const FiniteGroup& g, std::size_t n,
                                                            std::optional<std::size_t> cap) {
  if (n == 0) throw InvalidInput("enumerate: n must be positive");
  std::vector<std::vector<Element>> out;
  const std::size_t order = g.order();
  if (n * (n - 1) + 1 < order) return out;
  if (cap && *cap == 0) return out;
  std::vector<Element> tuple(n, kIdentity);
  std::vector<char> seen(order);
  while (true) {
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t covered = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Element z = g.div(tuple[i], tuple[j]);
        if (!seen[z]) {
          seen[z] = 1;
          ++covered;
        }
      }
    }
    if (covered == order) {
      out.push_back(tuple);
      if (cap && out.size() >= *cap) return out;
    }
    std::size_t pos = n - 1;
    while (pos > 0) {
      --pos;
      if (++tuple[pos] < order) break;
      tuple[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 1) return out;
  }
}

}  // namespace coact
