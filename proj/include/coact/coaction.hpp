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

#include <optional>
#include <string>
#include <vector>

#include "coact/cocycle.hpp"
#include "coact/group.hpp"
#include "coact/group_algebra.hpp"
#include "coact/matrix.hpp"
#include "coact/proj_rep.hpp"
#include "coact/star_algebra.hpp"

namespace coact {

/// A coaction delta(a) = sum_x E_x(a) (x) x of a finite group on a
/// block-diagonal algebra A = M_{n_1} (+) ... (+) M_{n_k} inside M_n.
///
/// Each E_x is stored as an n^2 x n^2 matrix acting on row-major
/// vectorizations, (i, j) -> i*n + j. When A is a proper block-diagonal
/// subalgebra the maps are expected to vanish off A, and "identity map"
/// means the projection onto A. Only shapes are checked on construction;
/// the coaction axioms are checked by verify_coaction.
class Coaction {
 public:
  Coaction(GroupPtr group, std::size_t n, std::vector<CMatrix> maps,
           std::vector<std::size_t> blocks = {});

  static Coaction trivial(GroupPtr group, std::size_t n);

  const GroupPtr& group() const { return group_; }
  std::size_t n() const { return n_; }
  const std::vector<std::size_t>& blocks() const { return blocks_; }
  bool is_full_matrix_algebra() const { return blocks_.size() == 1; }
  const CMatrix& map(Element x) const { return maps_[x]; }
  const std::vector<CMatrix>& maps() const { return maps_; }

  /// E_x(a)
  CMatrix apply(Element x, const CMatrix& a) const;
  /// Matrix units e_ij lying in A, as (i, j) pairs.
  const std::vector<std::pair<std::size_t, std::size_t>>& algebra_units() const {
    return units_;
  }
  std::size_t algebra_dim() const { return units_.size(); }
  /// Orthogonal projection of M_n onto A, as an n^2 x n^2 matrix.
  CMatrix algebra_projection() const;

  /// Largest entry difference between corresponding E-maps.
  double distance(const Coaction& other) const;

 private:
  GroupPtr group_;
  std::size_t n_;
  std::vector<CMatrix> maps_;
  std::vector<std::size_t> blocks_;
  std::vector<std::pair<std::size_t, std::size_t>> units_;
};

struct CoactionReport {
  bool ok = true;
  std::string failed_invariant;
  std::string witness;
  double max_residual = 0.0;
};

/// Checks E_x E_y = delta_{xy} E_x, sum_x E_x = id, E_x(a^*) =
/// E_{x^{-1}}(a)^* and E_z(ab) = sum_{xy=z} E_x(a) E_y(b) on matrix units,
/// each to 10*tol.
CoactionReport verify_coaction(const Coaction& delta, double tol = 1e-9);

/// Per-element subspaces A_x of a block-diagonal algebra. Bases are
/// orthonormalized on construction.
class FellBundle {
 public:
  FellBundle(GroupPtr group, std::size_t n, std::vector<std::vector<CMatrix>> subspaces,
             std::vector<std::size_t> blocks = {}, double tol = 1e-9);

  const GroupPtr& group() const { return group_; }
  std::size_t n() const { return n_; }
  const std::vector<std::size_t>& blocks() const { return blocks_; }
  const std::vector<CMatrix>& fibre(Element x) const { return subspaces_[x]; }
  const std::vector<std::vector<CMatrix>>& fibres() const { return subspaces_; }
  std::size_t total_dim() const;

 private:
  GroupPtr group_;
  std::size_t n_;
  std::vector<std::size_t> blocks_;
  std::vector<std::vector<CMatrix>> subspaces_;
};

/// A_x A_y in A_xy, A_x^* = A_{x^{-1}}, and A = direct sum of the A_x, each
/// to 10*tol.
CoactionReport verify_fell_bundle(const FellBundle& bundle, double tol = 1e-9);

/// A_x = range(E_x). Throws PreconditionError("grading violation") if the
/// ranges do not form a Fell bundle.
FellBundle spectral_subspaces(const Coaction& delta, double tol = 1e-9);

/// E_x = projection onto A_x along the direct sum. Throws
/// PreconditionError("invalid grading") for a bad bundle.
Coaction from_fell_bundle(const FellBundle& bundle, double tol = 1e-9);

/// |E_x(a) - a| <= tol |a|, i.e. delta(a) = a (x) x.
bool in_spectral_subspace(const Coaction& delta, Element x, const CMatrix& a, double tol = 1e-9);

std::vector<Element> spectrum(const Coaction& delta);
bool is_effective(const Coaction& delta);
/// Rank of E_x.
std::size_t spectral_dim(const Coaction& delta, Element x);

/// A^delta = A_e with its block structure.
StarAlgebra fixed_algebra(const Coaction& delta, const NumericOptions& options = {});
bool is_ergodic(const Coaction& delta);

/// Rank-one projections p_i = v_i v_i^* (columns of a unitary V) and points
/// x_i. Recovered witnesses have the last point at e.
struct InnerData {
  GroupPtr group;
  CMatrix basis;
  std::vector<Element> points;

  void validate(double tol = 1e-8) const;
  std::size_t n() const { return points.size(); }
  /// Right translate so the last point is e; the coaction is unchanged.
  InnerData normalized() const;
};

/// Element of M_n (x) C[G] certified unitary on construction.
class ImplementingUnitary {
 public:
  explicit ImplementingUnitary(GroupMatrix value, double tol = 1e-8);

  const GroupMatrix& value() const { return value_; }
  const GroupPtr& group() const { return value_.group(); }
  std::size_t n() const { return value_.n(); }

 private:
  GroupMatrix value_;
};

struct InnerCoaction {
  Coaction coaction;
  ImplementingUnitary unitary;
};

/// delta(a) = sum_{i,j} p_i a p_j (x) x_i x_j^{-1}, implemented by
/// U = sum_i p_i (x) x_i.
InnerCoaction inner_from_data(const InnerData& data);

struct InnerTest {
  bool inner = false;
  std::optional<InnerData> witness;
  StarAlgebra fixed;
};

/// Inner iff every Wedderburn block of A^delta has multiplicity 1. The
/// witness diagonalizes a seeded random self-adjoint element of A^delta and
/// reads x_i off e_in in A_{x_i}.
InnerTest is_inner(const Coaction& delta, const NumericOptions& options = {});

/// max over matrix units a and x of |E_x(a) - (U (a (x) 1) U^*)_x|.
double implementation_residual(const Coaction& delta, const GroupMatrix& u);

/// U with delta(a) = U (a (x) 1) U^*, assembled blockwise over the
/// Wedderburn decomposition of C[G].
ImplementingUnitary implement_unitary(const Coaction& delta,
                                      const NumericOptions& options = {});

/// u in C[G] with U' = U (1 (x) u). Throws PreconditionError("not a 1 (x) u
/// factor") otherwise.
GroupAlgebraElement unitaries_differ_by(const ImplementingUnitary& u,
                                        const ImplementingUnitary& u_prime,
                                        double tol = 1e-8);

struct UnitaryCocycle {
  /// Element of C[G x G] over direct_product(G, G).
  GroupAlgebraElement u;
  /// |(id (x) delta_G)(U) - U_12 U_13 (1 (x) u)|
  double residual = 0.0;
  /// u equals 1 (x) 1 to rounding (1e-12).
  bool trivial = false;
};

/// The unitary u with (id (x) delta_G)(U) = U_12 U_13 (1 (x) u). Throws
/// PreconditionError("first leg not scalar").
UnitaryCocycle cocycle_of_unitary(const ImplementingUnitary& u, double tol = 1e-8);

struct ErgodicConstruction {
  Coaction coaction;
  ProjRep rep;
};

/// Grading A_x = C U_x of M_n by an irreducible omega-representation.
Coaction coaction_from_projrep(const ProjRep& rep, double tol = 1e-9);

/// Ergodic effective coaction on M_n for central-type (G, omega).
ErgodicConstruction ergodic_from_cocycle(const Cocycle& omega,
                                         const NumericOptions& options = {});

/// Unitaries U_x spanning A_x for an ergodic effective coaction, with
/// U_e = 1 and a deterministic phase elsewhere.
ProjRep spanning_unitaries(const Coaction& delta, double tol = 1e-9);

/// x -> Ad U_x as n^2 x n^2 maps. Throws PreconditionError("non-ergodic
/// input") unless delta is ergodic and effective.
std::vector<CMatrix> action_from_ergodic(const Coaction& delta, double tol = 1e-9);

/// table[x][y] = z with Ad_x Ad_y = Ad_z, or nullopt if no such z.
std::vector<std::vector<std::optional<Element>>> composition_table(
    const std::vector<CMatrix>& maps, double tol = 1e-8);

/// E_{embedding(h)} = E_h and zero elsewhere. Throws InvalidInput unless the
/// embedding is an injective homomorphism.
Coaction inflate(const Coaction& delta, GroupPtr target, const std::vector<Element>& embedding);

/// x if delta_G(c) = c (x) c with c != 0. Such c is the basis vector of x;
/// this is checked as well.
std::optional<Element> is_group_like(const GroupAlgebraElement& c, double tol = 1e-9);

/// Tuples (x_1, ..., x_{n-1}, e) with {x_i x_j^{-1}} = G, in lexicographic
/// order of element indices, stopping after `cap` results.
std::vector<std::vector<Element>> enumerate_effective_inner(
    const FiniteGroup& g, std::size_t n, std::optional<std::size_t> cap = std::nullopt);

}  // namespace coact
