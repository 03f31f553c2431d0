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
#include <vector>

#include "coact/cocycle.hpp"
#include "coact/proj_rep.hpp"
#include "coact/star_algebra.hpp"

namespace coact {

/// The right regular omega-representation (R_x xi)(y) = omega(y, x) xi(yx)
/// on functions G -> C, i.e. R_x has entry omega(y, x) at (y, yx).
/// Rejects non-normalized cocycles with PreconditionError.
ProjRep regular_omega_rep(const Cocycle& omega);

/// Same matrices without the normalization requirement. The formula gives
/// an omega-representation for every valid cocycle.
std::vector<CMatrix> regular_omega_matrices(const Cocycle& omega);

/// True iff the |G| images are linearly independent.
bool is_universal(const ProjRep& u, double tol = 1e-9);

/// Smallest singular value of the |G| x dim^2 matrix whose rows are the
/// vectorized images scaled to unit Hilbert-Schmidt norm; 0 when |G| > dim^2.
double universality_margin(const ProjRep& u);

/// C*_omega(G) as the *-algebra generated by the regular omega-rep; throws
/// PreconditionError if its dimension is not |G|.
StarAlgebra twisted_algebra(const Cocycle& omega, const NumericOptions& options = {});

struct CentralTypeResult {
  bool central_type = false;
  /// n with |G| = n^2 when central_type holds, otherwise 0.
  std::size_t degree = 0;
  StarAlgebra algebra;
};

CentralTypeResult central_type(const Cocycle& omega, const NumericOptions& options = {});

inline bool is_central_type(const Cocycle& omega, const NumericOptions& options = {}) {
  return central_type(omega, options).central_type;
}

/// L_z with L_z[zw, w] = conj(omega(z, w)); they span the commutant of
/// regular_omega_matrices(omega).
std::vector<CMatrix> regular_omega_commutant(const Cocycle& omega);

/// An irreducible n-dimensional omega-representation for central-type
/// (G, omega), cut out of the regular omega-rep by a minimal projection of
/// its commutant. Unique only up to unitary equivalence.
ProjRep irreducible_cut(const Cocycle& omega, const NumericOptions& options = {});

/// Z_p x Z_p (index a*p + b) with U(1,0) = diag(g, g^2, ..., g^p),
/// g = exp(2 pi i / p), U(0,1) the cyclic shift with ones at (j, j+1), and
/// U(a,b) = U(1,0)^a U(0,1)^b.
ProjRep clock_shift_rep(std::size_t p);

struct RelationCheck {
  std::string relation;
  double residual = 0.0;
};

/// Residuals (max abs entry) of the defining matrix relations of the two
/// degree-4 representations of the order-16 groups.
std::vector<RelationCheck> order16_relations(int variant);

/// a^i b^j c^k -> A^i B^j C^k on presented_group_16(variant).
ProjRep order16_rep(int variant);

}  // namespace coact
