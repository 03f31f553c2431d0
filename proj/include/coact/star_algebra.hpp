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

#include <cstdint>
#include <vector>

#include "coact/matrix.hpp"

namespace coact {

/// One simple summand M_k acting with multiplicity m, and its minimal
/// central projection z.
struct WedderburnBlock {
  std::size_t size = 0;          // k
  std::size_t multiplicity = 0;  // m
  CMatrix central_projection;    // z, rank k*m
};

/// A unital *-subalgebra of M_n with a Hilbert-Schmidt orthonormal basis and
/// its Wedderburn decomposition.
class StarAlgebra {
 public:
  StarAlgebra(std::size_t n, std::vector<CMatrix> basis,
              std::vector<WedderburnBlock> blocks, NumericOptions options);

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<CMatrix>& basis() const { return basis_; }
  const std::vector<WedderburnBlock>& blocks() const { return blocks_; }
  /// Tolerance and the seed of the random central element actually used.
  const NumericOptions& options() const { return options_; }

  bool is_simple() const { return blocks_.size() == 1; }
  std::size_t center_dim() const { return blocks_.size(); }
  bool contains(const CMatrix& a, double tol) const;

 private:
  std::size_t n_;
  std::vector<CMatrix> basis_;
  std::vector<WedderburnBlock> blocks_;
  NumericOptions options_;
};

/// Smallest unital *-closed subalgebra of M_n containing the generators,
/// with its block structure computed from `options.seed`.
StarAlgebra saturate_star_algebra(const std::vector<CMatrix>& generators,
                                  std::size_t n, const NumericOptions& options = {});

/// Orthonormal basis of the commutant {T : TA = AT for all A in s}.
std::vector<CMatrix> commutant(const std::vector<CMatrix>& s, std::size_t n,
                               double tol = 1e-9);

/// Orthonormal basis of the center of the span of an orthonormal basis that
/// is closed under products.
std::vector<CMatrix> algebra_center(const std::vector<CMatrix>& basis,
                                    std::size_t n, double tol);

/// Minimal central projections from eigen-grouping a seeded random
/// self-adjoint central element. Retries with seed+1, seed+2, ... before
/// throwing NumericalError("degenerate center sample"). `seed_used`
/// receives the seed that succeeded.
std::vector<WedderburnBlock> block_structure(const std::vector<CMatrix>& basis,
                                             std::size_t n, std::uint64_t seed,
                                             double tol,
                                             std::uint64_t* seed_used = nullptr);

inline std::vector<WedderburnBlock> block_structure(const StarAlgebra& b,
                                                    std::uint64_t seed,
                                                    double tol) {
  return block_structure(b.basis(), b.ambient_dim(), seed, tol);
}

/// Spectral projections of a seeded random self-adjoint element of the span
/// of `basis` (assumed *-closed), grouped by eigenvalue. Returns the
/// orthonormal eigenvector blocks, one matrix of columns per eigenvalue.
std::vector<CMatrix> random_spectral_decomposition(
    const std::vector<CMatrix>& basis, std::size_t n, std::mt19937_64& rng,
    double tol);

/// Unitary U with pi[a] = U rho[a] U^* for every listed a, where pi and rho
/// are images of the same basis under two unital *-homomorphisms into M_N.
/// Throws PreconditionError("not equivalent") when the intertwiner space
/// has no invertible element after bounded retries.
CMatrix unitary_intertwiner(const std::vector<CMatrix>& pi,
                            const std::vector<CMatrix>& rho,
                            const NumericOptions& options = {});

}  // namespace coact
