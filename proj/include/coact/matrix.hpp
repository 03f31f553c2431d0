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

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace coact {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Tolerance and seed threaded through every numerical decision.
struct NumericOptions {
  double tol = 1e-9;
  std::uint64_t seed = 0;
};

CMatrix identity_matrix(std::size_t n);
CMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j);
std::vector<CMatrix> matrix_units(std::size_t n);

/// Hilbert-Schmidt inner product trace(a^* b).
Complex hs_inner(const CMatrix& a, const CMatrix& b);

/// Row-major vectorization: entry (i, j) goes to i*cols + j.
CVector vec_rm(const CMatrix& a);
CMatrix unvec_rm(const CVector& v, std::size_t rows, std::size_t cols);
inline CMatrix unvec_rm(const CVector& v, std::size_t n) { return unvec_rm(v, n, n); }

/// Kronecker product; kron(a, b) represents a (x) b on C^p (x) C^q.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Matrix of X -> l X r acting on row-major vectorizations.
CMatrix sandwich_operator(const CMatrix& l, const CMatrix& r);

bool all_finite(const CMatrix& a);
bool is_unitary(const CMatrix& u, double tol);
double max_abs(const CMatrix& a);

/// Numerical rank of singular values sorted in decreasing order, measured
/// relative to `scale`. Values at or below tol*scale count as zero, values
/// at or above sqrt(tol)*scale as nonzero; anything in between throws
/// NumericalError.
std::size_t decide_rank(const Eigen::VectorXd& singular_values, double tol,
                        double scale);

/// Orthonormal (column) basis of the right nullspace of `op`.
struct Svd {
  Eigen::VectorXd values;
  CMatrix u;
  CMatrix v;
};

/// Singular values, descending, with thin U and/or full V on request.
Svd svd(const CMatrix& a, bool thin_u, bool full_v);

CMatrix nullspace(const CMatrix& op, double tol);

/// Hilbert-Schmidt orthonormal basis of the span of n x n matrices.
std::vector<CMatrix> orthonormal_span(const std::vector<CMatrix>& mats,
                                      double tol);

/// Orthogonal projection of `a` onto the span of an orthonormal basis.
CMatrix project_onto(const std::vector<CMatrix>& orthonormal_basis,
                     const CMatrix& a);

/// Distance from `a` to the span of an orthonormal basis, relative to |a|.
double relative_distance_to_span(const std::vector<CMatrix>& orthonormal_basis,
                                 const CMatrix& a);

Complex random_complex(std::mt19937_64& rng);
CMatrix random_unitary(std::size_t n, std::mt19937_64& rng);

/// Unitary factor w v^* of the polar decomposition of an invertible t.
CMatrix unitary_polar_factor(const CMatrix& t);

}  // namespace coact
