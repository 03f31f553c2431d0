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

#include "coact/star_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "coact/errors.hpp"

namespace coact {

namespace {

constexpr int kMaxAttempts = 8;
constexpr double kIntegerSnap = 1e-6;

// Right nullspace of a tall operator that is supplied in row chunks. The
// chunks are folded into a square triangular factor with the same singular
// values, so memory stays at cols x cols.
class StackedOperator {
 public:
  explicit StackedOperator(Eigen::Index cols) : r_(0, cols) {}

  void add(const CMatrix& rows) {
    CMatrix stacked(r_.rows() + rows.rows(), r_.cols());
    stacked << r_, rows;
    if (stacked.rows() <= stacked.cols()) {
      r_ = std::move(stacked);
      return;
    }
    Eigen::HouseholderQR<CMatrix> qr(stacked);
    r_ = qr.matrixQR().topRows(r_.cols()).triangularView<Eigen::Upper>();
  }

  CMatrix nullspace(double tol) const { return coact::nullspace(r_, tol); }

 private:
  CMatrix r_;
};

std::vector<CMatrix> extend_basis(std::vector<CMatrix>& basis,
                                  const std::vector<CMatrix>& candidates,
                                  double tol) {
  if (candidates.empty()) return {};
  const Eigen::Index rows = candidates.front().rows();
  CMatrix residuals(rows * rows, static_cast<Eigen::Index>(candidates.size()));
  Eigen::Index used = 0;
  for (const auto& c : candidates) {
    const double norm = c.norm();
    if (norm <= tol) continue;
    const CMatrix r = c - project_onto(basis, c);
    if (r.norm() <= tol * norm) continue;
    residuals.col(used++) = vec_rm(r) / norm;
  }
  if (used == 0) return {};
  const Svd d = svd(residuals.leftCols(used), true, false);
  const std::size_t rank = decide_rank(d.values, tol, 1.0);
  std::vector<CMatrix> added;
  for (std::size_t k = 0; k < rank; ++k) {
    CMatrix m = unvec_rm(d.u.col(static_cast<Eigen::Index>(k)),
                         static_cast<std::size_t>(rows));
    m -= project_onto(basis, m);
    m /= m.norm();
    basis.push_back(m);
    added.push_back(std::move(m));
  }
  return added;
}

// Deterministic block order independent of the random sample.
bool block_less(const WedderburnBlock& a, const WedderburnBlock& b) {
  if (a.size != b.size) return a.size < b.size;
  if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
  const auto& za = a.central_projection;
  const auto& zb = b.central_projection;
  auto key = [](double v) { return std::llround(v * 1e7); };
  for (Eigen::Index i = 0; i < za.size(); ++i) {
    const auto ka = std::make_tuple(key(za.data()[i].real()), key(za.data()[i].imag()));
    const auto kb = std::make_tuple(key(zb.data()[i].real()), key(zb.data()[i].imag()));
    if (ka != kb) return ka > kb;
  }
  return false;
}

}  // namespace

StarAlgebra::StarAlgebra(std::size_t n, std::vector<CMatrix> basis,
                         std::vector<WedderburnBlock> blocks,
                         NumericOptions options)
    : n_(n),
      basis_(std::move(basis)),
      blocks_(std::move(blocks)),
      options_(options) {}

bool StarAlgebra::contains(const CMatrix& a, double tol) const {
  return relative_distance_to_span(basis_, a) <= tol;
}

StarAlgebra saturate_star_algebra(const std::vector<CMatrix>& generators,
                                  std::size_t n, const NumericOptions& options) {
  const auto m = static_cast<Eigen::Index>(n);
  std::vector<CMatrix> gens;
  for (const auto& g : generators) {
    if (g.rows() != m || g.cols() != m) {
      throw InvalidInput("saturate_star_algebra: generator is not n x n");
    }
    gens.push_back(g);
    gens.push_back(g.adjoint());
  }
  std::vector<CMatrix> basis;
  std::vector<CMatrix> frontier = extend_basis(basis, {identity_matrix(n)}, options.tol);
  // span of words: S_{k+1} = S_k + S_k * gens, only new directions need
  // multiplying again.
  while (!frontier.empty() && basis.size() < n * n) {
    std::vector<CMatrix> candidates;
    candidates.reserve(frontier.size() * gens.size());
    for (const auto& f : frontier) {
      for (const auto& g : gens) candidates.push_back(f * g);
    }
    frontier = extend_basis(basis, candidates, options.tol);
  }
  std::uint64_t seed_used = options.seed;
  auto blocks = block_structure(basis, n, options.seed, options.tol, &seed_used);
  return StarAlgebra(n, std::move(basis), std::move(blocks),
                     NumericOptions{options.tol, seed_used});
}

std::vector<CMatrix> commutant(const std::vector<CMatrix>& s, std::size_t n,
                               double tol) {
  const CMatrix id = identity_matrix(n);
  StackedOperator op(static_cast<Eigen::Index>(n * n));
  for (const auto& a : s) {
    if (static_cast<std::size_t>(a.rows()) != n || static_cast<std::size_t>(a.cols()) != n) {
      throw InvalidInput("commutant: matrix is not n x n");
    }
    op.add(sandwich_operator(a, id) - sandwich_operator(id, a));
  }
  const CMatrix null = op.nullspace(tol);
  std::vector<CMatrix> out;
  for (Eigen::Index k = 0; k < null.cols(); ++k) out.push_back(unvec_rm(null.col(k), n));
  return out;
}

std::vector<CMatrix> algebra_center(const std::vector<CMatrix>& basis,
                                    std::size_t n, double tol) {
  const auto d = static_cast<Eigen::Index>(basis.size());
  StackedOperator op(d);
  for (const auto& bj : basis) {
    CMatrix rows(static_cast<Eigen::Index>(n * n), d);
    for (Eigen::Index k = 0; k < d; ++k) {
      const auto& bk = basis[static_cast<std::size_t>(k)];
      rows.col(k) = vec_rm(bk * bj - bj * bk);
    }
    op.add(rows);
  }
  const CMatrix coeffs = op.nullspace(tol);
  std::vector<CMatrix> out;
  for (Eigen::Index c = 0; c < coeffs.cols(); ++c) {
    CMatrix z = CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index k = 0; k < d; ++k) z += coeffs(k, c) * basis[static_cast<std::size_t>(k)];
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<CMatrix> random_spectral_decomposition(
    const std::vector<CMatrix>& basis, std::size_t n, std::mt19937_64& rng,
    double tol) {
  const auto m = static_cast<Eigen::Index>(n);
  CMatrix h = CMatrix::Zero(m, m);
  for (const auto& b : basis) h += random_complex(rng) * b;
  h = (0.5 * (h + h.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  const Eigen::VectorXd& ev = eig.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  const double merge = 10.0 * tol * scale, split = std::sqrt(tol) * scale;
  std::vector<CMatrix> clusters;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= m; ++i) {
    if (i < m) {
      const double gap = ev(i) - ev(i - 1);
      if (gap <= merge) continue;
      if (gap < split) throw NumericalError("degenerate center sample");
    }
    clusters.push_back(eig.eigenvectors().middleCols(start, i - start));
    start = i;
  }
  return clusters;
}

std::vector<WedderburnBlock> block_structure(const std::vector<CMatrix>& basis,
                                             std::size_t n, std::uint64_t seed,
                                             double tol,
                                             std::uint64_t* seed_used) {
  const std::vector<CMatrix> center = algebra_center(basis, n, tol);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
    std::vector<CMatrix> clusters;
    try {
      clusters = random_spectral_decomposition(center, n, rng, tol);
    } catch (const NumericalError&) {
      continue;
    }
    if (clusters.size() != center.size()) continue;
    std::vector<WedderburnBlock> blocks;
    for (const auto& v : clusters) {
      WedderburnBlock blk;
      blk.central_projection = v * v.adjoint();
      std::vector<CMatrix> corner;
      corner.reserve(basis.size());
      for (const auto& b : basis) corner.push_back(blk.central_projection * b);
      const auto corner_dim = static_cast<double>(orthonormal_span(corner, tol).size());
      const double k = std::sqrt(corner_dim);
      if (std::abs(k - std::round(k)) > kIntegerSnap || k < 0.5) {
        throw NumericalError("block_structure: corner dimension is not a square");
      }
      blk.size = static_cast<std::size_t>(std::llround(k));
      const double mult = static_cast<double>(v.cols()) / static_cast<double>(blk.size);
      if (std::abs(mult - std::round(mult)) > kIntegerSnap) {
        throw NumericalError("block_structure: non-integral multiplicity");
      }
      blk.multiplicity = static_cast<std::size_t>(std::llround(mult));
      blocks.push_back(std::move(blk));
    }
    std::sort(blocks.begin(), blocks.end(), block_less);
    if (seed_used) *seed_used = seed + static_cast<std::uint64_t>(attempt);
    return blocks;
  }
  throw NumericalError("degenerate center sample");
}

CMatrix unitary_intertwiner(const std::vector<CMatrix>& pi,
                            const std::vector<CMatrix>& rho,
                            const NumericOptions& options) {
  if (pi.size() != rho.size() || pi.empty()) {
    throw InvalidInput("unitary_intertwiner: image lists differ in length");
  }
  const Eigen::Index big = pi.front().rows();
  const CMatrix id = CMatrix::Identity(big, big);
  StackedOperator op(big * big);
  for (std::size_t a = 0; a < pi.size(); ++a) {
    if (pi[a].rows() != big || rho[a].rows() != big) {
      throw InvalidInput("unitary_intertwiner: images have different sizes");
    }
    op.add(sandwich_operator(pi[a], id) - sandwich_operator(id, rho[a]));
  }
  const CMatrix space = op.nullspace(options.tol);
  if (space.cols() == 0) throw PreconditionError("not equivalent");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(attempt));
    CVector t = CVector::Zero(big * big);
    for (Eigen::Index k = 0; k < space.cols(); ++k) t += random_complex(rng) * space.col(k);
    const CMatrix tm = unvec_rm(t, static_cast<std::size_t>(big));
    Eigen::JacobiSVD<CMatrix> svd(tm);
    const auto& s = svd.singularValues();
    if (s(s.size() - 1) < std::sqrt(options.tol) * s(0)) continue;
    CMatrix u = unitary_polar_factor(tm);
    double residual = 0.0;
    for (std::size_t a = 0; a < pi.size(); ++a) {
      residual = std::max(residual, max_abs(pi[a] - u * rho[a] * u.adjoint()));
    }
    if (residual <= 1e-8) return u;
  }
  throw PreconditionError("not equivalent");
}

}  // namespace coact
