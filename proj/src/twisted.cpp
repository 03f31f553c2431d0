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

#include "coact/twisted.hpp"

#include <cmath>
#include <numbers>

#include "coact/errors.hpp"

namespace coact {

namespace {

constexpr double kRelationTol = 1e-12;
constexpr int kMaxAttempts = 8;

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_valid(const Cocycle& omega, const char* what) {
  if (auto r = verify_cocycle(omega); !r.valid) {
    throw PreconditionError(std::string(what) + ": " + r.failure);
  }
}

CMatrix mat4(std::initializer_list<Complex> entries, double scale = 1.0) {
  CMatrix m(4, 4);
  auto it = entries.begin();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = scale * *it++;
  }
  return m;
}

struct Order16Matrices {
  CMatrix a, b, c;
};

Order16Matrices order16_matrices(int variant) {
  if (variant != 1 && variant != 2) throw InvalidInput("order16: variant must be 1 or 2");
  const Complex i{0.0, 1.0};
  Order16Matrices m;
  m.a = mat4({1, 0, 0, 0,  0, -1, 0, 0,  0, 0, i, 0,  0, 0, 0, -i});
  m.b = mat4({0, 1, 0, 0,  1, 0, 0, 0,  0, 0, 0, 1,  0, 0, 1, 0});
  if (variant == 1) {
    m.c = mat4({0, 0, 1, 0,  0, 0, 0, 1,  1, 0, 0, 0,  0, 1, 0, 0});
  } else {
    m.c = mat4({0, 0, -i, 1,  0, 0, 1, -i,  i, 1, 0, 0,  1, i, 0, 0},
               1.0 / std::numbers::sqrt2);
  }
  return m;
}

}  // namespace

std::vector<CMatrix> regular_omega_matrices(const Cocycle& omega) {
  const FiniteGroup& g = *omega.group();
  const auto n = static_cast<Eigen::Index>(g.order());
  std::vector<CMatrix> images;
  images.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    CMatrix r = CMatrix::Zero(n, n);
    for (Element y = 0; y < g.order(); ++y) r(y, g.mul(y, x)) = omega.value(y, x);
    images.push_back(std::move(r));
  }
  return images;
}

ProjRep regular_omega_rep(const Cocycle& omega) {
  require_valid(omega, "regular_omega_rep");
  if (!is_normalized(omega)) {
    throw PreconditionError("regular_omega_rep: cocycle is not normalized");
  }
  return ProjRep(omega.group(), regular_omega_matrices(omega));
}

double universality_margin(const ProjRep& u) {
  const std::size_t n = u.group()->order(), d2 = u.dim() * u.dim();
  if (n > d2) return 0.0;
  CMatrix rows(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d2));
  for (Element x = 0; x < n; ++x) {
    rows.row(x) = vec_rm(u.image(x)).transpose() / std::sqrt(static_cast<double>(u.dim()));
  }
  return svd(rows, false, false).values(static_cast<Eigen::Index>(n) - 1);
}

bool is_universal(const ProjRep& u, double tol) {
  const std::size_t n = u.group()->order(), d2 = u.dim() * u.dim();
  if (n > d2) return false;
  CMatrix rows(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d2));
  for (Element x = 0; x < n; ++x) {
    rows.row(x) = vec_rm(u.image(x)).transpose() / std::sqrt(static_cast<double>(u.dim()));
  }
  return decide_rank(svd(rows, false, false).values, tol, 1.0) == n;
}

StarAlgebra twisted_algebra(const Cocycle& omega, const NumericOptions& options) {
  require_valid(omega, "twisted_algebra");
  const std::size_t n = omega.group()->order();
  StarAlgebra alg = saturate_star_algebra(regular_omega_matrices(omega), n, options);
  if (alg.dim() != n) {
    throw PreconditionError("twisted_algebra: dimension " + std::to_string(alg.dim()) +
                            " != |G| = " + std::to_string(n));
  }
  return alg;
}

CentralTypeResult central_type(const Cocycle& omega, const NumericOptions& options) {
  StarAlgebra alg = twisted_algebra(omega, options);
  CentralTypeResult out{false, 0, alg};
  if (!alg.is_simple()) return out;
  const auto& blk = alg.blocks().front();
  const std::size_t order = omega.group()->order();
  if (blk.size != blk.multiplicity || blk.size * blk.size != order) {
    throw std::logic_error("central_type: simple twisted algebra with block (" +
                           std::to_string(blk.size) + ", " +
                           std::to_string(blk.multiplicity) + ")");
  }
  out.central_type = true;
  out.degree = blk.size;
  return out;
}

std::vector<CMatrix> regular_omega_commutant(const Cocycle& omega) {
  const FiniteGroup& g = *omega.group();
  const auto n = static_cast<Eigen::Index>(g.order());
  std::vector<CMatrix> out;
  out.reserve(g.order());
  for (Element z = 0; z < g.order(); ++z) {
    CMatrix l = CMatrix::Zero(n, n);
    for (Element w = 0; w < g.order(); ++w) l(g.mul(z, w), w) = std::conj(omega.value(z, w));
    out.push_back(std::move(l));
  }
  return out;
}

ProjRep irreducible_cut(const Cocycle& omega, const NumericOptions& options) {
  const auto ct = central_type(omega, options);
  if (!ct.central_type) throw PreconditionError("not central type");
  const std::size_t n = ct.degree, order = omega.group()->order();
  const std::vector<CMatrix> regular = regular_omega_matrices(omega);
  const std::vector<CMatrix> comm = regular_omega_commutant(omega);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(attempt));
    std::vector<CMatrix> clusters;
    try {
      clusters = random_spectral_decomposition(comm, order, rng, options.tol);
    } catch (const NumericalError&) {
      continue;
    }
    if (clusters.size() != n || static_cast<std::size_t>(clusters.front().cols()) != n) continue;
    const CMatrix& v = clusters.front();
    std::vector<CMatrix> images;
    images.reserve(order);
    for (const auto& r : regular) images.push_back(v.adjoint() * r * v);
    ProjRep cut(omega.group(), std::move(images));
    if (commutant(cut.images(), n, options.tol).size() != 1) continue;
    return cut;
  }
  throw NumericalError("irreducible_cut: no minimal projection found");
}

ProjRep clock_shift_rep(std::size_t p) {
  if (!is_prime(p) || p > 97) {
    throw InvalidInput("clock_shift_rep: p must be a prime <= 97");
  }
  GroupPtr zp = build_cyclic(p);
  GroupPtr g = direct_product(*zp, *zp);
  const auto m = static_cast<Eigen::Index>(p);
  std::vector<CMatrix> images;
  images.reserve(p * p);
  for (std::size_t a = 0; a < p; ++a) {
    // diag(g^j, j = 1..p)^a, computed entrywise to keep phases exact.
    CMatrix clock = CMatrix::Zero(m, m);
    for (std::size_t j = 1; j <= p; ++j) {
      const double turns = static_cast<double>((j * a) % p) / static_cast<double>(p);
      clock(static_cast<Eigen::Index>(j - 1), static_cast<Eigen::Index>(j - 1)) =
          std::polar(1.0, 2.0 * std::numbers::pi * turns);
    }
    for (std::size_t b = 0; b < p; ++b) {
      CMatrix shift = CMatrix::Zero(m, m);
      for (std::size_t j = 0; j < p; ++j) {
        shift(static_cast<Eigen::Index>((j + b) % p), static_cast<Eigen::Index>(j)) = 1.0;
      }
      images.push_back(clock * shift);
    }
  }
  return ProjRep(std::move(g), std::move(images));
}

std::vector<RelationCheck> order16_relations(int variant) {
  const auto m = order16_matrices(variant);
  const CMatrix id = identity_matrix(4);
  const CMatrix cinv = m.c.inverse();
  const Complex i{0.0, 1.0};
  std::vector<RelationCheck> out{
      {"AB = -BA", max_abs(m.a * m.b + m.b * m.a)},
      {"A^4 = I", max_abs(m.a * m.a * m.a * m.a - id)},
      {"B^2 = I", max_abs(m.b * m.b - id)},
      {"C^2 = I", max_abs(m.c * m.c - id)},
      {"BC = CB", max_abs(m.b * m.c - m.c * m.b)},
  };
  if (variant == 1) {
    out.push_back({"CAC^-1 = iA^-1", max_abs(m.c * m.a * cinv - i * m.a.inverse())});
  } else {
    out.push_back({"CAC^-1 = AB", max_abs(m.c * m.a * cinv - m.a * m.b)});
  }
  return out;
}

ProjRep order16_rep(int variant) {
  for (const auto& rel : order16_relations(variant)) {
    if (rel.residual > kRelationTol) {
      throw std::logic_error("order16_rep: relation " + rel.relation + " fails");
    }
  }
  const auto m = order16_matrices(variant);
  std::vector<CMatrix> images;
  images.reserve(16);
  for (int x = 0; x < 16; ++x) {
    const int i = x % 4, j = (x / 4) % 2, k = x / 8;
    CMatrix u = identity_matrix(4);
    for (int r = 0; r < i; ++r) u = u * m.a;
    if (j) u = u * m.b;
    if (k) u = u * m.c;
    images.push_back(std::move(u));
  }
  return ProjRep(presented_group_16(variant), std::move(images));
}

}  // namespace coact
