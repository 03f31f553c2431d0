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

// Reference computations for the test suites. These do not call into the
// library's decision procedures.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <cstdint>
#include <random>
#include <vector>

#include "coact/coaction.hpp"
#include "coact/cocycle.hpp"
#include "coact/group.hpp"
#include "coact/matrix.hpp"

namespace coact::testing {

inline CMatrix haar_unitary(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const auto k = static_cast<Eigen::Index>(n);
  CMatrix z(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) z(i, j) = {g(rng), g(rng)};
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const Complex d = qr.matrixQR()(i, i);
    if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

inline CMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const auto k = static_cast<Eigen::Index>(n);
  CMatrix z(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) z(i, j) = {g(rng), g(rng)};
  }
  return z;
}

inline InnerData random_inner_data(const GroupPtr& g, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g->order() - 1));
  InnerData d{g, haar_unitary(n, rng), {}};
  for (std::size_t i = 0; i < n; ++i) d.points.push_back(pick(rng));
  return d;
}

// E-maps of a * W, with E'_x(a) = W E_x(W^* a W) W^*.
inline Coaction conjugated(const Coaction& delta, const CMatrix& w) {
  const auto n = static_cast<Eigen::Index>(delta.n());
  const Eigen::Index m = n * n;
  CMatrix ad(m, m), ad_inv(m, m);
  for (Eigen::Index c = 0; c < m; ++c) {
    CMatrix a = CMatrix::Zero(n, n);
    a(c / n, c % n) = 1.0;
    const CMatrix fwd = w * a * w.adjoint();
    const CMatrix back = w.adjoint() * a * w;
    for (Eigen::Index r = 0; r < m; ++r) {
      ad(r, c) = fwd(r / n, r % n);
      ad_inv(r, c) = back(r / n, r % n);
    }
  }
  std::vector<CMatrix> maps;
  for (const auto& e : delta.maps()) maps.push_back(ad * e * ad_inv);
  return Coaction(delta.group(), delta.n(), std::move(maps), delta.blocks());
}

// Applies E_e straight from the stored map, with row-major vectorisation.
inline CMatrix apply_fixed(const Coaction& delta, const CMatrix& a) {
  const auto n = static_cast<Eigen::Index>(delta.n());
  CVector v(n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) v(i * n + j) = a(i, j);
  }
  const CVector w = delta.map(kIdentity) * v;
  CMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = w(i * n + j);
  }
  return out;
}

// Searches for n mutually orthogonal rank-one projections fixed by the
// coaction: draws self-adjoint fixed elements and accepts the first whose
// spectrum is simple and whose eigenprojections are all fixed.
inline bool brute_force_inner(const Coaction& delta, std::uint64_t seed, int trials = 12) {
  std::mt19937_64 rng(seed);
  const auto n = static_cast<Eigen::Index>(delta.n());
  for (int t = 0; t < trials; ++t) {
    const CMatrix r = random_matrix(delta.n(), rng);
    CMatrix h = apply_fixed(delta, r + r.adjoint());
    h = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    bool simple = true;
    for (Eigen::Index i = 1; i < n; ++i) simple &= ev(i) - ev(i - 1) > 1e-6 * scale;
    if (!simple) continue;
    bool fixed = true;
    for (Eigen::Index i = 0; i < n && fixed; ++i) {
      const CMatrix p = es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
      fixed = (apply_fixed(delta, p) - p).norm() <= 1e-7;
    }
    if (fixed) return true;
  }
  return false;
}

// Associativity of the exponent table, checked directly modulo m.
inline bool cocycle_identity_holds(const Cocycle& w) {
  const FiniteGroup& g = *w.group();
  const std::int64_t m = w.modulus();
  auto mod = [m](std::int64_t v) { return ((v % m) + m) % m; };
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      for (Element z = 0; z < g.order(); ++z) {
        const std::int64_t lhs = w.exponent(x, y) + w.exponent(g.mul(x, y), z);
        const std::int64_t rhs = w.exponent(y, z) + w.exponent(x, g.mul(y, z));
        if (mod(lhs - rhs) != 0) return false;
      }
    }
  }
  return true;
}

// Left omega-regular operators l_x e_y = omega(x, y) e_{xy}.
inline std::vector<CMatrix> left_twisted_operators(const Cocycle& w) {
  const FiniteGroup& g = *w.group();
  const auto k = static_cast<Eigen::Index>(g.order());
  std::vector<CMatrix> out;
  for (Element x = 0; x < g.order(); ++x) {
    CMatrix l = CMatrix::Zero(k, k);
    for (Element y = 0; y < g.order(); ++y) l(g.mul(x, y), y) = w.value(x, y);
    out.push_back(l);
  }
  return out;
}

// Rank from the Gram matrix, with an absolute floor so that a matrix of pure
// rounding noise has rank zero.
inline std::size_t numeric_rank(const CMatrix& a, double tol = 1e-6) {
  const CMatrix gram = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(gram, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double floor = tol * tol * std::max(1.0, ev.maxCoeff());
  return static_cast<std::size_t>((ev.array() > floor).count());
}

inline std::size_t span_dim(const std::vector<CMatrix>& mats) {
  const Eigen::Index m = mats.front().size();
  CMatrix cols(m, static_cast<Eigen::Index>(mats.size()));
  for (std::size_t i = 0; i < mats.size(); ++i) {
    cols.col(static_cast<Eigen::Index>(i)) = mats[i].reshaped();
  }
  return numeric_rank(cols);
}

// Dimension of the centre of span{l_x}: coefficient vectors c with
// [l_y, sum_x c_x l_x] = 0 for every y.
inline std::size_t twisted_center_dim(const Cocycle& w) {
  const auto ops = left_twisted_operators(w);
  const auto k = static_cast<Eigen::Index>(ops.size());
  CMatrix sys(k * k * k, k);
  for (Eigen::Index y = 0; y < k; ++y) {
    for (Eigen::Index x = 0; x < k; ++x) {
      const CMatrix c = ops[y] * ops[x] - ops[x] * ops[y];
      sys.block(y * k * k, x, k * k, 1) = c.reshaped();
    }
  }
  return static_cast<std::size_t>(k) - numeric_rank(sys);
}

// Regular elements by definition: omega(x, y) = omega(y, x) for all y
// commuting with x.
inline std::vector<Element> regular_by_definition(const Cocycle& w) {
  const FiniteGroup& g = *w.group();
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Element y = 0; y < g.order() && ok; ++y) {
      if (g.mul(x, y) != g.mul(y, x)) continue;
      ok = std::abs(w.value(x, y) - w.value(y, x)) < 1e-12;
    }
    if (ok) out.push_back(x);
  }
  return out;
}

// S_3 as permutations of {0, 1, 2}; elements are indices into perms().
struct PermutationS3 {
  std::vector<std::array<int, 3>> perms;
  PermutationS3() {
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  std::size_t compose(std::size_t a, std::size_t b) const {
    std::array<int, 3> c{};
    for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
  }
};

// Whether some bijection of elements carries one Cayley table onto the other.
inline bool isomorphic(const FiniteGroup& g, const std::vector<std::vector<std::size_t>>& t) {
  const std::size_t n = g.order();
  if (t.size() != n) return false;
  std::vector<std::size_t> phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  do {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      for (Element y = 0; y < n && ok; ++y) ok = phi[g.mul(x, y)] == t[phi[x]][phi[y]];
    }
    if (ok) return true;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return false;
}

}  // namespace coact::testing
