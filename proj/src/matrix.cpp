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

#include "coact/matrix.hpp"

#include <cmath>

#include "coact/errors.hpp"

namespace coact {

CMatrix identity_matrix(std::size_t n) {
  return CMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

CMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  CMatrix e = CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return e;
}

std::vector<CMatrix> matrix_units(std::size_t n) {
  std::vector<CMatrix> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.push_back(matrix_unit(n, i, j));
  }
  return out;
}

Complex hs_inner(const CMatrix& a, const CMatrix& b) {
  return (a.adjoint() * b).trace();
}

CVector vec_rm(const CMatrix& a) {
  CVector v(a.size());
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) v(k++) = a(i, j);
  }
  return v;
}

CMatrix unvec_rm(const CVector& v, std::size_t rows, std::size_t cols) {
  CMatrix a(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = v(k++);
  }
  return a;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix sandwich_operator(const CMatrix& l, const CMatrix& r) {
  return kron(l, r.transpose());
}

bool all_finite(const CMatrix& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Complex z = a.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool is_unitary(const CMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return max_abs(u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())) <= tol;
}

double max_abs(const CMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

std::size_t decide_rank(const Eigen::VectorXd& singular_values, double tol,
                        double scale) {
  const double lo = tol * scale, hi = std::sqrt(tol) * scale;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < singular_values.size(); ++i) {
    const double s = singular_values(i);
    if (s >= hi) {
      ++rank;
    } else if (s > lo) {
      throw NumericalError("rank decision: singular value " + std::to_string(s) +
                           " lies between tol and sqrt(tol)");
    }
  }
  return rank;
}

Svd svd(const CMatrix& a, bool thin_u, bool full_v) {
  const unsigned opts = (thin_u ? unsigned{Eigen::ComputeThinU} : 0u) |
                        (full_v ? unsigned{Eigen::ComputeFullV} : 0u);
  const Eigen::JacobiSVD<CMatrix> jac(a, opts);
  Svd out;
  out.values = jac.singularValues();
  if (thin_u) out.u = jac.matrixU();
  if (full_v) out.v = jac.matrixV();
  return out;
}

CMatrix nullspace(const CMatrix& op, double tol) {
  const Eigen::Index cols = op.cols();
  if (op.rows() == 0) return CMatrix::Identity(cols, cols);
  const Svd d = svd(op, false, true);
  const Eigen::VectorXd& s = d.values;
  const double scale = s.size() ? std::max(1.0, s(0)) : 1.0;
  const auto rank = static_cast<Eigen::Index>(decide_rank(s, tol, scale));
  return d.v.rightCols(cols - rank);
}

std::vector<CMatrix> orthonormal_span(const std::vector<CMatrix>& mats,
                                      double tol) {
  if (mats.empty()) return {};
  const Eigen::Index rows = mats.front().rows(), cols = mats.front().cols();
  CMatrix stacked(rows * cols, static_cast<Eigen::Index>(mats.size()));
  Eigen::Index used = 0;
  for (const auto& m : mats) {
    const double norm = m.norm();
    if (norm <= tol) continue;
    stacked.col(used++) = vec_rm(m) / norm;
  }
  if (used == 0) return {};
  const Svd d = svd(stacked.leftCols(used), true, false);
  const std::size_t rank = decide_rank(d.values, tol, 1.0);
  std::vector<CMatrix> out;
  out.reserve(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    out.push_back(unvec_rm(d.u.col(static_cast<Eigen::Index>(k)),
                           static_cast<std::size_t>(rows), static_cast<std::size_t>(cols)));
  }
  return out;
}

CMatrix project_onto(const std::vector<CMatrix>& basis, const CMatrix& a) {
  CMatrix out = CMatrix::Zero(a.rows(), a.cols());
  for (const auto& b : basis) out += hs_inner(b, a) * b;
  return out;
}

double relative_distance_to_span(const std::vector<CMatrix>& basis,
                                 const CMatrix& a) {
  const double norm = a.norm();
  if (norm == 0.0) return 0.0;
  return (a - project_onto(basis, a)).norm() / norm;
}

Complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double re = gauss(rng);
  return {re, gauss(rng)};
}

CMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  const auto m = static_cast<Eigen::Index>(n);
  CMatrix g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) g(i, j) = random_complex(rng);
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  // Fix the phases so the distribution is Haar and the result deterministic.
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < m; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

CMatrix unitary_polar_factor(const CMatrix& t) {
  Eigen::JacobiSVD<CMatrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace coact
