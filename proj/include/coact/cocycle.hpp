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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coact/group.hpp"
#include "coact/matrix.hpp"
#include "coact/proj_rep.hpp"

namespace coact {

/// A T-valued function on G x G stored exactly: omega(x, y) =
/// exp(2 pi i t[x][y] / m). Entries are kept reduced mod m.
///
/// The constructor only checks the shape, so that broken tables can be
/// inspected with verify_cocycle; loaders reject invalid tables.
class Cocycle {
 public:
  Cocycle(GroupPtr group, std::int64_t modulus, std::vector<std::int64_t> exponents);
  Cocycle(GroupPtr group, std::int64_t modulus,
          const std::vector<std::vector<std::int64_t>>& table);

  static Cocycle trivial(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  std::int64_t modulus() const { return modulus_; }
  std::int64_t exponent(Element x, Element y) const {
    return exponents_[x * group_->order() + y];
  }
  Complex value(Element x, Element y) const;
  std::vector<std::vector<std::int64_t>> table() const;

  /// Same function G x G -> T, whatever the moduli.
  bool same_values(const Cocycle& other) const;
  /// The same function with the smallest modulus.
  Cocycle reduced() const;
  /// Exponent of omega(x, y) conj(omega(y, x)) as a value mod modulus().
  std::int64_t commutator_exponent(Element x, Element y) const;

 private:
  GroupPtr group_;
  std::int64_t modulus_;
  std::vector<std::int64_t> exponents_;
};

/// m : G -> T with m(x) = exp(2 pi i s[x] / modulus) and s[e] = 0.
class CoboundaryData {
 public:
  CoboundaryData(GroupPtr group, std::int64_t modulus, std::vector<std::int64_t> values);

  static CoboundaryData identity(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  std::int64_t modulus() const { return modulus_; }
  const std::vector<std::int64_t>& values() const { return values_; }
  std::int64_t value(Element x) const { return values_[x]; }
  /// Pointwise inverse x -> conj(m(x)).
  CoboundaryData inverse() const;

 private:
  GroupPtr group_;
  std::int64_t modulus_;
  std::vector<std::int64_t> values_;
};

struct CocycleReport {
  bool valid = true;
  std::string failure;
  /// (x, y, z) for the associativity identity; (x, e, e) for unit failures.
  std::optional<std::array<Element, 3>> witness;
};

CocycleReport verify_cocycle(const Cocycle& omega);

/// omega'(x, y) = m(x) m(y) conj(m(xy)) omega(x, y), with modulus
/// lcm(omega.modulus(), m.modulus()).
Cocycle apply_coboundary(const Cocycle& omega, const CoboundaryData& m);

bool is_normalized(const Cocycle& omega);

struct Normalization {
  Cocycle cocycle;
  CoboundaryData coboundary;
};

/// Cohomologous normalized cocycle: omega'(x, x^{-1}) = 1 for all x, where
/// omega' = apply_coboundary(omega, coboundary). Throws PreconditionError if
/// omega is not a valid cocycle.
Normalization normalize(const Cocycle& omega);

/// x with omega(x, y) = omega(y, x) for all y commuting with x.
std::vector<Element> regular_elements(const Cocycle& omega);

/// Some y commuting with x with omega(x, y) != omega(y, x).
std::optional<Element> nonregular_witness(const Cocycle& omega, Element x);

/// G = H x H^ for H = Z_{d_1} x ... x Z_{d_k}, with
/// omega((x, chi), (y, sigma)) = exp(2 pi i sum_j chi_j y_j / d_j).
/// The group is direct_product(H, H) with characters indexed by exponent
/// tuples; the modulus is lcm(d_j).
Cocycle bicharacter_cocycle(const std::vector<std::size_t>& orders);

struct SnapOptions {
  /// Bound on |U_x U_y - c U_xy| (Frobenius, divided by sqrt(dim)) and on
  /// ||c| - 1|.
  double projective_tol = 1e-8;
  /// Distance from c to the nearest exp(2 pi i k / m).
  double snap_tol = 1e-8;
  std::int64_t max_modulus = 256;
};

/// The cocycle of U_x U_y = omega(x, y) U_xy, snapped to exact roots of
/// unity. Throws PreconditionError with "not projective", "not unimodular"
/// or "not a root of unity".
Cocycle cocycle_of_projrep(const ProjRep& u, const SnapOptions& options = {});

}  // namespace coact
