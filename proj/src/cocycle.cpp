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

#include "coact/cocycle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "coact/errors.hpp"

namespace coact {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

Complex root_of_unity(std::int64_t k, std::int64_t m) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
  return std::polar(1.0, angle);
}

void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* what) {
  if (a != b && !(*a == *b)) throw InvalidInput(std::string(what) + ": group mismatch");
}

}  // namespace

Cocycle::Cocycle(GroupPtr group, std::int64_t modulus,
                 std::vector<std::int64_t> exponents)
    : group_(std::move(group)), modulus_(modulus), exponents_(std::move(exponents)) {
  if (modulus_ < 1) throw InvalidInput("cocycle: modulus must be positive");
  const std::size_t n = group_->order();
  if (exponents_.size() != n * n) {
    throw InvalidInput("cocycle: exponent table shape does not match group order");
  }
  for (auto& t : exponents_) t = mod(t, modulus_);
}

Cocycle::Cocycle(GroupPtr group, std::int64_t modulus,
                 const std::vector<std::vector<std::int64_t>>& table)
    : Cocycle(group, modulus, [&] {
        const std::size_t n = group->order();
        if (table.size() != n) {
          throw InvalidInput("cocycle: exponent table shape does not match group order");
        }
        std::vector<std::int64_t> flat;
        flat.reserve(n * n);
        for (const auto& row : table) {
          if (row.size() != n) {
            throw InvalidInput("cocycle: exponent table shape does not match group order");
          }
          flat.insert(flat.end(), row.begin(), row.end());
        }
        return flat;
      }()) {}

Cocycle Cocycle::trivial(GroupPtr group) {
  const std::size_t n = group->order();
  return Cocycle(std::move(group), 1, std::vector<std::int64_t>(n * n, 0));
}

Complex Cocycle::value(Element x, Element y) const {
  return root_of_unity(exponent(x, y), modulus_);
}

std::vector<std::vector<std::int64_t>> Cocycle::table() const {
  const std::size_t n = group_->order();
  std::vector<std::vector<std::int64_t>> rows(n);
  for (std::size_t x = 0; x < n; ++x) {
    rows[x].assign(exponents_.begin() + static_cast<std::ptrdiff_t>(x * n),
                   exponents_.begin() + static_cast<std::ptrdiff_t>((x + 1) * n));
  }
  return rows;
}

bool Cocycle::same_values(const Cocycle& other) const {
  if (!(*group_ == *other.group_)) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    // t/m == t'/m' mod 1
    if (mod(exponents_[i] * other.modulus_ - other.exponents_[i] * modulus_,
            modulus_ * other.modulus_) != 0) {
      return false;
    }
  }
  return true;
}

Cocycle Cocycle::reduced() const {
  std::int64_t g = modulus_;
  for (auto t : exponents_) g = std::gcd(g, t);
  std::vector<std::int64_t> e(exponents_);
  for (auto& t : e) t /= g;
  return Cocycle(group_, modulus_ / g, std::move(e));
}

std::int64_t Cocycle::commutator_exponent(Element x, Element y) const {
  return mod(exponent(x, y) - exponent(y, x), modulus_);
}

CoboundaryData::CoboundaryData(GroupPtr group, std::int64_t modulus,
                               std::vector<std::int64_t> values)
    : group_(std::move(group)), modulus_(modulus), values_(std::move(values)) {
  if (modulus_ < 1) throw InvalidInput("coboundary: modulus must be positive");
  if (values_.size() != group_->order()) {
    throw InvalidInput("coboundary: need one value per group element");
  }
  for (auto& s : values_) s = mod(s, modulus_);
  if (values_[kIdentity] != 0) throw InvalidInput("coboundary: m(e) must be 1");
}

CoboundaryData CoboundaryData::identity(GroupPtr group) {
  const std::size_t n = group->order();
  return CoboundaryData(std::move(group), 1, std::vector<std::int64_t>(n, 0));
}

CoboundaryData CoboundaryData::inverse() const {
  std::vector<std::int64_t> v(values_);
  for (auto& s : v) s = -s;
  return CoboundaryData(group_, modulus_, std::move(v));
}

CocycleReport verify_cocycle(const Cocycle& omega) {
  const FiniteGroup& g = *omega.group();
  const std::int64_t m = omega.modulus();
  CocycleReport report;
  for (Element x = 0; x < g.order(); ++x) {
    if (omega.exponent(x, kIdentity) != 0 || omega.exponent(kIdentity, x) != 0) {
      report.valid = false;
      report.failure = "omega(x,e) = omega(e,x) = 1 fails at x = " + g.label(x);
      report.witness = std::array<Element, 3>{x, kIdentity, kIdentity};
      return report;
    }
  }
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      const Element xy = g.mul(x, y);
      for (Element z = 0; z < g.order(); ++z) {
        const std::int64_t lhs = omega.exponent(x, y) + omega.exponent(xy, z);
        const std::int64_t rhs = omega.exponent(x, g.mul(y, z)) + omega.exponent(y, z);
        if (mod(lhs - rhs, m) != 0) {
          std::ostringstream msg;
          msg << "cocycle identity fails at (" << g.label(x) << ", " << g.label(y)
              << ", " << g.label(z) << ")";
          report.valid = false;
          report.failure = msg.str();
          report.witness = std::array<Element, 3>{x, y, z};
          return report;
        }
      }
    }
  }
  return report;
}

Cocycle apply_coboundary(const Cocycle& omega, const CoboundaryData& m) {
  require_same_group(omega.group(), m.group(), "apply_coboundary");
  const FiniteGroup& g = *omega.group();
  const std::int64_t big = std::lcm(omega.modulus(), m.modulus());
  const std::int64_t scale_w = big / omega.modulus(), scale_m = big / m.modulus();
  const std::size_t n = g.order();
  std::vector<std::int64_t> e(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      e[x * n + y] = omega.exponent(x, y) * scale_w +
                     (m.value(x) + m.value(y) - m.value(g.mul(x, y))) * scale_m;
    }
  }
  return Cocycle(omega.group(), big, std::move(e));
}

bool is_normalized(const Cocycle& omega) {
  const FiniteGroup& g = *omega.group();
  for (Element x = 0; x < g.order(); ++x) {
    if (omega.exponent(x, g.inv(x)) != 0) return false;
  }
  return true;
}

Normalization normalize(const Cocycle& omega) {
  if (auto r = verify_cocycle(omega); !r.valid) {
    throw PreconditionError("normalize: " + r.failure);
  }
  const FiniteGroup& g = *omega.group();
  const std::int64_t m = omega.modulus();
  bool doubled = false;
  if (m % 2 == 0) {
    for (Element x = 1; x < g.order(); ++x) {
      if (g.inv(x) == x && omega.exponent(x, x) % 2 != 0) doubled = true;
    }
  }
  const std::int64_t big = doubled ? 2 * m : m;
  const std::int64_t scale = big / m;
  std::vector<std::int64_t> s(g.order(), 0);
  for (Element x = 1; x < g.order(); ++x) {
    const Element xi = g.inv(x);
    const std::int64_t t = omega.exponent(x, xi) * scale;
    if (xi == x) {
      // m(x)^2 = omega(x, x)^{-1}; t is even unless big is odd
      s[x] = t % 2 == 0 ? -t / 2 : -t * ((big + 1) / 2);
    } else if (x < xi) {
      s[x] = 0;
      s[xi] = -t;
    }
  }
  CoboundaryData cob(omega.group(), big, std::move(s));
  Cocycle out = apply_coboundary(omega, cob);
  if (!is_normalized(out)) throw std::logic_error("normalize: result not normalized");
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      if (mod(out.exponent(x, y) + out.exponent(g.inv(y), g.inv(x)), out.modulus()) != 0) {
        throw std::logic_error("normalize: inverse identity fails");
      }
    }
  }
  return Normalization{std::move(out), std::move(cob)};
}

std::optional<Element> nonregular_witness(const Cocycle& omega, Element x) {
  const FiniteGroup& g = *omega.group();
  for (Element y : centralizer(g, x)) {
    if (omega.commutator_exponent(x, y) != 0) return y;
  }
  return std::nullopt;
}

std::vector<Element> regular_elements(const Cocycle& omega) {
  std::vector<Element> out;
  for (Element x = 0; x < omega.group()->order(); ++x) {
    if (!nonregular_witness(omega, x)) out.push_back(x);
  }
  return out;
}

Cocycle bicharacter_cocycle(const std::vector<std::size_t>& orders) {
  if (orders.empty()) throw InvalidInput("bicharacter_cocycle: need at least one order");
  GroupPtr h;
  std::int64_t big = 1;
  for (std::size_t d : orders) {
    if (d == 0) throw InvalidInput("bicharacter_cocycle: orders must be >= 1");
    h = h ? direct_product(*h, *build_cyclic(d)) : build_cyclic(d);
    big = std::lcm(big, static_cast<std::int64_t>(d));
  }
  const std::size_t nh = h->order();
  // Mixed-radix digits, first factor most significant.
  auto digits = [&](std::size_t idx) {
    std::vector<std::int64_t> out(orders.size());
    for (std::size_t j = orders.size(); j-- > 0;) {
      out[j] = static_cast<std::int64_t>(idx % orders[j]);
      idx /= orders[j];
    }
    return out;
  };
  GroupPtr g = direct_product(*h, *h);
  const std::size_t n = g->order();
  std::vector<std::int64_t> e(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto chi = digits(a % nh);
    for (std::size_t b = 0; b < n; ++b) {
      const auto y = digits(b / nh);
      std::int64_t t = 0;
      for (std::size_t j = 0; j < orders.size(); ++j) {
        t += chi[j] * y[j] * (big / static_cast<std::int64_t>(orders[j]));
      }
      e[a * n + b] = t;
    }
  }
  return Cocycle(std::move(g), big, std::move(e));
}

Cocycle cocycle_of_projrep(const ProjRep& u, const SnapOptions& options) {
  const FiniteGroup& g = *u.group();
  const std::size_t n = g.order();
  const double root_dim = std::sqrt(static_cast<double>(u.dim()));
  std::vector<Complex> scalars(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const CMatrix prod = u.image(x) * u.image(y);
      const CMatrix& target = u.image(g.mul(x, y));
      const Complex c = hs_inner(target, prod) / static_cast<double>(u.dim());
      if ((prod - c * target).norm() / root_dim > options.projective_tol) {
        throw PreconditionError("not projective: U_" + g.label(x) + " U_" + g.label(y) +
                                " is not a scalar multiple of U_" + g.label(g.mul(x, y)));
      }
      if (std::abs(std::abs(c) - 1.0) > options.projective_tol) {
        throw PreconditionError("not unimodular: scalar for (" + g.label(x) + ", " +
                                g.label(y) + ")");
      }
      scalars[x * n + y] = c / std::abs(c);
    }
  }
  for (std::int64_t m = 1; m <= options.max_modulus; ++m) {
    std::vector<std::int64_t> e(n * n);
    bool fits = true;
    for (std::size_t i = 0; i < scalars.size() && fits; ++i) {
      const double turns = std::arg(scalars[i]) / (2.0 * std::numbers::pi);
      const auto k = static_cast<std::int64_t>(std::llround(turns * static_cast<double>(m)));
      fits = std::abs(scalars[i] - root_of_unity(k, m)) <= options.snap_tol;
      e[i] = k;
    }
    if (!fits) continue;
    Cocycle omega(u.group(), m, std::move(e));
    if (auto r = verify_cocycle(omega); !r.valid) {
      throw PreconditionError("not projective: extracted table fails " + r.failure);
    }
    return omega;
  }
  throw PreconditionError("not a root of unity: scalars do not snap to any modulus <= " +
                          std::to_string(options.max_modulus));
}

}  // namespace coact
