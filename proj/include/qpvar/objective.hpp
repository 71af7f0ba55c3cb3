// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qpvar/space.hpp"

namespace qpvar {

/// Total map point -> ExtReal. On a finite space a proper objective is
/// automatically bounded below.
class Objective {
 public:
  /// One value per point of the space, in point order.
  explicit Objective(std::vector<ExtReal> values) : values_(std::move(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  const ExtReal& at(int i) const { return values_[static_cast<size_t>(i)]; }
  const std::vector<ExtReal>& values() const { return values_; }

 private:
  std::vector<ExtReal> values_;
};

/// dom phi is nonempty.
bool is_proper(const Objective& phi);

/// Minimum over all points; +inf iff improper.
ExtReal inf_phi(const Objective& phi);

/// Points attaining inf_phi. For an improper phi this is every point
/// (minimum of the constant +inf map); callers needing properness must
/// check is_proper first.
PointSet argmin_set(const Objective& phi);

struct MonotoneResult {
  bool ok = true;
  std::optional<std::pair<int, int>> witness;  // x <= y with phi(x) > phi(y)
};

/// x <=_d y implies phi(x) <= phi(y), checked over all pairs with d(x,y)=0.
MonotoneResult is_d_monotone(const FiniteQPSpace& s, const Objective& phi);

/// On a finite space lsc reduces to d-monotonicity (nearly lsc is vacuous).
bool is_lsc(const FiniteQPSpace& s, const Objective& phi);

struct NearlyLscCertificate {
  bool ok = true;
  std::string reason;
};

/// Always true on a finite space: there is no infinite sequence of
/// pairwise-distinct points, so the defining condition is vacuous. Kept as
/// an operation so theorem statements stay executable.
NearlyLscCertificate is_nearly_lsc(const FiniteQPSpace& s, const Objective& phi);

}  // namespace qpvar
