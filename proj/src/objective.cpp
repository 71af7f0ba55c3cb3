// SPDX-License-Identifier: Apache-2.0
#include "qpvar/objective.hpp"

namespace qpvar {

bool is_proper(const Objective& phi) {
  for (const auto& v : phi.values())
    if (v.is_finite()) return true;
  return false;
}

ExtReal inf_phi(const Objective& phi) {
  ExtReal best = ExtReal::infinity();
  for (const auto& v : phi.values())
    if (v < best) best = v;
  return best;
}

PointSet argmin_set(const Objective& phi) {
  ExtReal best = inf_phi(phi);
  PointSet out;
  for (int i = 0; i < phi.size(); ++i)
    if (phi.at(i) == best) out.insert(i);
  return out;
}

MonotoneResult is_d_monotone(const FiniteQPSpace& s, const Objective& phi) {
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (s.d(x, y) == 0 && phi.at(x) > phi.at(y)) return {false, {{x, y}}};
  return {};
}

bool is_lsc(const FiniteQPSpace& s, const Objective& phi) {
  return is_d_monotone(s, phi).ok;
}

NearlyLscCertificate is_nearly_lsc(const FiniteQPSpace&, const Objective&) {
  return {true, "finite space admits no infinite sequence of distinct terms"};
}

}  // namespace qpvar
