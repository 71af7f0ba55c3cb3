// SPDX-License-Identifier: Apache-2.0
#include "qpvar/order.hpp"

namespace qpvar {

bool spec_leq(const FiniteQPSpace& s, int x, int y) { return s.d(x, y) == 0; }

const char* to_string(OrderClass c) {
  switch (c) {
    case OrderClass::Preorder: return "preorder";
    case OrderClass::PartialOrder: return "partial_order";
    case OrderClass::Equality: return "equality";
  }
  return "?";
}

OrderClass order_class(const FiniteQPSpace& s) {
  if (s.is_t1()) return OrderClass::Equality;
  if (s.is_quasi_metric()) return OrderClass::PartialOrder;
  return OrderClass::Preorder;
}

PointSet up_set(const FiniteQPSpace& s, const PointSet& a) {
  PointSet out;
  for (int y = 0; y < s.size(); ++y)
    for (int x : a)
      if (spec_leq(s, x, y)) {
        out.insert(y);
        break;
      }
  return out;
}

PointSet down_set(const FiniteQPSpace& s, const PointSet& a) {
  PointSet out;
  for (int y = 0; y < s.size(); ++y)
    for (int x : a)
      if (spec_leq(s, y, x)) {
        out.insert(y);
        break;
      }
  return out;
}

PointSet saturation(const FiniteQPSpace& s, const PointSet& a) { return up_set(s, a); }

PointSet saturation_by_enumeration(const FiniteQPSpace& s, const PointSet& a) {
  const int n = s.size();
  if (n > 12)
    throw PreconditionError("saturation_by_enumeration limited to n <= 12");
  PointSet result = s.all_points();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    PointSet u;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) u.insert(i);
    if (!is_subset(a, u) || !is_open(s, u)) continue;
    PointSet next;
    for (int p : result)
      if (u.contains(p)) next.insert(p);
    result = std::move(next);
  }
  return result;
}

std::vector<std::pair<int, int>> hasse_edges(const FiniteQPSpace& s) {
  const int n = s.size();
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !spec_leq(s, x, y)) continue;
      bool covered = false;
      for (int z = 0; z < n && !covered; ++z)
        if (z != x && z != y && spec_leq(s, x, z) && spec_leq(s, z, y) &&
            !spec_leq(s, z, x) && !spec_leq(s, y, z))
          covered = true;
      if (!covered) edges.emplace_back(x, y);
    }
  return edges;
}

}  // namespace qpvar
