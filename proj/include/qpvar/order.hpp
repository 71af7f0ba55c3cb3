// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qpvar/space.hpp"

namespace qpvar {

/// Specialization preorder: x <= y iff d(x,y) = 0. Reflexive by QM1,
/// transitive by QM2; antisymmetric iff the space is a quasi-metric.
bool spec_leq(const FiniteQPSpace& s, int x, int y);

enum class OrderClass { Preorder, PartialOrder, Equality };

const char* to_string(OrderClass c);

/// Equality iff T1, partial order iff quasi-metric, preorder always.
OrderClass order_class(const FiniteQPSpace& s);

/// {y : exists x in A, x <= y}.
PointSet up_set(const FiniteQPSpace& s, const PointSet& a);

/// {y : exists x in A, y <= x}.
PointSet down_set(const FiniteQPSpace& s, const PointSet& a);

/// Intersection of all open supersets of A; coincides with up_set(A).
PointSet saturation(const FiniteQPSpace& s, const PointSet& a);

/// Direct enumeration over the full open-set family; test-time oracle for
/// saturation(). Restricted to n <= 12 (2^n subsets), throws above.
PointSet saturation_by_enumeration(const FiniteQPSpace& s, const PointSet& a);

/// Pairs (x,y), x != y, with x <= y and no z strictly between; the
/// Hasse-style reduction printed by the CLI report command. On non-T0
/// spaces the relation is reduced over the preorder as-is.
std::vector<std::pair<int, int>> hasse_edges(const FiniteQPSpace& s);

}  // namespace qpvar
