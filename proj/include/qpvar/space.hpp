// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qpvar/rational.hpp"

namespace qpvar {

/// Points are referred to by index into the space's label list.
using PointSet = std::set<int>;

bool is_subset(const PointSet& a, const PointSet& b);
PointSet set_union(const PointSet& a, const PointSet& b);

/// Dense square matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  int size() const { return n_; }
  Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Rational& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * n_ + j];
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

/// Axiom check outcome for a candidate distance matrix.
///   qm1: zero diagonal, nonnegative entries
///   qm2: triangle inequality (first violating triple reported)
///   qm3: no pair x != y with d(x,y) = d(y,x) = 0 (quasi-metric)
///   t1:  d(x,y) > 0 for all x != y
struct ValidationReport {
  bool qm1_ok = false;
  bool qm2_ok = false;
  bool qm3_ok = false;
  bool t1_ok = false;
  std::optional<std::pair<int, int>> qm1_witness;   // offending entry
  std::optional<std::array<int, 3>> qm2_witness;    // (i, j, k)

  bool ok() const { return qm1_ok && qm2_ok; }
};

ValidationReport validate_matrix(const RationalMatrix& d);

/// A finite quasi-pseudometric space: distinct point labels plus an exact
/// distance matrix satisfying QM1 and QM2. dist(i,j) is d(x_i, x_j).
class FiniteQPSpace {
 public:
  /// Throws PreconditionError if labels are not distinct/nonempty or the
  /// matrix fails QM1/QM2 (or is not square against the labels).
  FiniteQPSpace(std::vector<std::string> labels, RationalMatrix dist);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  /// -1 when absent.
  int index_of(const std::string& label) const;
  /// Like index_of but throws PreconditionError when absent.
  int require_point(const std::string& label) const;

  const Rational& d(int i, int j) const { return dist_(i, j); }
  const RationalMatrix& matrix() const { return dist_; }

  const ValidationReport& report() const { return report_; }
  bool is_quasi_metric() const { return report_.qm3_ok; }
  bool is_t1() const { return report_.t1_ok; }

  PointSet all_points() const;

 private:
  std::vector<std::string> labels_;
  RationalMatrix dist_;
  ValidationReport report_;
};

/// d̄(x,y) = d(y,x).
FiniteQPSpace conjugate(const FiniteQPSpace& s);

/// dˢ(x,y) = max(d(x,y), d(y,x)). A metric iff s is a quasi-metric.
FiniteQPSpace symmetrize(const FiniteQPSpace& s);

enum class BallKind { Open, Closed };

/// {y : d(x,y) < r} or {y : d(x,y) <= r}. r must be positive.
PointSet ball(const FiniteQPSpace& s, int x, const Rational& r, BallKind kind);

/// Finite-space closure: {x : exists a in A with d(x,a) = 0}.
PointSet closure(const FiniteQPSpace& s, const PointSet& a);

/// Every x in A has some ball inside A (equivalently min over y outside A
/// of d(x,y) is positive).
bool is_open(const FiniteQPSpace& s, const PointSet& a);

/// closure(A) = A.
bool is_closed(const FiniteQPSpace& s, const PointSet& a);

}  // namespace qpvar
