// SPDX-License-Identifier: Apache-2.0
#include "qpvar/space.hpp"

#include <algorithm>
#include <unordered_set>

namespace qpvar {

bool is_subset(const PointSet& a, const PointSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  PointSet r = a;
  r.insert(b.begin(), b.end());
  return r;
}

ValidationReport validate_matrix(const RationalMatrix& d) {
  ValidationReport rep;
  const int n = d.size();
  rep.qm1_ok = true;
  for (int i = 0; i < n && rep.qm1_ok; ++i)
    for (int j = 0; j < n; ++j)
      if ((i == j && d(i, j) != 0) || d(i, j) < 0) {
        rep.qm1_ok = false;
        rep.qm1_witness = {i, j};
        break;
      }
  // QM2 is an O(n^3) sweep; rational adds cost a gcd each, so the matrix is
  // scaled to a common denominator once and the checks run over integers
  using boost::multiprecision::cpp_int;
  cpp_int common = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) common = lcm(common, denominator(d(i, j)));
  std::vector<cpp_int> scaled(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      scaled[static_cast<size_t>(i * n + j)] =
          numerator(d(i, j)) * (common / denominator(d(i, j)));
  auto sd = [&](int i, int j) -> const cpp_int& {
    return scaled[static_cast<size_t>(i * n + j)];
  };
  rep.qm2_ok = true;
  for (int i = 0; i < n && rep.qm2_ok; ++i)
    for (int j = 0; j < n && rep.qm2_ok; ++j)
      for (int k = 0; k < n; ++k)
        if (sd(i, k) > sd(i, j) + sd(j, k)) {
          rep.qm2_ok = false;
          rep.qm2_witness = {i, j, k};
          break;
        }
  rep.qm3_ok = true;
  rep.t1_ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (d(i, j) == 0 && d(j, i) == 0) rep.qm3_ok = false;
      if (d(i, j) == 0) rep.t1_ok = false;
    }
  return rep;
}

FiniteQPSpace::FiniteQPSpace(std::vector<std::string> labels, RationalMatrix dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
  if (labels_.empty()) throw PreconditionError("space needs at least one point");
  if (dist_.size() != static_cast<int>(labels_.size()))
    throw PreconditionError("distance matrix size does not match point count");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second)
      throw PreconditionError("duplicate point label: \"" + l + "\"");
  report_ = validate_matrix(dist_);
  if (!report_.qm1_ok) {
    auto [i, j] = *report_.qm1_witness;
    throw PreconditionError("QM1 violated at entry (" + labels_[i] + "," + labels_[j] + ")");
  }
  if (!report_.qm2_ok) {
    auto [i, j, k] = *report_.qm2_witness;
    throw PreconditionError("QM2 violated at triple (" + labels_[i] + "," + labels_[j] +
                            "," + labels_[k] + ")");
  }
}

int FiniteQPSpace::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[static_cast<size_t>(i)] == label) return i;
  return -1;
}

int FiniteQPSpace::require_point(const std::string& label) const {
  int i = index_of(label);
  if (i < 0) throw PreconditionError("unknown point label: \"" + label + "\"");
  return i;
}

PointSet FiniteQPSpace::all_points() const {
  PointSet r;
  for (int i = 0; i < size(); ++i) r.insert(i);
  return r;
}

FiniteQPSpace conjugate(const FiniteQPSpace& s) {
  const int n = s.size();
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = s.d(j, i);
  return FiniteQPSpace(s.labels(), std::move(m));
}

FiniteQPSpace symmetrize(const FiniteQPSpace& s) {
  const int n = s.size();
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = std::max(s.d(i, j), s.d(j, i));
  return FiniteQPSpace(s.labels(), std::move(m));
}

PointSet ball(const FiniteQPSpace& s, int x, const Rational& r, BallKind kind) {
  if (x < 0 || x >= s.size()) throw PreconditionError("ball: point out of range");
  if (r <= 0) throw PreconditionError("ball: radius must be positive");
  PointSet out;
  for (int y = 0; y < s.size(); ++y) {
    bool in = kind == BallKind::Open ? s.d(x, y) < r : s.d(x, y) <= r;
    if (in) out.insert(y);
  }
  return out;
}

PointSet closure(const FiniteQPSpace& s, const PointSet& a) {
  PointSet out;
  for (int x = 0; x < s.size(); ++x)
    for (int p : a)
      if (s.d(x, p) == 0) {
        out.insert(x);
        break;
      }
  return out;
}

bool is_open(const FiniteQPSpace& s, const PointSet& a) {
  for (int x : a)
    for (int y = 0; y < s.size(); ++y)
      if (!a.contains(y) && s.d(x, y) == 0) return false;
  return true;
}

bool is_closed(const FiniteQPSpace& s, const PointSet& a) { return closure(s, a) == a; }

}  // namespace qpvar
