// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qpvar/objective.hpp"
#include "qpvar/space.hpp"
#include "qpvar/variational.hpp"

namespace qpvar {

// A concrete incomplete countable quasi-pseudometric space, examined
// through finite truncations: X = {1/k : k >= 1} with
// d(x,y) = max(x - y, 0). The designated sequence x_k = 1/k is right
// K-Cauchy (d(x_m, x_n) = 0 for m > n) but has no limit in the infinite
// space, and the induced objective phi(x_k) = 2^(1-k) defeats the weak
// Ekeland constancy condition at every x_k.

/// Value of the k-th sequence point, 1/k (1-based).
Rational demo_point_value(int k);

/// Exact distance oracle d(1/j, 1/k) = max(1/j - 1/k, 0) for arbitrary
/// indices; defined independently of any truncation.
Rational demo_distance(int j, int k);

/// Truncation to the first N points, labels "x1".."xN". Validates QM1/QM2
/// on construction. N >= 2.
FiniteQPSpace demo_space(int n);

/// phi(x_k) = 2^(1-k). The infinite-space definition also assigns +inf off
/// the sequence; a truncation contains no such points, which the reports
/// flag explicitly.
Objective counterexample_phi(const FiniteQPSpace& truncation);

struct NonConvergenceWitness {
  int k = 0;              // candidate limit x_k
  Rational eps;           // 1/(2k)
  int cutoff = 0;         // n >= 2k
  Rational tail_at_cutoff;  // d(x_k, x_cutoff), >= eps
  bool verified = false;
};

struct CauchyReport {
  int n = 0;
  bool right_k_cauchy = false;        // d(x_m, x_n) = 0 for all m > n <= N
  bool left_k_cauchy = false;         // holds with cutoff ceil(1/eps)
  std::vector<NonConvergenceWitness> witnesses;
  bool pass = false;
};

/// (a) exact pairwise check of the right K-Cauchy property on the
/// truncation; (b) a symbolic non-convergence witness per candidate limit:
/// d(x_k, x_n) = 1/k - 1/n is nondecreasing in n, so verifying
/// d(x_k, x_2k) >= 1/(2k) certifies the whole tail. Witnesses are
/// closed-form, not prefix-sampled.
CauchyReport verify_cauchy_not_convergent(int n);

struct RefutationStep {
  int k = 0;
  Rational lhs;    // phi(x_{k+1}) + d(x_{k+1}, x_k)
  Rational mid;    // 3 / 2^(k+1)
  Rational phi_k;  // 2^(1-k)
  bool ok = false;
};

struct RefutationReport {
  int n = 0;
  std::vector<RefutationStep> chain;     // for all k < N
  std::vector<int> caristi_refuting_map;  // T(x_k) = x_{k+1}, last point fixed
  bool no_weak_ekeland_point_below_n = false;
  /// The truncation itself is finite, hence complete: weak_ekeland on it
  /// must return x_N, the one point the refutation cannot reach.
  int reconciliation_z = -1;
  bool reconciliation_ok = false;
  bool pass = false;
};

/// Per-k exact verification of the chain
/// phi(x_{k+1}) + d(x_{k+1}, x_k) <= 3/2^(k+1) < 2^(1-k) = phi(x_k),
/// so x_{k+1} lies in S(x_k) with strictly smaller phi: no x_k with k < N
/// satisfies the weak Ekeland constancy condition. The emitted selection
/// T(x_k) = x_{k+1} is the Caristi-refuting map of the equivalence proof
/// (on the infinite space; the truncation boundary point x_N is excluded
/// from the claim and reported as such).
RefutationReport refute_weak_ekeland(int n);

Json to_json(const CauchyReport& report);
Json to_json(const RefutationReport& report, const FiniteQPSpace& truncation);

}  // namespace qpvar
