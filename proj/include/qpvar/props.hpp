// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qpvar/generator.hpp"
#include "qpvar/objective.hpp"
#include "qpvar/space.hpp"

namespace qpvar {

/// First failure wins; detail names the violated law.
struct CheckResult {
  bool ok = true;
  std::string detail;
};

// Per-suite invariant checkers over one generated instance. These back
// both the prop-test CLI command and the acceptance suite.

/// Ball/closure/up-down-set/saturation laws, Kuratowski closure axioms,
/// closed balls closed in the conjugate space, symmetrization/T1 link.
/// Subsets are sampled through the generator (plus all singletons).
CheckResult check_axioms_topology(const FiniteQPSpace& s, InstanceGenerator& gen);

/// order_class vs. qm3/t1 flags, exhaustive transitivity of the
/// specialization preorder, open implies upward closed, closed implies
/// downward closed, saturation path equality (n <= 12).
CheckResult check_order(const FiniteQPSpace& s, InstanceGenerator& gen);

/// lsc <=> nearly lsc and d-monotone, plus the sequence-level cross-check
/// over all EPSequences with cycle size <= 2.
CheckResult check_semicontinuity(const FiniteQPSpace& s, const Objective& phi);

/// S-set laws (i)-(v), the preorder view of S, and Picard trace laws from
/// `starts` random starting points.
CheckResult check_sset_picard(const FiniteQPSpace& s, const Objective& phi,
                              InstanceGenerator& gen, int starts);

/// The four principle solvers with certificate re-verification; full
/// Ekeland and Caristi on `rounds` random parameterizations each.
CheckResult check_principles(const FiniteQPSpace& s, const Objective& phi,
                             InstanceGenerator& gen, int rounds);

/// Instance-level three-way equivalence plus, for symmetric quasi-metric
/// inputs, the classical strict-inequality form with S(z) = {z}.
CheckResult check_equivalence(const FiniteQPSpace& s, const Objective& phi);

/// Runs every suite above on one instance.
CheckResult check_all(const FiniteQPSpace& s, const Objective& phi,
                      InstanceGenerator& gen);

}  // namespace qpvar
