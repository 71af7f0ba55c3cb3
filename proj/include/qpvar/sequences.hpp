// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qpvar/objective.hpp"
#include "qpvar/space.hpp"

namespace qpvar {

/// Eventually periodic sequence: preperiod ++ cycle ++ cycle ++ ...
/// Convergence and Cauchy properties are exactly decidable on this class.
struct EPSequence {
  std::vector<int> preperiod;
  std::vector<int> cycle;  // nonempty
};

/// Parses "pre=[a,b];cycle=[c,d]" (pre= part optional) against the
/// space's labels.
EPSequence parse_ep_sequence(const FiniteQPSpace& s, const std::string& text);

/// d-convergence x_n -> x means d(x, x_n) -> 0; over a finite value set
/// this forces d(x, v) = 0 for every cycle value v.
bool converges_to(const FiniteQPSpace& s, const EPSequence& seq, int x);

PointSet limit_set(const FiniteQPSpace& s, const EPSequence& seq);

/// Right: d(x_m, x_n) < eps for all n_eps <= n < m. On an EPSequence this
/// holds iff d(u,v) = 0 for every ordered pair of cycle values (each such
/// pair recurs as (x_m, x_n) with m > n). The left notion reduces to the
/// same cycle criterion under the dual quantification.
bool is_right_k_cauchy(const FiniteQPSpace& s, const EPSequence& seq);
bool is_left_k_cauchy(const FiniteQPSpace& s, const EPSequence& seq);

struct CompletenessCertificate {
  struct CycleEntry {
    PointSet cycle_values;  // all-pairs-zero subset
    int limit;              // a verified limit of the induced sequence
  };
  std::vector<CycleEntry> cycles;
  bool pass = false;
};

/// Verifies sequential right K-completeness of a finite space: every
/// right-K-Cauchy EPSequence converges. Candidate cycles are exactly the
/// nonempty subsets C with d(u,v) = 0 for all u,v in C; a failure would be
/// an implementation bug, reported via std::logic_error. n <= 16.
CompletenessCertificate right_k_complete_check(const FiniteQPSpace& s);

/// Tail liminf of phi along the sequence: the minimum of phi over the
/// cycle values.
ExtReal liminf_phi(const FiniteQPSpace& s, const EPSequence& seq, const Objective& phi);

}  // namespace qpvar
