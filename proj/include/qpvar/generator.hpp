// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "qpvar/objective.hpp"
#include "qpvar/space.hpp"
#include "qpvar/variational.hpp"

namespace qpvar {

/// Deterministic per seed across platforms: draws come straight from
/// mt19937_64 with modulo reduction (std distributions are
/// implementation-defined and would break byte-stable output).
class InstanceGenerator {
 public:
  struct Options {
    int max_n = 8;
    int zero_percent = 30;  // off-diagonal zero-distance density, pre-repair
    int inf_percent = 15;   // density of +inf objective values
  };

  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}
  InstanceGenerator(std::uint64_t seed, Options options)
      : rng_(seed), options_(options) {}

  /// Random nonnegative rational matrix, QM2 repaired by min-plus
  /// transitive closure (preserves the zero diagonal and nonnegativity),
  /// plus a random proper objective.
  std::pair<FiniteQPSpace, Objective> next_instance();

  /// Symmetric quasi-metric (hence metric, T1) instance for the classical
  /// special case.
  std::pair<FiniteQPSpace, Objective> next_metric_instance();

  /// Random valid Caristi map: T(x) uniform over S(x) (single-valued) or a
  /// random nonempty set meeting S(x) (set-valued), chosen at random.
  CaristiMap random_caristi_map(const FiniteQPSpace& s, const Objective& phi);

  /// Random (epsilon, lambda, x0) with phi(x0) <= epsilon + inf phi.
  FullEkelandParams random_full_params(const FiniteQPSpace& s, const Objective& phi);

  PointSet random_subset(int n);
  int random_point(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

 private:
  Rational random_distance();
  Objective random_objective(int n);

  std::mt19937_64 rng_;
  Options options_;
};

/// All-pairs min-plus closure; turns any nonnegative zero-diagonal matrix
/// into a QM2-valid one.
void min_plus_closure(RationalMatrix& m);

}  // namespace qpvar
