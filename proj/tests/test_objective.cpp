// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "qpvar/objective.hpp"
#include "qpvar/sequences.hpp"
#include "test_spaces.hpp"

using namespace qpvar;
using namespace qpvar::testing;

TEST_CASE("proper / inf / argmin") {
  Objective f = phi({ExtReal(Rational(0)), ExtReal(Rational(1))});
  CHECK(is_proper(f));
  CHECK(inf_phi(f) == ExtReal(Rational(0)));
  CHECK(argmin_set(f) == PointSet{0});

  Objective improper = phi({ExtReal::infinity(), ExtReal::infinity()});
  CHECK_FALSE(is_proper(improper));
  CHECK(inf_phi(improper) == ExtReal::infinity());
  CHECK(argmin_set(improper) == PointSet{0, 1});  // min of the constant +inf map

  Objective constant = phi({ExtReal(Rational(5)), ExtReal(Rational(5))});
  CHECK(inf_phi(constant) == ExtReal(Rational(5)));
  CHECK(argmin_set(constant) == PointSet{0, 1});
}

TEST_CASE("d-monotonicity on E1") {
  FiniteQPSpace s = e1();
  CHECK(is_d_monotone(s, phi({ExtReal(Rational(0)), ExtReal(Rational(1))})).ok);
  auto bad = is_d_monotone(s, phi({ExtReal(Rational(1)), ExtReal(Rational(0))}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness == std::pair{0, 1});
  // on a T1 space the order is equality, so anything is monotone
  CHECK(is_d_monotone(e2(), phi({ExtReal(Rational(9)), ExtReal(Rational(0))})).ok);
}

TEST_CASE("lsc reduces to d-monotonicity; nearly lsc is vacuous") {
  FiniteQPSpace s = e1();
  Objective good = phi({ExtReal(Rational(0)), ExtReal(Rational(1))});
  Objective bad = phi({ExtReal(Rational(1)), ExtReal(Rational(0))});
  CHECK(is_lsc(s, good));
  CHECK_FALSE(is_lsc(s, bad));
  CHECK(is_nearly_lsc(s, bad).ok);  // separation of the two notions
  // sequence witness for non-lsc: cycle [b] converges to a with liminf 0 < 1
  EPSequence b_cycle{{}, {1}};
  CHECK(converges_to(s, b_cycle, 0));
  CHECK(liminf_phi(s, b_cycle, bad) < bad.at(0));
  // constant objectives are lsc anywhere
  CHECK(is_lsc(s, phi({ExtReal(Rational(2)), ExtReal(Rational(2))})));
  CHECK(is_lsc(e2(), phi({ExtReal(Rational(9)), ExtReal(Rational(0))})));
}
