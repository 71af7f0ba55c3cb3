// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "qpvar/sequences.hpp"
#include "test_spaces.hpp"

using namespace qpvar;
using namespace qpvar::testing;

TEST_CASE("convergence of eventually periodic sequences") {
  FiniteQPSpace s = e1();
  EPSequence ab{{}, {0, 1}};
  CHECK(converges_to(s, ab, 0));       // d(a,a) = d(a,b) = 0
  CHECK_FALSE(converges_to(s, ab, 1));  // d(b,a) = 1
  CHECK(converges_to(s, {{}, {1}}, 1));
  CHECK(limit_set(s, {{}, {1}}) == PointSet{0, 1});
  CHECK(limit_set(s, ab) == PointSet{0});
  CHECK(limit_set(e2(), {{}, {0, 1}}).empty());
  CHECK(limit_set(e2(), {{}, {0}}) == PointSet{0});
}

TEST_CASE("preperiod never matters") {
  FiniteQPSpace s = e1();
  CHECK(limit_set(s, {{1, 1, 0}, {0}}) == limit_set(s, {{}, {0}}));
  CHECK(is_right_k_cauchy(s, {{1, 0}, {0}}));
}

TEST_CASE("K-Cauchy classification") {
  FiniteQPSpace s = e1();
  EPSequence ab{{}, {0, 1}};
  // converges to a but is not right K-Cauchy: d(b,a) = 1
  CHECK_FALSE(is_right_k_cauchy(s, ab));
  CHECK(converges_to(s, ab, 0));
  CHECK(is_right_k_cauchy(s, {{}, {0}}));
  CHECK(is_left_k_cauchy(s, {{}, {0}}));
  FiniteQPSpace p = pseudo();
  CHECK(is_right_k_cauchy(p, {{}, {0, 1}}));
  CHECK(is_left_k_cauchy(p, {{}, {0, 1}}));
  // left K-Cauchy iff right K-Cauchy in the conjugate
  FiniteQPSpace conj = conjugate(s);
  CHECK(is_left_k_cauchy(conj, ab) == is_right_k_cauchy(s, ab));
}

TEST_CASE("finite spaces are sequentially right K-complete") {
  auto cert = right_k_complete_check(e1());
  CHECK(cert.pass);
  // the only all-pairs-zero cycles are {a} and {b}
  REQUIRE(cert.cycles.size() == 2);
  CHECK(cert.cycles[0].cycle_values == PointSet{0});
  CHECK(cert.cycles[1].cycle_values == PointSet{1});

  RationalMatrix one(1);
  CHECK(right_k_complete_check(FiniteQPSpace({"a"}, std::move(one))).pass);

  auto pseudo_cert = right_k_complete_check(pseudo());
  CHECK(pseudo_cert.pass);
  CHECK(pseudo_cert.cycles.size() == 3);  // {a}, {b}, {a,b}
}

TEST_CASE("liminf of phi along a sequence") {
  FiniteQPSpace s = e1();
  Objective f = phi({ExtReal(Rational(0)), ExtReal(Rational(1))});
  CHECK(liminf_phi(s, {{}, {0, 1}}, f) == ExtReal(Rational(0)));
  CHECK(liminf_phi(s, {{}, {1}}, f) == ExtReal(Rational(1)));
  Objective all_inf = phi({ExtReal::infinity(), ExtReal::infinity()});
  CHECK(liminf_phi(s, {{}, {0, 1}}, all_inf) == ExtReal::infinity());
}

TEST_CASE("sequence syntax parsing") {
  FiniteQPSpace s = e1();
  EPSequence seq = parse_ep_sequence(s, "pre=[a,b];cycle=[b]");
  CHECK(seq.preperiod == std::vector<int>{0, 1});
  CHECK(seq.cycle == std::vector<int>{1});
  CHECK(parse_ep_sequence(s, "cycle=[a]").preperiod.empty());
  CHECK_THROWS_AS(parse_ep_sequence(s, "cycle=[]"), PreconditionError);
  CHECK_THROWS_AS(parse_ep_sequence(s, "cycle=[z]"), PreconditionError);
  CHECK_THROWS_AS(parse_ep_sequence(s, "pre=[a]"), PreconditionError);
}
