// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "qpvar/incompleteness.hpp"

using namespace qpvar;

TEST_CASE("demo space truncations") {
  CHECK(demo_point_value(1) == Rational(1));
  CHECK(demo_point_value(4) == Rational(1, 4));
  CHECK(demo_distance(1, 2) == Rational(1, 2));
  CHECK(demo_distance(2, 1) == Rational(0));
  CHECK(demo_distance(1, 3) == Rational(2, 3));

  FiniteQPSpace s = demo_space(3);
  CHECK(s.size() == 3);
  CHECK(s.label(0) == "x1");
  CHECK(s.d(0, 1) == Rational(1, 2));
  CHECK(s.d(1, 0) == Rational(0));
  CHECK(s.d(0, 2) == Rational(2, 3));
  CHECK(s.report().ok());
  CHECK_FALSE(s.is_t1());  // the zero reverse distances collapse T1
  CHECK_THROWS_AS(demo_space(1), PreconditionError);

  Objective f = counterexample_phi(s);
  CHECK(f.at(0) == ExtReal(Rational(1)));
  CHECK(f.at(1) == ExtReal(Rational(1, 2)));
  CHECK(f.at(2) == ExtReal(Rational(1, 4)));
}

TEST_CASE("Cauchy without convergence") {
  CauchyReport report = verify_cauchy_not_convergent(8);
  CHECK(report.pass);
  CHECK(report.right_k_cauchy);
  CHECK(report.left_k_cauchy);
  REQUIRE(report.witnesses.size() == 8);
  // witness for candidate x_2: eps = 1/4, cutoff 4, d(x_2, x_4) = 1/4 >= eps
  const auto& w = report.witnesses[1];
  CHECK(w.k == 2);
  CHECK(w.eps == Rational(1, 4));
  CHECK(w.cutoff == 4);
  CHECK(w.tail_at_cutoff == Rational(1, 4));
  CHECK(w.verified);
  // every witness is closed-form, so the cutoff may exceed the truncation
  CHECK(report.witnesses.back().cutoff == 16);
}

TEST_CASE("the chain refuting weak Ekeland") {
  RefutationReport report = refute_weak_ekeland(6);
  CHECK(report.pass);
  CHECK(report.no_weak_ekeland_point_below_n);
  REQUIRE(report.chain.size() == 5);

  // k = 1: phi(x_2) + d(x_2, x_1) = 1/2 + 0 <= 3/4 < 1 = phi(x_1)
  CHECK(report.chain[0].lhs == Rational(1, 2));
  CHECK(report.chain[0].mid == Rational(3, 4));
  CHECK(report.chain[0].phi_k == Rational(1));
  CHECK(report.chain[0].ok);
  // k = 5: 1/32 <= 3/64 < 1/16
  CHECK(report.chain[4].lhs == Rational(1, 32));
  CHECK(report.chain[4].mid == Rational(3, 64));
  CHECK(report.chain[4].phi_k == Rational(1, 16));

  // the emitted selection is T(x_k) = x_{k+1} with the boundary point fixed
  REQUIRE(report.caristi_refuting_map.size() == 6);
  CHECK(report.caristi_refuting_map[0] == 1);
  CHECK(report.caristi_refuting_map[5] == 5);

  SUBCASE("reconciliation: the finite truncation is complete") {
    // weak_ekeland on the truncation must settle on the boundary point x_N,
    // the one point the chain argument cannot reach
    CHECK(report.reconciliation_ok);
    CHECK(report.reconciliation_z == 5);
    FiniteQPSpace s = demo_space(6);
    Objective f = counterexample_phi(s);
    CHECK(weak_ekeland(s, f).z == report.reconciliation_z);
  }
}

TEST_CASE("refutation sweep over truncation sizes") {
  for (int n : {2, 3, 5, 8, 16, 64}) {
    CAPTURE(n);
    CHECK(verify_cauchy_not_convergent(n).pass);
    RefutationReport r = refute_weak_ekeland(n);
    CHECK(r.pass);
    CHECK(r.reconciliation_z == n - 1);
  }
}

TEST_CASE("reports serialize") {
  FiniteQPSpace s = demo_space(3);
  Json cauchy = to_json(verify_cauchy_not_convergent(3));
  CHECK(cauchy["pass"].get<bool>());
  Json refutation = to_json(refute_weak_ekeland(3), s);
  CHECK(refutation["pass"].get<bool>());
  CHECK(refutation["reconciliation_z"] == "x3");
  CHECK(refutation["caristi_refuting_map"]["x1"] == "x2");
}
