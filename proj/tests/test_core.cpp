// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "qpvar/order.hpp"
#include "qpvar/space.hpp"
#include "test_spaces.hpp"

using namespace qpvar;
using namespace qpvar::testing;

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("2") == Rational(2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1.5"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("inf"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_rational(""), PreconditionError);
}

TEST_CASE("extended reals order and absorb +inf") {
  ExtReal inf = ExtReal::infinity();
  CHECK(ExtReal(Rational(7)) < inf);
  CHECK(inf == inf);
  CHECK_FALSE(inf < inf);
  CHECK((ExtReal(Rational(1, 2)) + inf) == inf);
  CHECK((ExtReal(Rational(1, 2)) + ExtReal(Rational(1, 3))) == ExtReal(Rational(5, 6)));
  CHECK(parse_ext_real("inf") == inf);
}

TEST_CASE("validate_space on the worked examples") {
  const auto& rep = e1().report();
  CHECK(rep.qm1_ok);
  CHECK(rep.qm2_ok);
  CHECK(rep.qm3_ok);
  CHECK_FALSE(rep.t1_ok);

  SUBCASE("nonzero diagonal breaks QM1") {
    RationalMatrix m(2);
    m(0, 0) = 1;
    auto bad = validate_matrix(m);
    CHECK_FALSE(bad.qm1_ok);
    CHECK(bad.qm1_witness == std::pair{0, 0});
    CHECK_THROWS_AS(FiniteQPSpace({"a", "b"}, std::move(m)), PreconditionError);
  }
  SUBCASE("triangle violation reported with its triple") {
    RationalMatrix m(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) m(i, j) = 1;
    m(0, 2) = 5;  // 5 > 1 + 1
    auto bad = validate_matrix(m);
    CHECK(bad.qm1_ok);
    CHECK_FALSE(bad.qm2_ok);
    CHECK(bad.qm2_witness == std::array{0, 1, 2});
  }
  SUBCASE("duplicate labels rejected") {
    RationalMatrix m(2);
    CHECK_THROWS_AS(FiniteQPSpace({"a", "a"}, std::move(m)), PreconditionError);
  }
  SUBCASE("single point space is legal") {
    RationalMatrix m(1);
    FiniteQPSpace s({"a"}, std::move(m));
    CHECK(s.report().ok());
    CHECK(s.is_t1());
  }
}

TEST_CASE("conjugate transposes and is an involution") {
  FiniteQPSpace s = e1();
  FiniteQPSpace conj = conjugate(s);
  CHECK(conj.d(0, 1) == 1);
  CHECK(conj.d(1, 0) == 0);
  CHECK(conjugate(conj).matrix() == s.matrix());
  FiniteQPSpace sym = symmetrize(s);
  CHECK(conjugate(sym).matrix() == sym.matrix());  // symmetric fixed point
}

TEST_CASE("symmetrize takes entrywise max and preserves QM3") {
  FiniteQPSpace sym = symmetrize(e1());
  CHECK(sym.d(0, 1) == 1);
  CHECK(sym.d(1, 0) == 1);
  CHECK(sym.is_quasi_metric());  // E1 is a quasi-metric, d^s a metric
  CHECK(symmetrize(sym).matrix() == sym.matrix());
}

TEST_CASE("balls on E1") {
  FiniteQPSpace s = e1();
  CHECK(ball(s, 0, Rational(1, 2), BallKind::Open) == PointSet{0, 1});
  CHECK(ball(s, 1, Rational(1, 2), BallKind::Open) == PointSet{1});
  CHECK(is_subset(ball(s, 1, Rational(1), BallKind::Open),
                  ball(s, 1, Rational(1), BallKind::Closed)));
  CHECK_THROWS_AS(ball(s, 0, Rational(0), BallKind::Open), PreconditionError);
  CHECK_THROWS_AS(ball(s, 0, Rational(-1), BallKind::Closed), PreconditionError);
}

TEST_CASE("closure and open/closed sets on E1") {
  FiniteQPSpace s = e1();
  CHECK(closure(s, {1}) == PointSet{0, 1});
  CHECK(closure(s, {0}) == PointSet{0});
  CHECK(closure(s, {}).empty());
  CHECK_FALSE(is_closed(s, {1}));
  CHECK(is_closed(s, closure(s, {1})));
  CHECK(is_open(s, {0, 1}));
  CHECK_FALSE(is_open(s, {0}));  // d(a,b) = 0 escapes
}

TEST_CASE("specialization order on the examples") {
  FiniteQPSpace s = e1();
  CHECK(spec_leq(s, 0, 1));
  CHECK_FALSE(spec_leq(s, 1, 0));
  CHECK(spec_leq(s, 0, 0));
  CHECK(order_class(s) == OrderClass::PartialOrder);
  CHECK(order_class(e2()) == OrderClass::Equality);
  CHECK(order_class(pseudo()) == OrderClass::Preorder);
}

TEST_CASE("up/down sets and saturation") {
  FiniteQPSpace s = e1();
  CHECK(down_set(s, {1}) == closure(s, {1}));
  CHECK(up_set(s, {0}) == PointSet{0, 1});
  CHECK(up_set(s, s.all_points()) == s.all_points());
  CHECK(saturation(s, {0}) == PointSet{0, 1});
  CHECK(saturation(e2(), {0}) == PointSet{0});
  CHECK(saturation_by_enumeration(s, {0}) == saturation(s, {0}));
  CHECK(saturation_by_enumeration(e2(), {1}) == PointSet{1});
}

TEST_CASE("closed ball is closed in the conjugate space") {
  for (const auto& s : {e1(), e2(), e3()}) {
    FiniteQPSpace conj = conjugate(s);
    for (int x = 0; x < s.size(); ++x)
      for (const auto& r : {Rational(1, 2), Rational(1), Rational(3)}) {
        CHECK(is_closed(conj, ball(s, x, r, BallKind::Closed)));
        CHECK(is_open(s, ball(s, x, r, BallKind::Open)));
      }
  }
}
