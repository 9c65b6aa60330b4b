#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "modpress/errors.hpp"
#include "modpress/quadratic.hpp"

using namespace modpress;

TEST_CASE("rational construction and floor/ceil") {
  auto r = QuadraticIrrational::rational(5, 2);
  CHECK(r.is_rational());
  CHECK(r.floor() == 2);
  CHECK(r.ceil() == 3);
  CHECK(QuadraticIrrational::rational(-5, 2).floor() == -3);
  CHECK(QuadraticIrrational::rational(4, 2).is_integer());
  CHECK(QuadraticIrrational::rational(4, 2).integer_value() == 2);
}

TEST_CASE("golden-ratio style fixed point (a + sqrt d)/q") {
  // x = (3 + sqrt5)/2, the fixed point of x = 3 - 1/x with root > 1
  auto [plus, minus] = QuadraticIrrational::mobius_fixed_points(3, -1, 1, 0);
  CHECK(plus.to_double() == doctest::Approx(2.618033988749895).epsilon(1e-14));
  CHECK(minus.to_double() == doctest::Approx(0.381966011250105).epsilon(1e-13));
  CHECK(plus.cmp_rational(1, 1) > 0);
  CHECK(minus.cmp_rational(1, 1) < 0);
  CHECK(minus.cmp_rational(0, 1) > 0);

  // 1/plus == minus for this self-conjugate block
  CHECK(plus.reciprocal() == minus);
  // cf step: 1/(3 - x) maps the fixed point to itself
  CHECK(plus.cf_step(3) == plus);
}

TEST_CASE("floor of quadratic irrationals") {
  auto [w, u] = QuadraticIrrational::mobius_fixed_points(4, -1, 1, 0);  // 2 +- sqrt3
  CHECK(w.floor() == 3);
  CHECK(w.ceil() == 4);
  CHECK(u.floor() == 0);
  CHECK(u.to_double() == doctest::Approx(0.2679491924311227));
  CHECK(w.negated().floor() == -4);
}

TEST_CASE("interval encloses value") {
  auto [w, u] = QuadraticIrrational::mobius_fixed_points(6, -1, 1, 0);  // 3 +- sqrt8... check
  Interval iv = w.to_interval();
  CHECK(iv.lo <= w.to_double());
  CHECK(iv.hi >= w.to_double());
  CHECK(iv.width() < 1e-13);
  (void)u;
}

TEST_CASE("exact comparisons across one field") {
  auto [w, u] = QuadraticIrrational::mobius_fixed_points(3, -1, 1, 0);
  CHECK(w.cmp(u) > 0);
  CHECK(u.cmp(w) < 0);
  CHECK(w.cmp(w) == 0);
  // translated order preserved
  CHECK(w.translated(-1).cmp(u) > 0);
  CHECK(w.translated(-3).cmp(u) < 0);
}

TEST_CASE("square_part extracts square factors") {
  CHECK(square_part(1) == 1);
  CHECK(square_part(4) == 2);
  CHECK(square_part(12) == 2);
  CHECK(square_part(49) == 7);
  CHECK(square_part(45) == 3);
  CHECK(square_part(5) == 1);
  CHECK(square_part(720) == 12);  // 720 = 144 * 5
}

TEST_CASE("decompose to p + s sqrt(d0)") {
  // (1 + sqrt 12)/2 = 1/2 + sqrt(3)
  auto v = QuadraticIrrational::make(1, 2, 12);
  auto dec = v.decompose();
  CHECK(dec.d0 == 3);
  CHECK(dec.p.num == 1);
  CHECK(dec.p.den == 2);
  CHECK(dec.s.num == 1);
  CHECK(dec.s.den == 1);
}

TEST_CASE("QuadNum predicate arithmetic") {
  auto [w, u] = QuadraticIrrational::mobius_fixed_points(4, -1, 1, 0);  // 2 +- sqrt3, d = 12
  QuadNum qw = QuadNum::of(w), qu = QuadNum::of(u);
  // u * w = 1 exactly
  QuadNum prod = qw.mul(qu);
  CHECK(prod.sub_int(1).sign() == 0);
  // u + w = 4
  CHECK(qw.add(qu).sub_int(4).sign() == 0);
  CHECK(qw.sub_int(3).sign() > 0);
  CHECK(qw.sub_int(4).sign() < 0);
}

TEST_CASE("perfect square discriminant collapses to rational") {
  // x = 2 - 1/x has double root 1: (2 +- 0)/2
  auto [p, m] = QuadraticIrrational::mobius_fixed_points(2, -1, 1, 0);
  CHECK(p.is_rational());
  CHECK(p.cmp_rational(1, 1) == 0);
  CHECK(m.cmp_rational(1, 1) == 0);
}
