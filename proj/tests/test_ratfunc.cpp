#include <doctest.h>

#include "helpers.hpp"
#include "parakov/ratfunc.hpp"

using namespace parakov;
using parakov::testing::field;
using parakov::testing::rf;

TEST_CASE("ratfunc normalization") {
  FieldPtr f = field({"t"});
  RatFunc a = rf("(z^2-1)/(z-1)", f);
  CHECK(a.is_poly());
  CHECK(a == rf("z+1", f));
  // denominator is kept monic
  RatFunc b = rf("1/(2*z-2)", f);
  CHECK(b.den().lc() == ParamElem::one(f));
  CHECK(b * rf("z-1", f) == rf("1/2", f));
  // rebuilding from already reduced parts is a fixed point
  RatFunc c = rf("(z+t)/(z^2+1)", f);
  CHECK(RatFunc(c.num(), c.den()) == c);
}

TEST_CASE("ratfunc arithmetic and constants") {
  FieldPtr f = field({"t"});
  RatFunc x = rf("t/z", f);
  RatFunc y = rf("1/(z+1)", f);
  CHECK(x + y == rf("(t*(z+1)+z)/(z*(z+1))", f));
  CHECK(x * y == rf("t/(z^2+z)", f));
  CHECK(x - x == RatFunc::zero(f));
  CHECK(x / x == RatFunc::one(f));
  RatFunc k = rf("t^2/4", f);
  REQUIRE(k.is_constant());
  CHECK(k.constant_value().to_string() == "1/4*t^2");
  CHECK(!x.is_constant());
  CHECK(x.pow(3) == rf("t^3/z^3", f));
  CHECK(x.pow(-2) == rf("z^2/t^2", f));
  CHECK(x.pow(0) == RatFunc::one(f));
}

TEST_CASE("ratfunc orders at poles and infinity") {
  FieldPtr f = field({"t"});
  RatFunc r = rf("(4*t^2-1)/(4*z^2)-1", f);
  CHECK(r.order_at(ParamElem::zero(f)) == -2);
  CHECK(r.order_at_infinity() == 0);
  CHECK(rf("t/z-3/(16*z^2)", f).order_at_infinity() == 1);
  CHECK(rf("z^3+t", f).order_at_infinity() == -3);
  CHECK(rf("(z-1)^2/z", f).order_at(ParamElem::one(f)) == 2);
  CHECK(rf("(z-1)^2/z", f).order_at(ParamElem::from_long(f, 2)) == 0);
  CHECK_THROWS_AS(RatFunc::zero(f).order_at_infinity(), Error);
}

TEST_CASE("ratfunc derivative rules") {
  FieldPtr f = field({"t"});
  RatFunc u = rf("(z+t)/(z-1)", f);
  RatFunc v = rf("t*z^2", f);
  CHECK((u * v).derivative_z() == u.derivative_z() * v + u * v.derivative_z());
  CHECK((u + v).derivative_t(0) == u.derivative_t(0) + v.derivative_t(0));
  CHECK(u.derivative_z().derivative_t(0) == u.derivative_t(0).derivative_z());
  // quotient rule against an explicit expansion
  CHECK(u.derivative_z() == rf("(-1-t)/(z-1)^2", f));
  CHECK(rf("t^3", f).derivative_t(0) == rf("3*t^2", f));
  CHECK(rf("t^3", f).derivative_z() == RatFunc::zero(f));
}

TEST_CASE("derivation handles") {
  FieldPtr f = field({"t0", "t1"});
  RatFunc u = rf("t1*z + t0", f);
  Derivation dz = Derivation::d_z();
  Derivation d0 = Derivation::d_t(0);
  Derivation d1 = Derivation::d_t(1);
  CHECK(dz.apply(u) == rf("t1", f));
  CHECK(d0.apply(u) == RatFunc::one(f));
  CHECK(d1.apply(u) == rf("z", f));
  CHECK(dz.name() == "dz");
  CHECK(d1.name() == "dt2");
  CHECK(d0.apply(ParamElem::param(f, 0) * ParamElem::param(f, 1)) ==
        ParamElem::param(f, 1));
}

TEST_CASE("ratfunc evaluation") {
  FieldPtr f = field({"t"});
  RatFunc u = rf("(z^2+t)/(z+1)", f);
  ParamElem two = ParamElem::from_long(f, 2);
  ParamElem t = ParamElem::param(f, 0);
  ParamElem expected = (two * two + t) / (two + ParamElem::one(f));
  CHECK(u.eval(two) == expected);
}

TEST_CASE("ratfunc printing") {
  FieldPtr f = field({"t"});
  CHECK(rf("t/z-3/(16*z^2)", f).to_string() == "(t*z - 3/16)/z^2");
  CHECK(rf("-1/(2*z)", f).to_string() == "(-1/2)/z");
  CHECK(RatFunc::zero(f).to_string() == "0");
  CHECK(rf("z^3+t", f).to_string() == "z^3 + t");
}
