#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "parakov/galois.hpp"

using namespace parakov;
using parakov::testing::field;
using parakov::testing::rf;

namespace {

bool has_note(const GroupDescription& g, const std::string& needle) {
  return std::any_of(g.notes.begin(), g.notes.end(), [&](const std::string& n) {
    return n.find(needle) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("product form splits residues from the derivative tail") {
  FieldPtr f = field({"t"});
  // f = t/z + 3/(z-1) + dz(z^2 + 1/z)
  RatFunc tail = rf("z^2 + 1/z", f);
  RatFunc w = rf("t/z + 3/(z-1)", f) + tail.derivative_z();
  ProductForm pf = product_form(w);
  REQUIRE(pf.exponents.size() == 2);
  CHECK(pf.exponents[0].first == ParamElem::zero(f));
  CHECK(pf.exponents[0].second == ParamElem::param(f, 0));
  CHECK(pf.exponents[1].first == ParamElem::one(f));
  CHECK(pf.exponents[1].second == ParamElem::from_long(f, 3));
  // tails agree up to an additive constant; compare derivatives
  CHECK(pf.tail.derivative_z() == tail.derivative_z());
  // reassembly
  RatFunc back = pf.tail.derivative_z();
  for (const auto& [pole, res] : pf.exponents)
    back = back + RatFunc::constant(res) /
                      (RatFunc::z(f) - RatFunc::constant(pole));
  CHECK(back == w);
}

TEST_CASE("diagonal group of the square-root exponent witness") {
  FieldPtr f = field({"t"});
  KovacicResult res = classify(rf("t/z^2", f));
  REQUIRE(res.case_id == 1);
  GroupDescription g = case1_group(*res.case1, nullptr);
  CHECK(g.tag == "diagonal");
  REQUIRE(g.relations.size() == 1);
  CHECK(g.relations[0] == "D[t]((sqrt(4*t + 1))*u[t]) = 0");
  CHECK(g.order == 0);
}

TEST_CASE("rational exponent witnesses collapse the group") {
  FieldPtr f = field({});
  // r = 2/z^2: y1 = z^2, y2 = 1/z are both rational, group is trivial
  KovacicResult res = classify(rf("2/z^2", f));
  REQUIRE(res.case_id == 1);
  UnipotentData uni;
  GroupDescription g = case1_group(*res.case1, &uni);
  CHECK(g.tag == "trivial");
  CHECK(uni.has_rational_h);
  CHECK(uni.f_parameter_free);

  // r = -1/(4 z^2): y1 = sqrt(z), second solution logarithmic, so the
  // character is order two inside a borel group
  KovacicResult res2 = classify(rf("-1/(4*z^2)", f));
  REQUIRE(res2.case_id == 1);
  GroupDescription g2 = case1_group(*res2.case1, nullptr);
  CHECK(g2.tag == "borel");
  CHECK(g2.order == 2);
  REQUIRE(!g2.relations.empty());
  CHECK(g2.relations[0] == "alpha^2 = 1");
}

TEST_CASE("unipotent data for the square-root witness") {
  FieldPtr f = field({"t"});
  KovacicResult res = classify(rf("t/z^2", f));
  REQUIRE(res.case1.has_value());
  UnipotentData uni = unipotent_part(res.case1->f);
  REQUIRE(uni.has_rational_h);
  // h' - 2 f h = 1 with f the Riccati witness
  CHECK(uni.h.derivative_z() - rf("2", f) * res.case1->f * uni.h ==
        RatFunc::one(f));
  CHECK(!uni.f_parameter_free);
}

TEST_CASE("dihedral description for the quadratic witness") {
  FieldPtr f = field({"t"});
  KovacicResult res = classify(rf("t/z-3/(16*z^2)", f));
  REQUIRE(res.case_id == 2);
  GroupDescription g = case2_group(*res.case2);
  CHECK(g.tag == "dihedral");
  CHECK(has_note(g, "multiplicative part: C*"));
  CHECK(g.relations.empty());
}

TEST_CASE("finite description for the algebraic witness") {
  FieldPtr f = field({});
  RatFunc r = rf("(-3/16+(3/16)*z-(2/9)*z^2)/(z^2*(1-z)^2)", f);
  KovacicResult res = classify(r);
  REQUIRE(res.case_id == 3);
  GroupDescription g = case3_group(*res.case3);
  CHECK(g.tag == "finite_primitive");
  CHECK(has_note(g, "degree 4"));
}
