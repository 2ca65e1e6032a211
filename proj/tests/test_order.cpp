#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multideg/order.hpp"

using namespace multideg;

TEST_CASE("exponent vector helpers") {
  ExponentVector a = {1, 2, 0}, b = {0, 2, 3};
  CHECK(exp_add(a, b) == ExponentVector{1, 4, 3});
  CHECK(exp_sub(a, b) == ExponentVector{1, 0, -3});
  CHECK(exp_lcm(a, b) == ExponentVector{1, 2, 3});
  CHECK(exp_gcd(a, b) == ExponentVector{0, 2, 0});
  CHECK(exp_divides({0, 1, 0}, a));
  CHECK(!exp_divides(b, a));
  CHECK(total_degree(a) == 3);
}

TEST_CASE("grevlex order on three variables") {
  MonomialOrder o = MonomialOrder::grevlex(3);
  // degree first
  CHECK(o.compare({2, 0, 0}, {1, 1, 1}) < 0);
  // same degree: smaller exponent in the last variable wins
  CHECK(o.compare({1, 0, 1}, {0, 2, 0}) < 0);
  CHECK(o.compare({1, 1, 0}, {2, 0, 0}) < 0);
  CHECK(o.compare({1, 1, 0}, {1, 1, 0}) == 0);
  CHECK(o.is_well_order());
}

TEST_CASE("lex order") {
  MonomialOrder o = MonomialOrder::lex(3);
  CHECK(o.compare({1, 0, 0}, {0, 5, 5}) > 0);
  CHECK(o.compare({1, 2, 0}, {1, 1, 9}) > 0);
  CHECK(o.is_well_order());
}

TEST_CASE("weight rows refine before the tie-break") {
  // weight (0,0,1): z-degree dominates
  MonomialOrder o = MonomialOrder::grevlex(3).with_weight_front({0, 0, 1});
  CHECK(o.compare({5, 5, 0}, {0, 0, 1}) < 0);
  CHECK(o.is_well_order());
  // negative weight: not a well-order
  MonomialOrder bad = MonomialOrder::grevlex(3).with_weight_front({0, 0, -1});
  CHECK(!bad.is_well_order());
  // negative weight shadowed by an earlier positive row is fine
  MonomialOrder ok = MonomialOrder::grevlex(2);
  ok.add_weight({1, 1});
  ok.add_weight({1, -1});
  CHECK(ok.is_well_order());
}

TEST_CASE("module rule and component comparison") {
  MonomialOrder top = MonomialOrder::grevlex(2);  // term over position
  // same monomial: lower component index is larger
  CHECK(top.compare({1, 0}, 1, {1, 0}, 0) < 0);
  // term dominates component
  CHECK(top.compare({2, 0}, 1, {1, 0}, 0) > 0);
  MonomialOrder pot = MonomialOrder::grevlex(2).set_module_rule(
      ModuleRule::PositionOverTerm);
  CHECK(pot.compare({2, 0}, 1, {1, 0}, 0) < 0);
}

TEST_CASE("component shifts in weight rows") {
  MonomialOrder o = MonomialOrder::grevlex(2);
  o.add_weight({1, 1}, {0, 3});  // component 1 shifted by 3
  CHECK(o.compare({2, 0}, 0, {0, 0}, 1) < 0);   // 2 < 0+3
  CHECK(o.compare({2, 2}, 0, {0, 0}, 1) > 0);   // 4 > 3
}

TEST_CASE("parametric order compares parameters last") {
  // vars: x, y, l (parameter)
  MonomialOrder o = MonomialOrder::grevlex(3);
  o.set_main_block({0, 1});
  // main part dominates regardless of the parameter exponent
  CHECK(o.compare({1, 0, 0}, {0, 0, 9}) > 0);
  CHECK(o.compare({1, 0, 0}, {1, 0, 9}) < 0);  // equal main: lex on l
  CHECK(o.compare({0, 2, 1}, {1, 0, 5}) > 0);  // grevlex on main part only
  CHECK(o.is_well_order());
}

TEST_CASE("schreyer order lifts the base order through leads") {
  auto base = std::make_shared<MonomialOrder>(MonomialOrder::grevlex(2));
  // two generators with leads x^2 e_0 and y e_0
  MonomialOrder s = MonomialOrder::schreyer(base, {{2, 0}, {0, 1}}, {0, 0});
  // a*e_0 vs b*e_1 compares a+x^2 against b+y in the base
  CHECK(s.compare({0, 0}, 0, {0, 0}, 1) > 0);   // x^2 > y
  CHECK(s.compare({0, 0}, 0, {0, 3}, 1) < 0);   // x^2 < y^4
  // equal images: smaller index wins
  CHECK(s.compare({0, 1}, 0, {2, 0}, 1) > 0);   // both map to x^2 y
}
