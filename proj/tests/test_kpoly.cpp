#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "multideg/kpoly.hpp"

using namespace multideg;

namespace {

using Elt = FreeModuleElement<Rational>;

std::vector<Elt> ideal(std::initializer_list<QPoly> ps) {
  std::vector<Elt> v;
  for (const auto& p : ps) v.push_back(Elt(p));
  return v;
}

KPolynomial kp1(std::initializer_list<std::pair<long, long>> terms) {
  KPolynomial k(1);
  for (auto [e, c] : terms) k.add_term({e}, c);
  return k;
}

}  // namespace

TEST_CASE("k-polynomial arithmetic and printing") {
  KPolynomial a = kp1({{0, 1}, {2, -1}});  // 1 - T^2
  KPolynomial b = kp1({{1, 2}});           // 2T
  CHECK((a + b) == kp1({{0, 1}, {1, 2}, {2, -1}}));
  CHECK((a - a).is_zero());
  CHECK((a * b) == kp1({{1, 2}, {3, -2}}));
  CHECK(a.str() == "-T1^2 + 1");
  KPolynomial l(2);
  l.add_term({1, -1}, 3);
  CHECK(l.str() == "3*T1*T2^-1");
}

TEST_CASE("k_from_shifts: alternating sums") {
  // Koszul resolution of k[x,y]/(x,y): S <- S(-1)^2 <- S(-2)
  auto k = k_from_shifts({{{0}}, {{1}, {1}}, {{2}}}, 1);
  CHECK(k == kp1({{0, 1}, {1, -2}, {2, 1}}));
  // free module S[b]
  CHECK(k_from_shifts({{{3}}}, 1) == kp1({{3, 1}}));
}

TEST_CASE("k_from_resolution on the hypersurface d1 d3 - d2^2") {
  RingPtr R = make_ring({"d1", "d2", "d3"});
  QPoly d1 = QPoly::variable(R, 0), d2 = QPoly::variable(R, 1),
        d3 = QPoly::variable(R, 2);
  Multigrading g({{1}, {1}, {1}}, 1);
  auto res = free_resolution(ideal({d1 * d3 - d2 * d2}),
                             MonomialOrder::grevlex(3));
  auto k = k_from_resolution(res, g, {{0}});
  CHECK(k == kp1({{0, 1}, {2, -1}}));  // 1 - T^2
}

TEST_CASE("monomial K-polynomial recursion") {
  Multigrading g({{1}, {1}}, 1);
  MonomialModule m;
  m.nvars = 2;
  m.rank = 1;
  SUBCASE("principal ideal x^2") {
    m.gens = {{{2, 0}}};
    CHECK(k_monomial_quotient(m, g, {{0}}) == kp1({{0, 1}, {2, -1}}));
  }
  SUBCASE("xy and x^2 share x: inclusion-exclusion") {
    m.gens = {{{1, 1}, {2, 0}}};
    CHECK(k_monomial_quotient(m, g, {{0}}) == kp1({{0, 1}, {2, -2}, {3, 1}}));
  }
  SUBCASE("empty ideal") {
    m.gens = {{}};
    CHECK(k_monomial_quotient(m, g, {{0}}) == kp1({{0, 1}}));
  }
  SUBCASE("unit ideal kills the quotient") {
    m.gens = {{{0, 0}}};
    CHECK(k_monomial_quotient(m, g, {{0}}).is_zero());
  }
  SUBCASE("module shifts multiply through") {
    m.rank = 2;
    m.gens = {{{1, 0}}, {}};
    auto k = k_monomial_quotient(m, g, {{0}, {5}});
    CHECK(k == kp1({{0, 1}, {1, -1}, {5, 1}}));
  }
}

TEST_CASE("k_from_initial equals k_from_resolution on random binomial ideals") {
  // oracle cross-check of the two K-polynomial routes
  RingPtr R = make_ring({"a", "b", "c"});
  Multigrading g({{1, 2}, {1, 1}, {1, 0}}, 2);
  MonomialOrder ord = MonomialOrder::grevlex(3);
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> ed(0, 2);
  int done = 0;
  while (done < 50) {
    // random binomial x^u - x^v with deg u = deg v (multihomogeneous),
    // plus a random monomial
    ExponentVector u = {ed(rng), ed(rng), ed(rng)};
    ExponentVector v = {ed(rng), ed(rng), ed(rng)};
    if (g.degree(u) != g.degree(v) || u == v) continue;
    ExponentVector w = {ed(rng), ed(rng), ed(rng)};
    if (total_degree(w) == 0) continue;
    QPoly f = QPoly::monomial(R, u, Rational(1)) -
              QPoly::monomial(R, v, Rational(1));
    QPoly h = QPoly::monomial(R, w, Rational(1));
    auto gens = ideal({f, h});
    auto gb = reduced_groebner_basis(gens, ord);
    auto k1 = k_from_initial(gb, g, {{0, 0}}, 1);
    auto res = free_resolution(gens, ord);
    auto k2 = k_from_resolution(res, g, {{0, 0}});
    CHECK(k1 == k2);
    ++done;
  }
}

TEST_CASE("prop 1: minimal and non-minimal resolutions give the same K") {
  RingPtr R = make_ring({"x", "y", "z"});
  QPoly x = QPoly::variable(R, 0), y = QPoly::variable(R, 1),
        z = QPoly::variable(R, 2);
  Multigrading g({{1}, {1}, {1}}, 1);
  MonomialOrder ord = MonomialOrder::grevlex(3);
  // redundant generating set forces a non-minimal resolution
  auto gens = ideal({x * y, y * z, x * z, x * y * z, x * x * y});
  auto res = free_resolution(gens, ord);
  auto k_nonmin = k_from_resolution(res, g, {{0}});
  minimize_resolution(res);
  auto k_min = k_from_resolution(res, g, {{0}});
  CHECK(k_nonmin == k_min);
  auto gb = reduced_groebner_basis(gens, ord);
  CHECK(k_from_initial(gb, g, {{0}}, 1) == k_min);
}

TEST_CASE("codimension of monomial quotients") {
  MonomialModule m;
  m.nvars = 2;
  m.rank = 1;
  m.gens = {{{2, 0}}};  // x^2 in k[x,y]
  CHECK(codim_monomial(m) == 1);
  m.gens = {{{1, 0}, {0, 1}}};  // (x, y)
  CHECK(codim_monomial(m) == 2);
  m.gens = {{}};  // zero ideal
  CHECK(codim_monomial(m) == 0);
  // component with unit ideal is a zero module: ignored for dimension
  m.rank = 2;
  m.gens = {{{0, 0}}, {{1, 1}}};  // S/1 (+) S/(xy)
  CHECK(codim_monomial(m) == 1);
  // all components zero
  m.gens = {{{0, 0}}, {{0, 0}}};
  CHECK(codim_monomial(m) == 3);  // beyond dim S marker
}

TEST_CASE("expand_and_extract: multidegrees") {
  SUBCASE("hypersurface of degree 2") {
    auto md = expand_and_extract(kp1({{0, 1}, {2, -1}}), 1);
    CHECK(md.form == kp1({{1, 2}}));  // 2T
    CHECK(lower_parts_vanish(kp1({{0, 1}, {2, -1}}), 1));
  }
  SUBCASE("bigraded hypersurface of degree (2,1)") {
    KPolynomial k(2);
    k.add_term({0, 0}, 1);
    k.add_term({2, 1}, -1);
    auto md = expand_and_extract(k, 1);
    KPolynomial want(2);
    want.add_term({1, 0}, 2);
    want.add_term({0, 1}, 1);
    CHECK(md.form == want);
  }
  SUBCASE("negative Laurent exponent expands as a series") {
    KPolynomial k(2);
    k.add_term({0, -1}, 1);  // T2^-1
    auto md0 = expand_and_extract(k, 0);
    KPolynomial one(2);
    one.add_term({0, 0}, 1);
    CHECK(md0.form == one);
    // (1-T2)^-1 = 1 + T2 + ...
    auto md1 = expand_and_extract(k, 1);
    KPolynomial t2(2);
    t2.add_term({0, 1}, 1);
    CHECK(md1.form == t2);
  }
  SUBCASE("below the true codimension the form is zero") {
    // codim 2 module: K = (1-T)^2
    auto k = kp1({{0, 1}, {1, -2}, {2, 1}});
    CHECK(expand_and_extract(k, 1).form.is_zero());
    CHECK(expand_and_extract(k, 2).form == kp1({{2, 1}}));
  }
}

TEST_CASE("lemma 5 shape: regular hypersurface multiplies K by 1 - T^deg") {
  RingPtr R = make_ring({"x", "y", "z"});
  QPoly x = QPoly::variable(R, 0), y = QPoly::variable(R, 1),
        z = QPoly::variable(R, 2);
  Multigrading g({{1}, {1}, {1}}, 1);
  MonomialOrder ord = MonomialOrder::grevlex(3);
  // regular sequence x^2 - yz, y^3
  auto gb1 = reduced_groebner_basis(ideal({x * x - y * z}), ord);
  auto k1 = k_from_initial(gb1, g, {{0}}, 1);
  auto gb2 = reduced_groebner_basis(ideal({x * x - y * z, y * y * y}), ord);
  auto k2 = k_from_initial(gb2, g, {{0}}, 1);
  CHECK(k2 == k1 * kp1({{0, 1}, {3, -1}}));
}

TEST_CASE("hilbert_check validates K against brute-force counting") {
  Multigrading g({{1}, {1}}, 1);
  MonomialModule m;
  m.nvars = 2;
  m.rank = 1;
  m.gens = {{{1, 1}}};  // k[x,y]/(xy): dims 1,2,2,2,...
  auto k = k_monomial_quotient(m, g, {{0}});
  CHECK(k == kp1({{0, 1}, {2, -1}}));
  CHECK(hilbert_check(m, g, {{0}}, k, 8));
  // a wrong K must fail
  CHECK(!hilbert_check(m, g, {{0}}, kp1({{0, 1}, {2, -2}}), 8));
  // non-positive grading rejected
  Multigrading bad({{0, -1}, {0, 1}}, 2);
  CHECK_THROWS_AS(hilbert_check(m, bad, {{0, 0}, {0, 0}}, KPolynomial(2), 4),
                  std::invalid_argument);
}

TEST_CASE("hilbert_check on random monomial ideals") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> ed(0, 3), ng(1, 4);
  Multigrading g({{1}, {1}, {1}}, 1);
  for (int trial = 0; trial < 25; ++trial) {
    MonomialModule m;
    m.nvars = 3;
    m.rank = 1;
    m.gens.resize(1);
    int k = ng(rng);
    for (int i = 0; i < k; ++i) {
      ExponentVector e = {ed(rng), ed(rng), ed(rng)};
      if (total_degree(e) > 0) m.gens[0].push_back(e);
    }
    auto kp = k_monomial_quotient(m, g, {{0}});
    CHECK(hilbert_check(m, g, {{0}}, kp, 8));
  }
}
