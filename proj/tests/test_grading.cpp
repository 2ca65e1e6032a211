#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "multideg/gcd.hpp"
#include "multideg/grading.hpp"

using namespace multideg;

TEST_CASE("degree of a monomial is the weighted sum of variable degrees") {
  // ring x, t, dx, dt, theta with the Rees-side bigrading:
  // x:(0,0) t:(0,-1) dx:(1,0) dt:(1,1) theta:(0,1)
  Multigrading g({{0, 0}, {0, -1}, {1, 0}, {1, 1}, {0, 1}}, 2);
  CHECK(g.degree({0, 0, 0, 0, 0}) == DegreeVector{0, 0});
  CHECK(g.degree({0, 1, 0, 1, 0}) == DegreeVector{1, 0});  // t*dt
  CHECK(g.degree({0, 1, 0, 0, 1}) == DegreeVector{0, 0});  // theta*t
  CHECK(g.degree({3, 0, 2, 1, 4}) == DegreeVector{3, 5});
}

TEST_CASE("deg(mn) = deg(m) + deg(n) on random monomials") {
  Multigrading g({{1, 0}, {2, -1}, {0, 3}}, 2);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    ExponentVector a = {d(rng), d(rng), d(rng)}, b = {d(rng), d(rng), d(rng)};
    CHECK(g.degree(exp_add(a, b)) == deg_add(g.degree(a), g.degree(b)));
  }
}

TEST_CASE("homogeneity check with and without shifts") {
  RingPtr R = make_ring({"u", "v", "w"});
  Multigrading g({{1, 1}, {1, 1}, {1, 0}}, 2);  // u,v:(1,1), w:(1,0)
  QPoly u = QPoly::variable(R, 0), v = QPoly::variable(R, 1),
        w = QPoly::variable(R, 2);
  CHECK(homogeneous_degree(u * w - v * w, g) == DegreeVector{2, 1});
  CHECK(!homogeneous_degree(u + w, g).has_value());
  CHECK(homogeneous_degree(QPoly(R), g) == DegreeVector{0, 0});

  FreeModuleElement<Rational> m(R, 2);
  m[0] = u;        // deg (1,1) + shift (0,0)
  m[1] = w;        // deg (1,0) + shift (0,1)
  std::vector<DegreeVector> shifts = {{0, 0}, {0, 1}};
  CHECK(homogeneous_degree(m, g, shifts) == DegreeVector{1, 1});
  std::vector<DegreeVector> bad_shifts = {{0, 0}, {0, 0}};
  CHECK(!homogeneous_degree(m, g, bad_shifts).has_value());
}

TEST_CASE("positivity of gradings") {
  // standard grading: positive
  CHECK(is_positive(Multigrading({{1}, {1}, {1}}, 1)));
  // t:(0,-1) with theta:(0,1): t*theta has degree (0,0) -> not positive
  CHECK(!is_positive(Multigrading({{0, -1}, {0, 1}, {1, 0}}, 2)));
  // the F-side table x:(0,0) ... never positive with an x present
  CHECK(!is_positive(Multigrading({{0, 0}, {1, 0}}, 2)));
  // bigrading t:(0,-1) only (no theta): y=(0,-1) works
  CHECK(is_positive(Multigrading({{0, -1}, {1, 1}}, 2)));
  // empty variable set: positive
  CHECK(is_positive(Multigrading({}, 2)));
}

TEST_CASE("fourier-motzkin feasibility") {
  // y1 >= 1, -y1 >= 0 infeasible
  CHECK(!linear_feasible({{{Rational(1)}, Rational(1)},
                          {{Rational(-1)}, Rational(0)}},
                         1));
  // y1 + y2 >= 3, y1 - y2 >= -1 feasible
  CHECK(linear_feasible({{{Rational(1), Rational(1)}, Rational(3)},
                         {{Rational(1), Rational(-1)}, Rational(-1)}},
                        2));
  // no constraints: feasible
  CHECK(linear_feasible({}, 3));
  // contradictory constants after elimination
  CHECK(!linear_feasible({{{Rational(0), Rational(0)}, Rational(1)}}, 2));
}

TEST_CASE("shift pair carries bidegrees") {
  ShiftPair s{{0, 1}, {2, -1}};
  CHECK(s.rank() == 2);
  auto b = s.bidegrees();
  CHECK(b[0] == DegreeVector{0, 2});
  CHECK(b[1] == DegreeVector{1, -1});
}
