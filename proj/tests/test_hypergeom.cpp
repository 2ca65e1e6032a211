#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multideg/hypergeom.hpp"

using namespace multideg;

namespace {

const IntMatrix EX1 = {{1, 1, 1}, {0, 1, 2}};
const IntMatrix EX2 = {{1, 1, 1, 1}, {0, 1, 2, 3}};
const IntMatrix EX3 = {{1, 1, 1, 1}, {0, 1, 3, 4}};
const IntMatrix EX4 = {{1, 1, 1, 1, 1}, {0, 2, 4, 7, 9}};
const IntMatrix EX5 = {{0, 1, 3}, {4, 3, 2}};
const IntMatrix EX6 = {{-2, -1, 0, 1}, {1, 1, 2, 2}};

const std::vector<IntMatrix> ALL = {EX1, EX2, EX3, EX4, EX5, EX6};

KPolynomial kp2(std::initializer_list<std::tuple<long, long, long>> terms) {
  KPolynomial k(2);
  for (auto [a, b, c] : terms) k.add_term({a, b}, c);
  return k;
}

// binomial p = prod d_j^{u_j} - prod d_j^{v_j} in the toric ring of A
QPoly binom(const RingPtr& R, const ExponentVector& u, const ExponentVector& v) {
  return QPoly::monomial(R, u, Rational(1)) - QPoly::monomial(R, v, Rational(1));
}

// two generating sets define the same ideal iff their reduced bases agree
bool same_ideal(const std::vector<QPoly>& a, const std::vector<QPoly>& b) {
  if (a.empty() && b.empty()) return true;
  const RingPtr& R = (a.empty() ? b : a)[0].ring();
  auto wrap = [&](const std::vector<QPoly>& ps) {
    std::vector<FreeModuleElement<Rational>> out;
    for (const auto& p : ps) {
      FreeModuleElement<Rational> v(R, 1);
      v[0] = p;
      out.push_back(std::move(v));
    }
    return out;
  };
  MonomialOrder ord = MonomialOrder::grevlex(R->nvars());
  auto ga = reduced_groebner_basis(wrap(a), ord);
  auto gb = reduced_groebner_basis(wrap(b), ord);
  if (ga.elements.size() != gb.elements.size()) return false;
  for (size_t i = 0; i < ga.elements.size(); ++i)
    if (!(ga.elements[i] == gb.elements[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("lattice kernel and lattice spanning via integer diagonalization") {
  // kernel vectors really lie in the kernel, and there are n - d of them
  for (const auto& A : ALL) {
    auto ker = lattice_kernel(A);
    CHECK(ker.size() == A[0].size() - A.size());
    for (const auto& u : ker)
      for (size_t i = 0; i < A.size(); ++i) {
        BigInt s = 0;
        for (size_t j = 0; j < u.size(); ++j) s += A[i][j] * u[j];
        CHECK(s == 0);
      }
    CHECK(spans_lattice(A));
  }
  CHECK(spans_lattice({{1}}));
  CHECK(!spans_lattice({{2}}));
  CHECK(spans_lattice({{2, 3}}));
  CHECK(!spans_lattice({{2, 4}}));
  // full rank but index-2 sublattice
  CHECK(!spans_lattice({{2, 0}, {0, 1}}));
  CHECK_THROWS_AS(toric_ideal({{2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(toric_ideal({{1, 0}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("toric ideals of the six matrices") {
  auto I1 = toric_ideal(EX1);
  const RingPtr R3 = I1[0].ring();
  CHECK(same_ideal(I1, {binom(R3, {1, 0, 1}, {0, 2, 0})}));

  auto I2 = toric_ideal(EX2);
  const RingPtr R4 = I2[0].ring();
  CHECK(same_ideal(I2, {binom(R4, {0, 1, 0, 1}, {0, 0, 2, 0}),
                        binom(R4, {1, 0, 0, 1}, {0, 1, 1, 0}),
                        binom(R4, {1, 0, 1, 0}, {0, 2, 0, 0})}));

  auto I5 = toric_ideal(EX5);
  const RingPtr R5 = I5[0].ring();
  CHECK(same_ideal(I5, {binom(R5, {7, 0, 4}, {0, 12, 0})}));

  auto I3 = toric_ideal(EX3);
  const RingPtr R = I3[0].ring();
  CHECK(same_ideal(I3, {binom(R, {0, 1, 0, 2}, {0, 0, 3, 0}),
                        binom(R, {1, 0, 0, 1}, {0, 1, 1, 0}),
                        binom(R, {1, 0, 2, 0}, {0, 2, 0, 1}),
                        binom(R, {2, 0, 1, 0}, {0, 3, 0, 0})}));

  auto I6 = toric_ideal(EX6);
  const RingPtr R6 = I6[0].ring();
  CHECK(same_ideal(I6, {binom(R6, {0, 2, 0, 2}, {0, 0, 3, 0}),
                        binom(R6, {1, 0, 0, 1}, {0, 1, 1, 0}),
                        binom(R6, {1, 0, 2, 0}, {0, 3, 0, 1}),
                        binom(R6, {2, 0, 1, 0}, {0, 4, 0, 0})}));

  // every generator is a genuine A-binomial: A.u = A.v
  for (const auto& A : ALL)
    for (const auto& p : toric_ideal(A)) {
      REQUIRE(p.terms().size() == 2);
      auto it = p.terms().begin();
      const auto& u = it->first;
      const auto& v = std::next(it)->first;
      for (size_t i = 0; i < A.size(); ++i) {
        BigInt su = 0, sv = 0;
        for (size_t j = 0; j < A[0].size(); ++j) {
          su += A[i][j] * u[j];
          sv += A[i][j] * v[j];
        }
        CHECK(su == sv);
      }
    }
}

TEST_CASE("homogeneity and pointedness of the six matrices") {
  std::vector<bool> homog = {true, true, true, true, false, false};
  for (size_t k = 0; k < ALL.size(); ++k)
    CHECK(is_homogeneous(ALL[k]) == homog[k]);

  for (const auto& A : ALL) {
    auto [ptd, w] = is_pointed(A);
    CHECK(ptd);
    REQUIRE(w.has_value());
    // witness is in the integer row span and strictly positive
    CHECK(w->size() == A[0].size());
    for (const auto& wj : *w) CHECK(wj > 0);
  }
  // (1,-1) has no positive vector in its span
  auto [ptd, w] = is_pointed({{1, -1}});
  CHECK(!ptd);
  CHECK(!w.has_value());
}

TEST_CASE("normalized volume: triangulation route and degree route") {
  std::vector<long> vols = {2, 3, 4, 9, 12, 6};
  for (size_t k = 0; k < ALL.size(); ++k) {
    CHECK(volume(ALL[k]) == vols[k]);
    CHECK(volume_degree_route(ALL[k]) == vols[k]);
  }
  // hand oracles
  CHECK(volume({{1, 0}, {0, 1}}) == 1);        // standard simplex
  CHECK(volume({{1, 0, 1}, {0, 1, 1}}) == 2);  // unit square
  CHECK(volume({{3}}) == 3);                   // segment [0,3]
  CHECK_THROWS_AS(volume({{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("Cohen-Macaulayness of k[d,h]/H(I_A)") {
  std::vector<bool> cm = {true, true, false, false, true, false};
  for (size_t k = 0; k < ALL.size(); ++k)
    CHECK(cohen_macaulay(ALL[k]) == cm[k]);
}

TEST_CASE("closed-form multidegree") {
  CHECK(closed_form_multidegree(EX1).form == kp2({{3, 0, 2}, {2, 1, 2}}));
  CHECK(closed_form_multidegree(EX2).form ==
        kp2({{4, 0, 3}, {3, 1, 6}, {2, 2, 3}}));
  CHECK(closed_form_multidegree(EX6).form ==
        kp2({{4, 0, 6}, {3, 1, 12}, {2, 2, 6}}));
}

TEST_CASE("hypergeometric ideal generators") {
  auto H = hypergeometric_ideal(EX1, {Rational(0), Rational(0)});
  CHECK(H.size() == 3);  // one toric + two Euler operators
  auto T = hypergeometric_ideal({{1}}, {Rational(0)});
  REQUIRE(T.size() == 1);  // t dt
  BifilteredPresentation M = make_presentation(0, 1, 1);
  QPoly tdt = QPoly::variable(M.D->ring, M.t_var(0)) *
              QPoly::variable(M.D->ring, M.dt_var(0));
  CHECK(T[0] == tdt);
}

TEST_CASE("analysis of a homogeneous Cohen-Macaulay system") {
  GKZAnalysis a = analyze(EX1, std::vector<Rational>{Rational(0), Rational(0)});
  CHECK(a.homogeneous);
  CHECK(a.cohen_macaulay);
  CHECK(a.volume == 2);
  CHECK(a.report.nice);
  CHECK(a.report.multidegree.form == kp2({{3, 0, 2}, {2, 1, 2}}));
  CHECK(a.formula_match);
  REQUIRE(a.fastpath_match.has_value());
  CHECK(*a.fastpath_match);
  // the closed form holds for every beta, including awkward ones
  GKZAnalysis b = analyze(EX1, std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(b.report.multidegree.form == kp2({{3, 0, 2}, {2, 1, 2}}));
  CHECK(b.formula_match);
}

TEST_CASE("exceptional parameters break the closed form") {
  GKZAnalysis a = analyze(EX3, std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(a.report.multidegree.form == kp2({{4, 0, 5},
                                          {3, 1, 12},
                                          {2, 2, 10},
                                          {1, 3, 4},
                                          {0, 4, 1}}));
  CHECK(!a.formula_match);
  CHECK(!a.cohen_macaulay);
}

TEST_CASE("inhomogeneous Cohen-Macaulay system is nice for explicit beta") {
  GKZAnalysis a = analyze(EX5, std::vector<Rational>{Rational(1), Rational(1)});
  CHECK(!a.homogeneous);
  CHECK(a.cohen_macaulay);
  CHECK(a.volume == 12);
  CHECK(a.report.nice);
  CHECK(a.report.multidegree.form == kp2({{3, 0, 12}, {2, 1, 12}}));
  CHECK(a.formula_match);
}

TEST_CASE("inhomogeneous non-CM system: exceptional beta") {
  GKZAnalysis a = analyze(EX6, std::vector<Rational>{Rational(-1), Rational(2)});
  CHECK(a.report.nice);
  CHECK(a.report.multidegree.form == kp2({{4, 0, 7},
                                          {3, 1, 16},
                                          {2, 2, 12},
                                          {1, 3, 4},
                                          {0, 4, 1}}));
  CHECK(!a.formula_match);
}

TEST_CASE("generic beta draws reproduce the generic multidegrees") {
  GKZAnalysis a3 = analyze(EX3, std::nullopt);
  CHECK(a3.generic_beta);
  CHECK(a3.report.multidegree.form ==
        kp2({{4, 0, 4}, {3, 1, 8}, {2, 2, 4}}));
  CHECK(a3.formula_match);

  GKZAnalysis a6 = analyze(EX6, std::nullopt);
  CHECK(a6.report.nice);
  CHECK(a6.report.multidegree.form ==
        kp2({{4, 0, 6}, {3, 1, 12}, {2, 2, 6}}));
  CHECK(a6.formula_match);
}
