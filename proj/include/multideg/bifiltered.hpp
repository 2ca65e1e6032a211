#ifndef MULTIDEG_BIFILTERED_HPP
#define MULTIDEG_BIFILTERED_HPP

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "multideg/grading.hpp"
#include "multideg/kpoly.hpp"
#include "multideg/weyl_groebner.hpp"

namespace multideg {

using WElt = FreeModuleElement<Rational>;

/// A good (F,V)-bifiltration presented as D^r[n][m]/N: the Weyl algebra D
/// with an x-block (V-weight 0) and a t-block (V-filtration along t=0),
/// generators of N, and the F-/V-degree shifts of the free generators.
struct BifilteredPresentation {
  int nx = 0;  // x-block size
  int nt = 0;  // t-block size
  int rank = 1;
  WeylRingPtr D;  // vars: x1..x_nx, t1..t_nt, dx1..dx_nx, dt1..dt_nt
  std::vector<WElt> gens;
  ShiftPair shifts;

  int nvars() const { return 2 * (nx + nt); }
  int x_var(int i) const { return i; }
  int t_var(int j) const { return nx + j; }
  int dx_var(int i) const { return nx + nt + i; }
  int dt_var(int j) const { return 2 * nx + nt + j; }

  /// F-weights: 1 on derivations, 0 on positions.
  std::vector<long> f_weights() const {
    std::vector<long> w(nvars(), 0);
    for (int i = 0; i < nx; ++i) w[dx_var(i)] = 1;
    for (int j = 0; j < nt; ++j) w[dt_var(j)] = 1;
    return w;
  }

  /// V-weights along t=0: -1 on t, +1 on dt, 0 elsewhere.
  std::vector<long> v_weights() const {
    std::vector<long> w(nvars(), 0);
    for (int j = 0; j < nt; ++j) {
      w[t_var(j)] = -1;
      w[dt_var(j)] = 1;
    }
    return w;
  }
};

/// The Weyl algebra with the given block sizes ([d,x] = [dt,t] = 1).
inline BifilteredPresentation make_presentation(int nx, int nt, int rank) {
  BifilteredPresentation M;
  M.nx = nx;
  M.nt = nt;
  M.rank = rank;
  std::vector<std::string> vars;
  for (int i = 0; i < nx; ++i) vars.push_back("x" + std::to_string(i + 1));
  for (int j = 0; j < nt; ++j) vars.push_back("t" + std::to_string(j + 1));
  for (int i = 0; i < nx; ++i) vars.push_back("dx" + std::to_string(i + 1));
  for (int j = 0; j < nt; ++j) vars.push_back("dt" + std::to_string(j + 1));
  WeylRingBuilder b(vars);
  for (int i = 0; i < nx; ++i)
    b.add_pair("x" + std::to_string(i + 1), "dx" + std::to_string(i + 1));
  for (int j = 0; j < nt; ++j)
    b.add_pair("t" + std::to_string(j + 1), "dt" + std::to_string(j + 1));
  M.D = b.build();
  M.shifts.n_shifts.assign(rank, 0);
  M.shifts.m_shifts.assign(rank, 0);
  return M;
}

/// The bigrading tables for the graded rings attached to a presentation
/// with the given block sizes: variables x:(0,0), t:(0,-1), xi_x:(1,0),
/// xi_t:(1,1), followed by h:(1,0) (graded ring of D^(h) along V) or
/// theta:(0,1) (graded ring of R_V(D) along F), or nothing (bigr ring).
enum class GradedFlavor { GrVDh, GrFRV, Bigr };

inline Multigrading builtin_bigrading(int nx, int nt, GradedFlavor flavor) {
  std::vector<DegreeVector> vd;
  for (int i = 0; i < nx; ++i) vd.push_back({0, 0});
  for (int j = 0; j < nt; ++j) vd.push_back({0, -1});
  for (int i = 0; i < nx; ++i) vd.push_back({1, 0});
  for (int j = 0; j < nt; ++j) vd.push_back({1, 1});
  if (flavor == GradedFlavor::GrVDh) vd.push_back({1, 0});
  if (flavor == GradedFlavor::GrFRV) vd.push_back({0, 1});
  return Multigrading(vd, 2);
}

/// Newton polygon of an operator: the antichain of maximal points
/// (|nu| - |mu|, |beta| + |mu|) over the terms x^alpha t^nu dx^beta dt^mu.
/// Trivial iff a single maximal point (the polygon is a translate of the
/// quadrant).
struct NewtonPolygon {
  std::vector<std::pair<long, long>> points;  // maximal antichain, sorted
  bool is_trivial() const { return points.size() == 1; }
};

inline NewtonPolygon newton_polygon(const BifilteredPresentation& M,
                                    const QPoly& P) {
  if (P.is_zero())
    throw std::invalid_argument("newton_polygon: zero element");
  std::vector<long> u(M.nvars(), 0);  // |nu| - |mu|
  for (int j = 0; j < M.nt; ++j) {
    u[M.t_var(j)] = 1;
    u[M.dt_var(j)] = -1;
  }
  std::vector<long> v = M.f_weights();  // |beta| + |mu|
  auto pts = weight_support(P, u, v);
  NewtonPolygon np;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : pts)
      if (q != p && q.first <= p.first && q.second >= p.second)
        dominated = true;
    if (!dominated) np.points.push_back(p);
  }
  return np;
}

/// Commutative multigraded presentation: generators of a submodule of a
/// shifted free module over a graded polynomial ring.
struct GradedPresentation {
  RingPtr ring;
  int rank = 1;
  std::vector<WElt> gens;
  Multigrading grading;
  std::vector<DegreeVector> shifts;
  // When the generators are already a Groebner basis (e.g. symbols of a
  // reduced basis taken along an adapted order), the order they are a
  // basis for; consumers can then skip recomputing one.
  bool gens_are_gb = false;
  MonomialOrder gb_order;
};

/// The commutative Groebner basis of a presentation's generators under
/// grevlex, or the carried basis when the generators already form one.
inline GroebnerBasis<Rational> presentation_gb(const GradedPresentation& P) {
  if (P.gens_are_gb)
    return groebner_basis(P.gens, P.gb_order, /*assume_groebner=*/true);
  return reduced_groebner_basis(P.gens,
                                MonomialOrder::grevlex(P.ring->nvars()));
}

/// Associated graded module along the filtration by a weight vector,
/// computed through the Rees algebra: append a central variable z of
/// weight 1 (adjusting each commutator to stay homogeneous), homogenize
/// the generators, saturate by z, then pass modulo z. The returned ring
/// carries the graded relations (a commutator whose weight drops dies).
struct AssociatedGraded {
  WeylRingPtr ring;
  std::vector<WElt> gens;
};

inline AssociatedGraded gr_module(const WeylRing& W, const std::vector<WElt>& gens,
                                  int rank, const std::vector<long>& w,
                                  const std::vector<long>& shifts = {}) {
  int n = W.nvars();
  // Rees ring with central z appended
  std::vector<std::string> vars = W.ring->vars;
  vars.push_back("@z");
  WeylRingBuilder bz(vars);
  for (const auto& cp : W.pairs) {
    long drop = w[cp.pos] + w[cp.der] - weight_degree(cp.comm_exp, w);
    if (drop < 0)
      throw std::invalid_argument("gr_module: relations not adapted to weight");
    ExponentVector ce(n + 1, 0);
    for (int i = 0; i < n; ++i) ce[i] = cp.comm_exp[i];
    ce[n] = static_cast<int>(drop);
    bz.add_pair(W.ring->vars[cp.pos], W.ring->vars[cp.der], ce, cp.comm_coeff);
  }
  WeylRingPtr Wz = bz.build();
  std::vector<long> wz = w;
  wz.push_back(1);
  std::vector<int> vmap(n);
  for (int i = 0; i < n; ++i) vmap[i] = i;

  std::vector<WElt> hom;
  bool z_free = true;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    WElt h = homogenize(detail::lift_elt(g, Wz->ring, vmap), wz, n, shifts);
    for (int i = 0; i < h.rank() && z_free; ++i)
      for (const auto& [e, c] : h[i].terms())
        if (e[n] != 0) {
          z_free = false;
          break;
        }
    hom.push_back(std::move(h));
  }
  std::vector<WElt> sat =
      z_free ? hom : weyl_saturate_central(*Wz, hom, n, rank);

  // graded ring: same variables, commutators that lost weight become zero
  WeylRingBuilder bg(W.ring->vars);
  for (const auto& cp : W.pairs) {
    long drop = w[cp.pos] + w[cp.der] - weight_degree(cp.comm_exp, w);
    if (drop == 0)
      bg.add_pair(W.ring->vars[cp.pos], W.ring->vars[cp.der], cp.comm_exp,
                  cp.comm_coeff);
    else
      bg.add_pair(W.ring->vars[cp.pos], W.ring->vars[cp.der],
                  ExponentVector(n, 0), Rational(0));
  }
  AssociatedGraded out;
  out.ring = bg.build();
  // image modulo z: keep the z-free part of each generator
  for (const auto& g : sat) {
    WElt v(out.ring->ring, rank);
    for (int i = 0; i < rank; ++i)
      for (const auto& [e, c] : g[i].terms()) {
        if (e[n] != 0) continue;
        ExponentVector e2(e.begin(), e.begin() + n);
        v[i].add_term(e2, c);
      }
    if (!v.is_zero()) out.gens.push_back(std::move(v));
  }
  return out;
}

/// Presentation of the associated graded module along an arbitrary
/// adapted weight (same computation as gr_module; exported under the
/// name used by callers working with a single filtration).
inline AssociatedGraded gr_presentation(const WeylRing& W,
                                        const std::vector<WElt>& gens, int rank,
                                        const std::vector<long>& w,
                                        const std::vector<long>& shifts = {}) {
  return gr_module(W, gens, rank, w, shifts);
}

namespace detail {

// F-adapted admissible order on a ring whose derivations carry weight 1.
// The F-weight comes first (so symbols of a Groebner basis generate the
// associated graded); ties go to total degree and then lex, which keeps
// bases far smaller than a grevlex tie on the Euler-operator ideals that
// dominate this pipeline.
inline MonomialOrder f_adapted_order(int nvars, const std::vector<long>& fw) {
  std::vector<long> ones(nvars, 1);
  return MonomialOrder::lex(nvars).with_weight_front(ones).with_weight_front(
      fw);
}

}  // namespace detail

/// Presentation of gr^F(R_V(M)) over the commutative bigraded ring
/// k[x, t, theta, xi_x, xi_t]: V-homogenize the generators into R_V(D),
/// saturate by theta, take a Groebner basis along an F-adapted order and
/// pass to F-symbols. Bigrading per the Rees tables: x:(0,0), t:(0,-1),
/// dx:(1,0), dt:(1,1), theta:(0,1); generator shifts (n_i, m_i).
inline GradedPresentation grf_rv_presentation(
    const BifilteredPresentation& M,
    std::map<std::string, GroebnerStats>* stats = nullptr) {
  int n = M.nvars();
  // R_V(D) = D[theta]
  std::vector<std::string> vars = M.D->ring->vars;
  vars.push_back("theta");
  WeylRingBuilder bv(vars);
  for (const auto& cp : M.D->pairs) {
    ExponentVector ce(n + 1, 0);
    bv.add_pair(M.D->ring->vars[cp.pos], M.D->ring->vars[cp.der], ce,
                cp.comm_coeff);
  }
  WeylRingPtr RV = bv.build();
  int theta = n;
  std::vector<long> vw = M.v_weights();
  vw.push_back(1);  // theta
  std::vector<int> vmap(n);
  for (int i = 0; i < n; ++i) vmap[i] = i;

  std::vector<WElt> hom;
  bool theta_free = true;
  for (const auto& g : M.gens) {
    if (g.is_zero()) continue;
    WElt h = homogenize(detail::lift_elt(g, RV->ring, vmap), vw, theta,
                        M.shifts.m_shifts);
    for (int i = 0; i < h.rank() && theta_free; ++i)
      for (const auto& [e, c] : h[i].terms())
        if (e[theta] != 0) {
          theta_free = false;
          break;
        }
    hom.push_back(std::move(h));
  }
  std::vector<WElt> rv_gens =
      theta_free ? hom : weyl_saturate_central(*RV, hom, theta, M.rank);

  // F-adapted Groebner basis in R_V(D)
  std::vector<long> fw = M.f_weights();
  fw.push_back(0);  // theta has F-weight 0
  MonomialOrder ord = detail::f_adapted_order(n + 1, fw);
  GroebnerBasis<Rational> gb = weyl_groebner_basis(*RV, rv_gens, ord);
  gb = weyl_reduced_basis(*RV, std::move(gb));
  if (stats) (*stats)["grF_RV_weyl_gb"] = gb.stats;

  // F-symbols generate gr^F(R_V(N)) over the commutative shadow
  GradedPresentation P;
  P.ring = make_ring(RV->ring->vars);
  P.rank = M.rank;
  std::vector<int> idmap(n + 1);
  for (int i = 0; i <= n; ++i) idmap[i] = i;
  for (const auto& g : gb.elements) {
    WElt s = symbol(g, fw, M.shifts.n_shifts);
    WElt v(P.ring, M.rank);
    for (int i = 0; i < M.rank; ++i)
      v[i] = s[i].map_ring<Rational>(P.ring, idmap);
    P.gens.push_back(std::move(v));
  }
  P.grading = builtin_bigrading(M.nx, M.nt, GradedFlavor::GrFRV);
  for (int i = 0; i < M.rank; ++i)
    P.shifts.push_back({M.shifts.n_shifts[i], M.shifts.m_shifts[i]});
  // symbols of a reduced basis along an adapted order are a Groebner
  // basis for that order read commutatively
  P.gens_are_gb = true;
  P.gb_order = ord;
  return P;
}

/// Generic specialization of a block of degree-(0,..,0) variables
/// random integer values, retried while some leading
/// parameter coefficient vanishes.
struct SpecializedModule {
  GroebnerBasis<Rational> gb;  // Groebner basis over the reduced ring
  RingPtr ring;
  Multigrading grading;
  std::vector<DegreeVector> shifts;
  std::vector<Rational> values;
  int attempts = 0;
};

inline SpecializedModule specialize_generic(const GradedPresentation& P,
                                            const std::vector<int>& params,
                                            unsigned long long seed,
                                            int max_retries = 32) {
  int n = P.ring->nvars();
  std::vector<char> is_param(n, 0);
  for (int v : params) is_param[v] = 1;
  std::vector<std::string> main_vars;
  std::vector<int> main_map(n, -1);
  std::vector<int> main_idx;
  for (int i = 0; i < n; ++i)
    if (!is_param[i]) {
      main_map[i] = static_cast<int>(main_vars.size());
      main_idx.push_back(i);
      main_vars.push_back(P.ring->vars[i]);
    }
  SpecializedModule out;
  out.ring = make_ring(main_vars);
  std::vector<DegreeVector> vd;
  for (int i : main_idx) vd.push_back(P.grading.var_degrees[i]);
  out.grading = Multigrading(vd, P.grading.d);
  out.shifts = P.shifts;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> draw(-1000000, 1000000);
  MonomialOrder full = MonomialOrder::grevlex(n);
  for (int attempt = 1; attempt <= max_retries; ++attempt) {
    std::vector<Rational> values;
    for (size_t i = 0; i < params.size(); ++i) values.push_back(Rational(draw(rng)));
    auto sp = specialize(P.gens, params, values, full, out.ring, main_map);
    if (sp.generic) {
      out.gb = groebner_basis(sp.basis, MonomialOrder::grevlex(out.ring->nvars()),
                              /*assume_groebner=*/true);
      out.gb.order = MonomialOrder::grevlex(out.ring->nvars());
      out.values = std::move(values);
      out.attempts = attempt;
      return out;
    }
  }
  throw std::runtime_error(
      "specialize_generic: exhausted retries (seed " + std::to_string(seed) + ")");
}

/// Full K_{F,V} pipeline output.
struct KFVResult {
  KPolynomial k{2};
  long codim = 0;
  Multidegree multidegree;
  bool lower_vanish = true;  // K(1-T) has no part below codim
  bool specialized = false;
  std::vector<Rational> x_values;
  unsigned long long seed = 0;
  std::map<std::string, GroebnerStats> stats;
};

inline KFVResult k_fv(const BifilteredPresentation& M,
                      unsigned long long seed = 20240817ULL) {
  KFVResult R;
  R.seed = seed;
  GradedPresentation P = grf_rv_presentation(M, &R.stats);
  if (M.nx > 0) {
    std::vector<int> params;
    for (int i = 0; i < M.nx; ++i) params.push_back(M.x_var(i));
    SpecializedModule S = specialize_generic(P, params, seed);
    R.specialized = true;
    R.x_values = S.values;
    R.stats["specialized_gb"] = S.gb.stats;
    R.k = k_from_initial(S.gb, S.grading, S.shifts, P.rank);
    MonomialModule mm = MonomialModule::from_initial(
        S.gb.initial_module(), S.ring->nvars(), P.rank);
    R.codim = codim_monomial(mm);
  } else {
    auto gb = presentation_gb(P);
    R.stats["grF_RV_commutative_gb"] = gb.stats;
    R.k = k_from_initial(gb, P.grading, P.shifts, P.rank);
    MonomialModule mm = MonomialModule::from_initial(
        gb.initial_module(), P.ring->nvars(), P.rank);
    R.codim = codim_monomial(mm);
  }
  R.multidegree = expand_and_extract(R.k, R.codim);
  R.lower_vanish = lower_parts_vanish(R.k, R.codim);
  return R;
}

inline long codim_grF_RV(const BifilteredPresentation& M,
                         unsigned long long seed = 20240817ULL) {
  return k_fv(M, seed).codim;
}

/// Codimension of the initial module of a commutative presentation (after
/// generic specialization of the requested parameter block, if any).
inline long codim_of_presentation(const GradedPresentation& P,
                                  const std::vector<int>& params,
                                  unsigned long long seed = 20240817ULL) {
  if (!params.empty()) {
    SpecializedModule S = specialize_generic(P, params, seed);
    return codim_monomial(MonomialModule::from_initial(
        S.gb.initial_module(), S.ring->nvars(), P.rank));
  }
  auto gb = presentation_gb(P);
  return codim_monomial(MonomialModule::from_initial(
      gb.initial_module(), P.ring->nvars(), P.rank));
}

/// Full report: K_{F,V}, both codimensions (the second when bigr is
/// available, i.e. when the bifiltration is nice), multidegree, niceness,
/// and the zero-multidegree flag for the codimension-mismatch case.
struct MultidegreeReport {
  KPolynomial k{2};
  long codim = 0;                  // codim of gr^F(R_V(M))
  std::optional<long> codim_bigr;  // codim of bigr(M), when nice
  Multidegree multidegree;
  bool nice = false;
  bool zero_multidegree = false;
  bool specialized = false;
  std::vector<Rational> x_values;
  unsigned long long seed = 0;
  std::map<std::string, GroebnerStats> stats;
};

/// Niceness, commutative route: gr^F(R_V(M)) is theta-saturated,
/// i.e. (N : theta) = N for the presentation of gr^F(R_V(M)).
inline bool is_nice_theta_route(const BifilteredPresentation& M) {
  GradedPresentation P = grf_rv_presentation(M);
  int theta = P.ring->var_index("theta");
  auto gb = presentation_gb(P);
  Polynomial<Rational> th = Polynomial<Rational>::variable(P.ring, theta);
  auto quot = colon(P.gens, th, P.rank);
  for (const auto& q : quot)
    if (!contains(gb, q)) return false;
  return true;
}

/// The saturation-test order on gr^V(D^(h)) = D^(h): |beta|+k, then |beta|,
/// then a well-order on (alpha, beta) (h compared only through the rows).
inline MonomialOrder prop11_order(const BifilteredPresentation& M,
                                  TieBreak tie = TieBreak::GrevLex) {
  int n = M.nvars();
  std::vector<long> row1(n + 1, 0), row2(n + 1, 0);
  for (int i = 0; i < M.nx; ++i) row1[M.dx_var(i)] = row2[M.dx_var(i)] = 1;
  for (int j = 0; j < M.nt; ++j) row1[M.dt_var(j)] = row2[M.dt_var(j)] = 1;
  row1[n] = 1;  // h
  std::vector<int> main_vars;
  for (int v = 0; v < n; ++v) main_vars.push_back(v);
  MonomialOrder ord = MonomialOrder::grevlex(n + 1);
  ord.add_weight(row1);
  ord.add_weight(row2);
  ord.set_tie_break(tie);
  ord.set_main_block(main_vars);
  return ord;
}

/// Niceness, noncommutative route: F-homogenize N into D^(h),
/// saturate by h to get R_F(N), take gr^V, and test whether some lead of a
/// minimal reduced Groebner basis under the saturation-test order is divisible
/// by h.
inline bool is_nice_h_route(const BifilteredPresentation& M,
                            TieBreak tie = TieBreak::GrevLex) {
  int n = M.nvars();
  // D^(h): [d, x] = h, h central
  std::vector<std::string> vars = M.D->ring->vars;
  vars.push_back("h");
  WeylRingBuilder bh(vars);
  ExponentVector hcomm(n + 1, 0);
  hcomm[n] = 1;
  for (const auto& cp : M.D->pairs)
    bh.add_pair(M.D->ring->vars[cp.pos], M.D->ring->vars[cp.der], hcomm,
                cp.comm_coeff);
  WeylRingPtr DH = bh.build();
  int h = n;
  std::vector<long> fw = M.f_weights();
  fw.push_back(1);  // h
  std::vector<int> vmap(n);
  for (int i = 0; i < n; ++i) vmap[i] = i;

  std::vector<WElt> hom;
  bool h_free = true;
  for (const auto& g : M.gens) {
    if (g.is_zero()) continue;
    WElt e = homogenize(detail::lift_elt(g, DH->ring, vmap), fw, h,
                        M.shifts.n_shifts);
    for (int i = 0; i < e.rank() && h_free; ++i)
      for (const auto& [ex, c] : e[i].terms())
        if (ex[h] != 0) {
          h_free = false;
          break;
        }
    hom.push_back(std::move(e));
  }
  std::vector<WElt> rf_gens =
      h_free ? hom : weyl_saturate_central(*DH, hom, h, M.rank);

  // gr^V(R_F(N)) inside gr^V(D^(h)) = D^(h)
  std::vector<long> vw = M.v_weights();
  vw.push_back(0);  // h has V-weight 0
  AssociatedGraded GV = gr_module(*DH, rf_gens, M.rank, vw, M.shifts.m_shifts);

  MonomialOrder ord = prop11_order(M, tie);
  return minimal_gb_and_h_divisibility(*GV.ring, GV.gens, h, ord).second;
}

/// Reported niceness: the commutative theta-route; route agreement with
/// the h-route is exercised by the test suite.
inline bool is_nicely_bifiltered(const BifilteredPresentation& M) {
  return is_nice_theta_route(M);
}

/// Presentation of bigr(M) = gr^V(gr^F(M)) over k[x, t, xi_x, xi_t].
/// The construction computes the doubly associated graded module, which
/// equals bigr(M) only for nicely bifiltered M, so niceness is verified
/// unless the caller has already established it.
inline GradedPresentation bigr_presentation(const BifilteredPresentation& M,
                                            bool check_nice = true) {
  if (check_nice && !is_nice_theta_route(M))
    throw std::invalid_argument("bigr_presentation: module is not nicely bifiltered");
  int n = M.nvars();
  // gr^V(N) over gr^V(D) = D
  AssociatedGraded GV =
      gr_module(*M.D, M.gens, M.rank, M.v_weights(), M.shifts.m_shifts);
  // gr^F of the result via F-adapted GB + symbols
  std::vector<long> fw = M.f_weights();
  MonomialOrder ord = detail::f_adapted_order(n, fw);
  auto gb = weyl_groebner_basis(*GV.ring, GV.gens, ord);
  gb = weyl_reduced_basis(*GV.ring, std::move(gb));

  GradedPresentation P;
  P.ring = make_ring(M.D->ring->vars);
  P.rank = M.rank;
  std::vector<int> idmap(n);
  for (int i = 0; i < n; ++i) idmap[i] = i;
  for (const auto& g : gb.elements) {
    WElt s = symbol(g, fw, M.shifts.n_shifts);
    WElt v(P.ring, M.rank);
    for (int i = 0; i < M.rank; ++i)
      v[i] = s[i].map_ring<Rational>(P.ring, idmap);
    P.gens.push_back(std::move(v));
  }
  P.grading = builtin_bigrading(M.nx, M.nt, GradedFlavor::Bigr);
  for (int i = 0; i < M.rank; ++i)
    P.shifts.push_back({M.shifts.n_shifts[i], M.shifts.m_shifts[i]});
  P.gens_are_gb = true;
  P.gb_order = ord;
  return P;
}

/// K-polynomial of a commutative graded presentation (generic x-block
/// specialization when requested param variables are present).
inline KPolynomial k_of_presentation(const GradedPresentation& P,
                                     const std::vector<int>& params,
                                     unsigned long long seed = 20240817ULL) {
  if (!params.empty()) {
    SpecializedModule S = specialize_generic(P, params, seed);
    return k_from_initial(S.gb, S.grading, S.shifts, P.rank);
  }
  auto gb = presentation_gb(P);
  return k_from_initial(gb, P.grading, P.shifts, P.rank);
}

inline MultidegreeReport multidegree_fv(const BifilteredPresentation& M,
                                        unsigned long long seed = 20240817ULL) {
  KFVResult R = k_fv(M, seed);
  MultidegreeReport rep;
  rep.k = R.k;
  rep.codim = R.codim;
  rep.multidegree = R.multidegree;
  rep.specialized = R.specialized;
  rep.x_values = R.x_values;
  rep.seed = seed;
  rep.stats = R.stats;
  rep.nice = is_nice_theta_route(M);
  if (rep.nice) {
    GradedPresentation B = bigr_presentation(M, /*check_nice=*/false);
    std::vector<int> params;
    for (int i = 0; i < M.nx; ++i) params.push_back(M.x_var(i));
    rep.codim_bigr = codim_of_presentation(B, params, seed);
  }
  rep.zero_multidegree = rep.multidegree.form.is_zero();
  return rep;
}

/// gr^L(M) for the intermediate filtration L = pF + qV (p, q > 0,
/// coprime): associated graded along the weight p*F + q*V; the graded ring
/// is fully commutative since the commutators have L-weight 0 < p.
inline GradedPresentation gr_L(const BifilteredPresentation& M, long p, long q) {
  if (p <= 0 || q <= 0)
    throw std::invalid_argument("gr_L: slopes must be positive");
  int n = M.nvars();
  std::vector<long> w(n, 0);
  for (int i = 0; i < M.nx; ++i) w[M.dx_var(i)] = p;
  for (int j = 0; j < M.nt; ++j) {
    w[M.t_var(j)] = -q;
    w[M.dt_var(j)] = p + q;
  }
  std::vector<long> lshifts(M.rank);
  for (int i = 0; i < M.rank; ++i)
    lshifts[i] = p * M.shifts.n_shifts[i] + q * M.shifts.m_shifts[i];
  AssociatedGraded G = gr_module(*M.D, M.gens, M.rank, w, lshifts);

  GradedPresentation P;
  P.ring = make_ring(M.D->ring->vars);
  P.rank = M.rank;
  std::vector<int> idmap(n);
  for (int i = 0; i < n; ++i) idmap[i] = i;
  for (const auto& g : G.gens) {
    WElt v(P.ring, M.rank);
    for (int i = 0; i < M.rank; ++i)
      v[i] = g[i].map_ring<Rational>(P.ring, idmap);
    P.gens.push_back(std::move(v));
  }
  P.grading = builtin_bigrading(M.nx, M.nt, GradedFlavor::Bigr);
  for (int i = 0; i < M.rank; ++i)
    P.shifts.push_back({M.shifts.n_shifts[i], M.shifts.m_shifts[i]});
  return P;
}

/// Groups of supplied slopes (p,q) with equal initial ideals of gr^L(N)
/// (x-block specialized generically when present). One group over the
/// scanned set is consistent with "no slopes".
struct SlopeScan {
  std::vector<std::vector<std::pair<long, long>>> groups;
};

inline SlopeScan slope_scan(const BifilteredPresentation& M,
                            const std::vector<std::pair<long, long>>& slopes,
                            unsigned long long seed = 20240817ULL) {
  std::vector<int> params;
  for (int i = 0; i < M.nx; ++i) params.push_back(M.x_var(i));
  using Key = std::vector<std::pair<ExponentVector, int>>;
  std::map<Key, std::vector<std::pair<long, long>>> buckets;
  std::vector<Key> order_seen;
  for (auto [p, q] : slopes) {
    GradedPresentation P = gr_L(M, p, q);
    Key key;
    if (!params.empty()) {
      SpecializedModule S = specialize_generic(P, params, seed);
      auto minimal = S.gb;
      minimalize(minimal);
      key = minimal.initial_module();
    } else {
      auto gb = reduced_groebner_basis(P.gens,
                                       MonomialOrder::grevlex(P.ring->nvars()));
      key = gb.initial_module();
    }
    std::sort(key.begin(), key.end());
    if (!buckets.count(key)) order_seen.push_back(key);
    buckets[key].emplace_back(p, q);
  }
  SlopeScan out;
  for (const auto& k : order_seen) out.groups.push_back(buckets[k]);
  return out;
}

/// Single-filtration invariants: K_F via gr^F(M) with all position
/// variables specialized generically, the F-multidegree m*T^c, and the
/// generic rank (m = rank when c = number of position variables).
struct KFResult {
  KPolynomial k{1};
  long codim = 0;
  Multidegree multidegree;
  std::vector<Rational> values;
  unsigned long long seed = 0;
};

inline KFResult k_f(const BifilteredPresentation& M,
                    unsigned long long seed = 20240817ULL) {
  int n = M.nvars();
  std::vector<long> fw = M.f_weights();
  MonomialOrder ord = detail::f_adapted_order(n, fw);
  auto gb = weyl_groebner_basis(*M.D, M.gens, ord);
  gb = weyl_reduced_basis(*M.D, std::move(gb));

  GradedPresentation P;
  P.ring = make_ring(M.D->ring->vars);
  P.rank = M.rank;
  std::vector<int> idmap(n);
  for (int i = 0; i < n; ++i) idmap[i] = i;
  for (const auto& g : gb.elements) {
    WElt s = symbol(g, fw, M.shifts.n_shifts);
    WElt v(P.ring, M.rank);
    for (int i = 0; i < M.rank; ++i)
      v[i] = s[i].map_ring<Rational>(P.ring, idmap);
    P.gens.push_back(std::move(v));
  }
  std::vector<DegreeVector> vd(n);
  for (int v = 0; v < n; ++v) vd[v] = {fw[v]};
  P.grading = Multigrading(vd, 1);
  for (int i = 0; i < M.rank; ++i) P.shifts.push_back({M.shifts.n_shifts[i]});

  std::vector<int> params;  // every position variable
  for (int i = 0; i < M.nx; ++i) params.push_back(M.x_var(i));
  for (int j = 0; j < M.nt; ++j) params.push_back(M.t_var(j));

  KFResult R;
  R.seed = seed;
  if (!params.empty() && !P.gens.empty()) {
    SpecializedModule S = specialize_generic(P, params, seed);
    R.values = S.values;
    R.k = k_from_initial(S.gb, S.grading, S.shifts, P.rank);
    MonomialModule mm = MonomialModule::from_initial(
        S.gb.initial_module(), S.ring->nvars(), P.rank);
    R.codim = codim_monomial(mm);
  } else {
    auto cgb = reduced_groebner_basis(P.gens, MonomialOrder::grevlex(n));
    R.k = k_from_initial(cgb, P.grading, P.shifts, P.rank);
    MonomialModule mm =
        MonomialModule::from_initial(cgb.initial_module(), n, P.rank);
    R.codim = codim_monomial(mm);
  }
  R.multidegree = expand_and_extract(R.k, R.codim);
  return R;
}

inline BigInt generic_rank(const BifilteredPresentation& M,
                           unsigned long long seed = 20240817ULL) {
  KFResult R = k_f(M, seed);
  if (R.codim != M.nx + M.nt)
    throw std::runtime_error("generic_rank: not holonomic at graded level");
  BigInt m = 0;
  for (const auto& [b, c] : R.multidegree.form.terms()) m += c;
  return m;
}

}  // namespace multideg

#endif
