#ifndef MULTIDEG_WEYL_GROEBNER_HPP
#define MULTIDEG_WEYL_GROEBNER_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "multideg/groebner.hpp"
#include "multideg/weyl.hpp"

namespace multideg {

/// The order is usable for left Groebner bases in W iff it is a well-order
/// and, for every conjugate pair, pos*der is larger than the commutator
/// monomial, so leading terms are multiplicative.
inline bool is_admissible(const WeylRing& W, const MonomialOrder& ord) {
  if (!ord.is_well_order()) return false;
  for (const auto& cp : W.pairs) {
    ExponentVector pd(W.nvars(), 0);
    pd[cp.pos] = 1;
    pd[cp.der] = 1;
    if (ord.compare(pd, cp.comm_exp) <= 0) return false;
  }
  return true;
}

template <typename F>
DivisionResult<F> weyl_divide(const WeylRing& W, const FreeModuleElement<F>& p,
                              const std::vector<FreeModuleElement<F>>& divisors,
                              const MonomialOrder& ord) {
  using Elt = FreeModuleElement<F>;
  DivisionResult<F> res;
  res.quotients.assign(divisors.size(), Polynomial<F>(p.ring()));
  res.remainder = Elt(p.ring(), p.rank());
  std::vector<typename Elt::Lead> leads;
  for (const auto& d : divisors) leads.push_back(d.lead(ord));
  Elt work = p;
  while (!work.is_zero()) {
    auto lt = work.lead(ord);
    bool reduced = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      if (leads[i].component != lt.component) continue;
      if (!exp_divides(leads[i].exp, lt.exp)) continue;
      ExponentVector m = exp_sub(lt.exp, leads[i].exp);
      F c = lt.coeff / leads[i].coeff;
      Polynomial<F> mono = Polynomial<F>::monomial(p.ring(), m, c);
      res.quotients[i] += mono;
      work -= weyl_mul(W, mono, divisors[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      res.remainder[lt.component].add_term(lt.exp, lt.coeff);
      work[lt.component].add_term(lt.exp, -lt.coeff);
    }
  }
  return res;
}

template <typename F>
FreeModuleElement<F> weyl_normal_form(
    const WeylRing& W, const FreeModuleElement<F>& p,
    const std::vector<FreeModuleElement<F>>& divisors,
    const MonomialOrder& ord) {
  return weyl_divide(W, p, divisors, ord).remainder;
}

template <typename F>
FreeModuleElement<F> weyl_s_polynomial(const WeylRing& W,
                                       const FreeModuleElement<F>& f,
                                       const FreeModuleElement<F>& g,
                                       const MonomialOrder& ord) {
  auto lf = f.lead(ord), lg = g.lead(ord);
  ExponentVector l = exp_lcm(lf.exp, lg.exp);
  Polynomial<F> mf = Polynomial<F>::monomial(f.ring(), exp_sub(l, lf.exp),
                                             lf.coeff.inverse());
  Polynomial<F> mg = Polynomial<F>::monomial(g.ring(), exp_sub(l, lg.exp),
                                             lg.coeff.inverse());
  return weyl_mul(W, mf, f) - weyl_mul(W, mg, g);
}

/// Left Groebner basis in W via Buchberger with normal selection and the
/// Gebauer-Moller pair pruning (the chain criterion, applied both to new
/// and to queued pairs). The product criterion is not valid for
/// noncommutative pairs, so the coprimality shortcuts are omitted.
/// Elements whose lead becomes divisible by a newer lead are retired from
/// pairing and from the reduction set; their leads stay multiples of live
/// leads, so the basis property is unaffected.
template <typename F>
GroebnerBasis<F> weyl_groebner_basis(const WeylRing& W,
                                     std::vector<FreeModuleElement<F>> gens,
                                     const MonomialOrder& ord) {
  using Elt = FreeModuleElement<F>;
  if (!is_admissible(W, ord))
    throw std::invalid_argument("weyl_groebner_basis: order not admissible");
  GroebnerBasis<F> gb;
  gb.order = ord;
  std::vector<typename Elt::Lead> leads;
  std::vector<char> alive;

  struct PairRec {
    ExponentVector lcm;
    size_t i, j;  // i < j
  };
  auto cmp = [&ord](const PairRec& a, const PairRec& b) {
    int c = ord.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::multiset<PairRec, decltype(cmp)> pending(cmp);

  auto push = [&](const Elt& v) {
    Elt w = detail::canonical_scale(v, ord);
    gb.elements.push_back(w);
    leads.push_back(w.lead(ord));
    alive.push_back(1);
  };

  auto update = [&](size_t t) {
    std::vector<PairRec> cand;
    for (size_t i = 0; i < t; ++i) {
      if (!alive[i] || leads[i].component != leads[t].component) continue;
      cand.push_back({exp_lcm(leads[i].exp, leads[t].exp), i, t});
    }
    // M criterion: drop (i,t) when another (j,t) has a strictly smaller
    // lcm dividing it; F criterion: keep one pair per repeated lcm
    std::vector<char> keep(cand.size(), 1);
    for (size_t a = 0; a < cand.size(); ++a)
      for (size_t b = 0; b < cand.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (cand[a].lcm == cand[b].lcm) {
          if (b < a) keep[a] = 0;
        } else if (exp_divides(cand[b].lcm, cand[a].lcm)) {
          keep[a] = 0;
        }
      }
    // B criterion: queued pairs whose lcm the new lead strictly refines
    for (auto it = pending.begin(); it != pending.end();) {
      const PairRec& p = *it;
      if (leads[p.i].component == leads[t].component &&
          exp_divides(leads[t].exp, p.lcm) &&
          exp_lcm(leads[p.i].exp, leads[t].exp) != p.lcm &&
          exp_lcm(leads[p.j].exp, leads[t].exp) != p.lcm) {
        it = pending.erase(it);
        gb.stats.pairs_skipped++;
      } else {
        ++it;
      }
    }
    for (size_t a = 0; a < cand.size(); ++a) {
      if (keep[a]) pending.insert(cand[a]);
      else gb.stats.pairs_skipped++;
    }
    for (size_t i = 0; i < t; ++i)
      if (alive[i] && leads[i].component == leads[t].component &&
          exp_divides(leads[t].exp, leads[i].exp))
        alive[i] = 0;
  };

  for (auto& g : gens)
    if (!g.is_zero()) push(g);
  if (gb.elements.empty()) return gb;
  for (size_t t = 1; t < gb.elements.size(); ++t) update(t);

  std::vector<Elt> divisors;
  auto rebuild_divisors = [&]() {
    divisors.clear();
    for (size_t i = 0; i < gb.elements.size(); ++i)
      if (alive[i]) divisors.push_back(gb.elements[i]);
  };
  rebuild_divisors();

  while (!pending.empty()) {
    PairRec pr = *pending.begin();
    pending.erase(pending.begin());
    gb.stats.pairs_considered++;
    Elt s = weyl_s_polynomial(W, gb.elements[pr.i], gb.elements[pr.j], ord);
    Elt r = weyl_normal_form(W, s, divisors, ord);
    if (r.is_zero()) {
      gb.stats.reductions_to_zero++;
      continue;
    }
    push(r);
    update(gb.elements.size() - 1);
    rebuild_divisors();
  }
  gb.stats.basis_size = static_cast<long>(gb.elements.size());
  return gb;
}

/// Minimal Groebner basis with fully reduced tails (reduction uses the
/// noncommutative division, so the result is again canonical).
template <typename F>
GroebnerBasis<F> weyl_reduced_basis(const WeylRing& W, GroebnerBasis<F> gb) {
  minimalize(gb);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < gb.elements.size(); ++i) {
      std::vector<FreeModuleElement<F>> others;
      for (size_t j = 0; j < gb.elements.size(); ++j)
        if (j != i) others.push_back(gb.elements[j]);
      auto r = weyl_normal_form(W, gb.elements[i], others, gb.order);
      r = detail::canonical_scale(r, gb.order);
      if (!(r == gb.elements[i])) {
        gb.elements[i] = r;
        changed = true;
      }
    }
  }
  std::sort(gb.elements.begin(), gb.elements.end(),
            [&](const FreeModuleElement<F>& a, const FreeModuleElement<F>& b) {
              auto la = a.lead(gb.order), lb = b.lead(gb.order);
              return gb.order.compare(la.exp, la.component, lb.exp,
                                      lb.component) > 0;
            });
  return gb;
}

template <typename F>
bool weyl_contains(const WeylRing& W, const GroebnerBasis<F>& gb,
                   const FreeModuleElement<F>& v) {
  if (v.is_zero()) return true;
  if (gb.elements.empty()) return false;
  return weyl_normal_form(W, v, gb.elements, gb.order).is_zero();
}

/// Minimal reduced left Groebner basis of a submodule of W^r homogeneous
/// for the total degree in the derivations and the homogenization
/// variable h, together with the saturation verdict: the quotient is
/// h-saturated iff no leading monomial of the minimal basis is divisible
/// by h (divisibility criterion on the minimal basis).
template <typename F>
std::pair<GroebnerBasis<F>, bool> minimal_gb_and_h_divisibility(
    const WeylRing& W, const std::vector<FreeModuleElement<F>>& gens, int h,
    const MonomialOrder& ord) {
  std::vector<long> w(W.nvars(), 0);
  w[h] = 1;
  for (const auto& cp : W.pairs) w[cp.der] = 1;
  for (const auto& g : gens) {
    bool first = true;
    long deg = 0;
    for (int i = 0; i < g.rank(); ++i)
      for (const auto& [e, c] : g[i].terms()) {
        long t = weight_degree(e, w);
        if (first) deg = t, first = false;
        else if (t != deg)
          throw std::invalid_argument(
              "minimal_gb_and_h_divisibility: generator not homogeneous");
      }
  }
  auto gb = weyl_groebner_basis(W, gens, ord);
  gb = weyl_reduced_basis(W, std::move(gb));
  bool saturated = true;
  for (const auto& g : gb.elements)
    if (!g.is_zero() && g.lead(ord).exp[h] > 0) saturated = false;
  return {std::move(gb), saturated};
}

/// WeylRing with one extra central variable appended (for elimination
/// tricks); also returns the index map from the original variables.
inline std::pair<WeylRingPtr, std::vector<int>> extend_weyl_ring(
    const WeylRing& W, const std::string& aux) {
  std::vector<std::string> vars = W.ring->vars;
  vars.push_back(aux);
  WeylRingBuilder b(vars);
  int n = W.nvars();
  for (const auto& cp : W.pairs) {
    ExponentVector ce(n + 1, 0);
    for (int i = 0; i < n; ++i) ce[i] = cp.comm_exp[i];
    b.add_pair(W.ring->vars[cp.pos], W.ring->vars[cp.der], ce, cp.comm_coeff);
  }
  std::vector<int> vmap(n);
  for (int i = 0; i < n; ++i) vmap[i] = i;
  return {b.build(), vmap};
}

/// Saturation N : z^infty of a left submodule N of W^r by a central
/// variable z, via the auxiliary central variable w and elimination of w
/// from N + <(1 - w z) e_j>.
template <typename F>
std::vector<FreeModuleElement<F>> weyl_saturate_central(
    const WeylRing& W, const std::vector<FreeModuleElement<F>>& N, int z,
    int rank) {
  using Elt = FreeModuleElement<F>;
  if (!W.is_central(z))
    throw std::invalid_argument("weyl_saturate_central: variable not central");
  auto [Wx, vmap] = extend_weyl_ring(W, "@w");
  const RingPtr& ext = Wx->ring;
  int wi = ext->nvars() - 1;
  ExponentVector wz(ext->nvars(), 0);
  wz[wi] = 1;
  wz[z] = 1;
  Polynomial<F> u = Polynomial<F>(ext, F(1)) -
                    Polynomial<F>::monomial(ext, wz, F(1));
  std::vector<Elt> gens;
  for (const auto& g : N) gens.push_back(detail::lift_elt(g, ext, vmap));
  for (int i = 0; i < rank; ++i) {
    Elt e(ext, rank);
    e[i] = u;
    gens.push_back(std::move(e));
  }
  // elimination row for w, then total degree on the conjugate-pair
  // variables so pos*der beats any central commutator monomial (keeps the
  // order admissible for commutators like s^p, p >= 2)
  std::vector<long> wrow(ext->nvars(), 0);
  wrow[wi] = 1;
  std::vector<long> ncrow(ext->nvars(), 0);
  for (int v = 0; v < ext->nvars(); ++v)
    if (!Wx->is_central(v)) ncrow[v] = 1;
  MonomialOrder ord = MonomialOrder::grevlex(ext->nvars())
                          .with_weight_front(ncrow)
                          .with_weight_front(wrow);
  GroebnerBasis<F> gb = weyl_groebner_basis(*Wx, std::move(gens), ord);
  gb = weyl_reduced_basis(*Wx, std::move(gb));
  std::vector<Elt> kept;
  for (const auto& g : gb.elements) {
    bool free = true;
    for (int i = 0; i < g.rank() && free; ++i)
      for (const auto& [e, c] : g[i].terms())
        if (e[wi] != 0) {
          free = false;
          break;
        }
    if (free) kept.push_back(g);
  }
  return detail::drop_aux(kept, W.ring);
}

}  // namespace multideg

#endif
