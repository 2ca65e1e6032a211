#ifndef MULTIDEG_GROEBNER_HPP
#define MULTIDEG_GROEBNER_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "multideg/gcd.hpp"
#include "multideg/poly.hpp"

namespace multideg {

struct GroebnerStats {
  long pairs_considered = 0;
  long pairs_skipped = 0;
  long reductions_to_zero = 0;
  long basis_size = 0;
};

template <typename F>
struct DivisionResult {
  std::vector<Polynomial<F>> quotients;
  FreeModuleElement<F> remainder;
};

/// Full normal form: every term of the remainder is irreducible.
/// p = sum quotients[i]*divisors[i] + remainder.
template <typename F>
DivisionResult<F> divide(const FreeModuleElement<F>& p,
                         const std::vector<FreeModuleElement<F>>& divisors,
                         const MonomialOrder& ord) {
  using Elt = FreeModuleElement<F>;
  DivisionResult<F> res;
  res.quotients.assign(divisors.size(), Polynomial<F>(p.ring()));
  res.remainder = Elt(p.ring(), p.rank());
  std::vector<typename Elt::Lead> leads;
  leads.reserve(divisors.size());
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
      res.quotients[i].add_term(m, c);
      work -= divisors[i].mul_monomial(m, c);
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
FreeModuleElement<F> normal_form(const FreeModuleElement<F>& p,
                                 const std::vector<FreeModuleElement<F>>& divisors,
                                 const MonomialOrder& ord) {
  return divide(p, divisors, ord).remainder;
}

namespace detail {

// Pin representation for F = Rational by integer-primitive scaling; for
// other fields fall back to making the element monic.
template <typename F>
FreeModuleElement<F> canonical_scale(const FreeModuleElement<F>& v,
                                     const MonomialOrder& ord) {
  return v.scaled(v.lead(ord).coeff.inverse());
}

inline FreeModuleElement<Rational> canonical_scale(
    const FreeModuleElement<Rational>& v, const MonomialOrder& ord) {
  BigInt num_gcd = 0, den_lcm = 1;
  for (int i = 0; i < v.rank(); ++i)
    for (const auto& [e, c] : v[i].terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
              c.numerator().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              c.denominator().get_mpz_t());
    }
  Rational s(den_lcm, num_gcd);
  if ((v.lead(ord).coeff * s).sign() < 0) s = -s;
  return v.scaled(s);
}

}  // namespace detail

/// Buchberger S-polynomial of two elements with leads in the same component.
template <typename F>
FreeModuleElement<F> s_polynomial(const FreeModuleElement<F>& f,
                                  const FreeModuleElement<F>& g,
                                  const MonomialOrder& ord) {
  auto lf = f.lead(ord), lg = g.lead(ord);
  ExponentVector l = exp_lcm(lf.exp, lg.exp);
  return f.mul_monomial(exp_sub(l, lf.exp), lf.coeff.inverse()) -
         g.mul_monomial(exp_sub(l, lg.exp), lg.coeff.inverse());
}

template <typename F>
struct GroebnerBasis {
  std::vector<FreeModuleElement<F>> elements;
  MonomialOrder order;
  GroebnerStats stats;

  std::vector<std::pair<ExponentVector, int>> initial_module() const {
    std::vector<std::pair<ExponentVector, int>> r;
    for (const auto& g : elements) {
      auto l = g.lead(order);
      r.emplace_back(l.exp, l.component);
    }
    return r;
  }
};

namespace detail {

struct Pair {
  long deg;        // total degree of the lcm (normal selection key)
  size_t i, j;     // i < j
  ExponentVector lcm;
  bool operator<(const Pair& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (lcm != o.lcm) return lcm < o.lcm;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

}  // namespace detail

/// Buchberger's algorithm with normal selection, the product criterion
/// (rank-one components only) and the chain criterion.
template <typename F>
GroebnerBasis<F> groebner_basis(std::vector<FreeModuleElement<F>> gens,
                                const MonomialOrder& ord,
                                bool assume_groebner = false) {
  using Elt = FreeModuleElement<F>;
  GroebnerBasis<F> gb;
  gb.order = ord;
  std::vector<typename Elt::Lead> leads;
  auto push = [&](const Elt& v) {
    Elt w = detail::canonical_scale(v, ord);
    gb.elements.push_back(w);
    leads.push_back(w.lead(ord));
  };
  for (auto& g : gens)
    if (!g.is_zero()) push(g);
  if (gb.elements.empty() || assume_groebner) {
    gb.stats.basis_size = static_cast<long>(gb.elements.size());
    return gb;
  }

  // Normal selection with the Gebauer-Moller update: new pairs are pruned
  // by the M and F criteria, queued pairs by the B criterion, and elements
  // whose lead a newer lead divides are retired from pairing and reduction.
  std::vector<char> alive(gb.elements.size(), 1);
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

  auto update = [&](size_t t) {
    std::vector<PairRec> cand;
    for (size_t i = 0; i < t; ++i) {
      if (!alive[i] || leads[i].component != leads[t].component) continue;
      cand.push_back({exp_lcm(leads[i].exp, leads[t].exp), i, t});
    }
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
    // product criterion: coprime leading monomials reduce to zero
    if (pr.lcm == exp_add(leads[pr.i].exp, leads[pr.j].exp)) {
      gb.stats.pairs_skipped++;
      continue;
    }
    Elt s = s_polynomial(gb.elements[pr.i], gb.elements[pr.j], ord);
    Elt r = normal_form(s, divisors, ord);
    if (r.is_zero()) {
      gb.stats.reductions_to_zero++;
      continue;
    }
    push(r);
    alive.push_back(1);
    update(gb.elements.size() - 1);
    rebuild_divisors();
  }
  gb.stats.basis_size = static_cast<long>(gb.elements.size());
  return gb;
}

/// Minimal basis: drop elements whose lead is divisible by another lead.
template <typename F>
void minimalize(GroebnerBasis<F>& gb) {
  using Elt = FreeModuleElement<F>;
  std::vector<typename Elt::Lead> leads;
  for (const auto& g : gb.elements) leads.push_back(g.lead(gb.order));
  std::vector<bool> keep(gb.elements.size(), true);
  for (size_t i = 0; i < gb.elements.size(); ++i)
    for (size_t j = 0; j < gb.elements.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (leads[j].component == leads[i].component &&
          exp_divides(leads[j].exp, leads[i].exp) &&
          !(j > i && leads[j].exp == leads[i].exp))
        keep[i] = false;
    }
  std::vector<Elt> out;
  for (size_t i = 0; i < gb.elements.size(); ++i)
    if (keep[i]) out.push_back(gb.elements[i]);
  gb.elements = std::move(out);
  gb.stats.basis_size = static_cast<long>(gb.elements.size());
}

/// The reduced Groebner basis: minimal, tails fully reduced, elements
/// canonically scaled and sorted by leading term (descending). Unique for
/// the submodule and order, so directly comparable.
template <typename F>
GroebnerBasis<F> reduced_basis(GroebnerBasis<F> gb) {
  minimalize(gb);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < gb.elements.size(); ++i) {
      std::vector<FreeModuleElement<F>> others;
      for (size_t j = 0; j < gb.elements.size(); ++j)
        if (j != i) others.push_back(gb.elements[j]);
      auto r = normal_form(gb.elements[i], others, gb.order);
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
GroebnerBasis<F> reduced_groebner_basis(std::vector<FreeModuleElement<F>> gens,
                                        const MonomialOrder& ord) {
  return reduced_basis(groebner_basis(std::move(gens), ord));
}

/// Membership of v in the submodule generated by a Groebner basis.
template <typename F>
bool contains(const GroebnerBasis<F>& gb, const FreeModuleElement<F>& v) {
  if (v.is_zero()) return true;
  if (gb.elements.empty()) return false;
  return normal_form(v, gb.elements, gb.order).is_zero();
}

/// Syzygies of a Groebner basis g_1..g_s: for every S-pair in the same
/// component, the element (m_i/c_i) e_i - (m_j/c_j) e_j - sum q_k e_k where
/// the S-polynomial reduces to zero with quotients q_k. By Schreyer's
/// theorem these generate the syzygy module and form a Groebner basis of it
/// under the induced Schreyer order.
template <typename F>
std::vector<FreeModuleElement<F>> syzygies(const GroebnerBasis<F>& gb) {
  using Elt = FreeModuleElement<F>;
  const auto& G = gb.elements;
  std::vector<Elt> out;
  if (G.empty()) return out;
  const RingPtr& ring = G[0].ring();
  int s = static_cast<int>(G.size());
  std::vector<typename Elt::Lead> leads;
  for (const auto& g : G) leads.push_back(g.lead(gb.order));
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      if (leads[i].component != leads[j].component) continue;
      ExponentVector l = exp_lcm(leads[i].exp, leads[j].exp);
      Elt sp = s_polynomial(G[i], G[j], gb.order);
      auto div = divide(sp, G, gb.order);
      if (!div.remainder.is_zero())
        throw std::logic_error("syzygies: input is not a Groebner basis");
      Elt syz(ring, s);
      syz[i] += Polynomial<F>::monomial(ring, exp_sub(l, leads[i].exp),
                                        leads[i].coeff.inverse());
      syz[j] -= Polynomial<F>::monomial(ring, exp_sub(l, leads[j].exp),
                                        leads[j].coeff.inverse());
      for (int k = 0; k < s; ++k) syz[k] -= div.quotients[k];
      if (!syz.is_zero()) out.push_back(std::move(syz));
    }
  return out;
}

/// One level of a free resolution: the map L_i -> L_{i-1}, columns are the
/// images of the generators of L_i.
template <typename F>
struct ResolutionStep {
  std::vector<FreeModuleElement<F>> map;  // columns, elements of L_{i-1}
  int source_rank = 0;
  int target_rank = 0;
};

template <typename F>
struct FreeResolution {
  std::vector<ResolutionStep<F>> steps;  // steps[0]: L_1 -> L_0
  int base_rank = 0;                     // rank of L_0
};

/// Schreyer resolution of the submodule generated by gens inside S^r:
/// level 1 is a Groebner basis under ord, each further level the syzygies
/// of the previous one under the induced Schreyer order.
template <typename F>
FreeResolution<F> free_resolution(std::vector<FreeModuleElement<F>> gens,
                                  const MonomialOrder& ord,
                                  int max_length = -1) {
  using Elt = FreeModuleElement<F>;
  FreeResolution<F> res;
  std::vector<Elt> nz;
  for (auto& g : gens)
    if (!g.is_zero()) nz.push_back(std::move(g));
  if (nz.empty()) return res;
  res.base_rank = nz[0].rank();

  GroebnerBasis<F> gb = groebner_basis(std::move(nz), ord);
  minimalize(gb);
  auto base_ord = std::make_shared<MonomialOrder>(ord);
  int level = 1;
  while (true) {
    ResolutionStep<F> step;
    step.map = gb.elements;
    step.source_rank = static_cast<int>(gb.elements.size());
    step.target_rank = level == 1 ? res.base_rank
                                  : res.steps.back().source_rank;
    res.steps.push_back(step);
    if (max_length >= 0 && level >= max_length) break;
    std::vector<Elt> syz = syzygies(gb);
    if (syz.empty()) break;
    std::vector<ExponentVector> lexps;
    std::vector<int> lcomps;
    for (const auto& g : gb.elements) {
      auto l = g.lead(gb.order);
      lexps.push_back(l.exp);
      lcomps.push_back(l.component);
    }
    MonomialOrder sord = MonomialOrder::schreyer(base_ord, lexps, lcomps);
    base_ord = std::make_shared<MonomialOrder>(sord);
    gb = groebner_basis(std::move(syz), sord, /*assume_groebner=*/true);
    // A minimalized Groebner basis still generates the syzygy module, so
    // exactness is kept while the level sizes stay close to minimal.
    minimalize(gb);
    ++level;
  }
  return res;
}

namespace detail {

template <typename F>
std::optional<F> constant_value(const Polynomial<F>& p) {
  if (p.size() != 1) return std::nullopt;
  const auto& [e, c] = *p.terms().begin();
  if (total_degree(e) != 0) return std::nullopt;
  return c;
}

}  // namespace detail

/// Prune unit entries from a resolution of a (positively) multigraded
/// module, yielding the minimal free resolution.
template <typename F>
void minimize_resolution(FreeResolution<F>& res) {
  using Elt = FreeModuleElement<F>;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t lvl = 0; lvl < res.steps.size(); ++lvl) {
      auto& psi = res.steps[lvl];
      // find a unit (nonzero constant) entry
      int row = -1, col = -1;
      F unit(0);
      for (int j = 0; j < psi.source_rank && col < 0; ++j)
        for (int k = 0; k < psi.target_rank && col < 0; ++k)
          if (auto c = detail::constant_value(psi.map[j][k])) {
            row = k, col = j, unit = *c;
          }
      if (col < 0) continue;
      changed = true;
      Elt pivot = psi.map[col];
      // clear row `row` in the other columns
      for (int j = 0; j < psi.source_rank; ++j) {
        if (j == col) continue;
        const Polynomial<F>& a = psi.map[j][row];
        if (!a.is_zero()) psi.map[j] -= a.scaled(unit.inverse()) * pivot;
      }
      // drop column `col` and row `row` of psi
      std::vector<Elt> nm;
      for (int j = 0; j < psi.source_rank; ++j) {
        if (j == col) continue;
        Elt v(pivot.ring(), psi.target_rank - 1);
        for (int k = 0, k2 = 0; k < psi.target_rank; ++k) {
          if (k == row) continue;
          v[k2++] = psi.map[j][k];
        }
        nm.push_back(std::move(v));
      }
      psi.map = std::move(nm);
      psi.source_rank -= 1;
      psi.target_rank -= 1;
      // next step (maps into L_lvl): drop row `col`
      if (lvl + 1 < res.steps.size()) {
        auto& phi = res.steps[lvl + 1];
        std::vector<Elt> nphi;
        for (int j = 0; j < phi.source_rank; ++j) {
          Elt v(pivot.ring(), phi.target_rank - 1);
          for (int k = 0, k2 = 0; k < phi.target_rank; ++k) {
            if (k == col) continue;
            v[k2++] = phi.map[j][k];
          }
          nphi.push_back(std::move(v));
        }
        phi.map = std::move(nphi);
        phi.target_rank -= 1;
      }
      // previous step (maps out of L_{lvl-1}): drop column `row`
      if (lvl == 0) {
        res.base_rank -= 1;
      } else {
        auto& rho = res.steps[lvl - 1];
        std::vector<Elt> nrho;
        for (int j = 0; j < rho.source_rank; ++j) {
          if (j == row) continue;
          nrho.push_back(rho.map[j]);
        }
        rho.map = std::move(nrho);
        rho.source_rank -= 1;
      }
      break;  // restart the sweep: ranks shifted
    }
  }
  // drop trailing zero steps
  while (!res.steps.empty() && res.steps.back().map.empty())
    res.steps.pop_back();
}

/// Groebner basis under an elimination order for the variables in `block`,
/// returning the basis elements free of those variables (in the same ring).
template <typename F>
std::vector<FreeModuleElement<F>> eliminate(
    std::vector<FreeModuleElement<F>> gens, const std::vector<int>& block,
    const MonomialOrder& tail_order) {
  if (gens.empty()) return gens;
  int n = gens[0].ring()->nvars();
  std::vector<long> w(n, 0);
  for (int v : block) w[v] = 1;
  MonomialOrder ord = tail_order.with_weight_front(w);
  GroebnerBasis<F> gb = reduced_groebner_basis(std::move(gens), ord);
  std::vector<FreeModuleElement<F>> out;
  for (const auto& g : gb.elements) {
    bool free = true;
    for (int i = 0; i < g.rank() && free; ++i)
      for (const auto& [e, c] : g[i].terms()) {
        for (int v : block)
          if (e[v] != 0) {
            free = false;
            break;
          }
        if (!free) break;
      }
    if (free) out.push_back(g);
  }
  return out;
}

namespace detail {

// Extend S^r over ring to S'[w]^r where w is appended last; returns the
// extended ring and the variable map.
template <typename F>
std::pair<RingPtr, std::vector<int>> extend_ring_aux(const RingPtr& ring,
                                                     const std::string& aux) {
  std::vector<std::string> vars = ring->vars;
  vars.push_back(aux);
  RingPtr ext = make_ring(std::move(vars));
  std::vector<int> vmap(ring->nvars());
  for (int i = 0; i < ring->nvars(); ++i) vmap[i] = i;
  return {ext, vmap};
}

template <typename F>
FreeModuleElement<F> lift_elt(const FreeModuleElement<F>& v, const RingPtr& ext,
                              const std::vector<int>& vmap) {
  FreeModuleElement<F> r(ext, v.rank());
  for (int i = 0; i < v.rank(); ++i)
    r[i] = v[i].template map_ring<F>(ext, vmap);
  return r;
}

template <typename F>
std::vector<FreeModuleElement<F>> drop_aux(
    const std::vector<FreeModuleElement<F>>& gens, const RingPtr& orig) {
  std::vector<FreeModuleElement<F>> out;
  if (gens.empty()) return out;
  std::vector<int> back(orig->nvars() + 1, -1);
  for (int i = 0; i < orig->nvars(); ++i) back[i] = i;
  for (const auto& g : gens) {
    FreeModuleElement<F> v(orig, g.rank());
    for (int i = 0; i < g.rank(); ++i)
      v[i] = g[i].template map_ring<F>(orig, back);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

/// Intersection of two submodules of S^r via the auxiliary-variable trick:
/// (w A + (1-w) B) cap S^r.
template <typename F>
std::vector<FreeModuleElement<F>> intersect_modules(
    const std::vector<FreeModuleElement<F>>& A,
    const std::vector<FreeModuleElement<F>>& B) {
  using Elt = FreeModuleElement<F>;
  if (A.empty()) return A;
  if (B.empty()) return B;
  const RingPtr& ring = A[0].ring();
  auto [ext, vmap] = detail::extend_ring_aux<F>(ring, "@w");
  int wi = ext->nvars() - 1;
  Polynomial<F> w = Polynomial<F>::variable(ext, wi);
  Polynomial<F> one_minus_w = Polynomial<F>(ext, F(1)) - w;
  std::vector<Elt> gens;
  for (const auto& a : A) gens.push_back(w * detail::lift_elt(a, ext, vmap));
  for (const auto& b : B)
    gens.push_back(one_minus_w * detail::lift_elt(b, ext, vmap));
  // deglex tail: degree then lex keeps these eliminations far smaller
  // than a grevlex tie on the inhomogeneous auxiliary generators
  MonomialOrder tail = MonomialOrder::lex(ext->nvars())
                           .with_weight_front(std::vector<long>(ext->nvars(), 1));
  auto elim = eliminate(std::move(gens), {wi}, tail);
  return detail::drop_aux(elim, ring);
}

/// Colon submodule N : f for a polynomial f: (N cap f*S^r) / f.
template <typename F>
std::vector<FreeModuleElement<F>> colon(
    const std::vector<FreeModuleElement<F>>& N, const Polynomial<F>& f,
    int rank) {
  using Elt = FreeModuleElement<F>;
  if (N.empty()) return N;
  const RingPtr& ring = N[0].ring();
  std::vector<Elt> fS;
  for (int i = 0; i < rank; ++i) {
    Elt e(ring, rank);
    e[i] = f;
    fS.push_back(std::move(e));
  }
  auto inter = intersect_modules(N, fS);
  std::vector<Elt> out;
  for (const auto& v : inter) {
    Elt q(ring, rank);
    for (int i = 0; i < rank; ++i)
      if (!v[i].is_zero()) q[i] = exact_divide(v[i], f);
    out.push_back(std::move(q));
  }
  return out;
}

/// Saturation N : f^infty = (N S[w]^r + (1 - w f) S[w]^r) cap S^r.
template <typename F>
std::vector<FreeModuleElement<F>> saturate(
    const std::vector<FreeModuleElement<F>>& N, const Polynomial<F>& f,
    int rank) {
  using Elt = FreeModuleElement<F>;
  const RingPtr& ring = f.ring();
  auto [ext, vmap] = detail::extend_ring_aux<F>(ring, "@w");
  int wi = ext->nvars() - 1;
  Polynomial<F> fw = f.template map_ring<F>(ext, vmap) *
                     Polynomial<F>::variable(ext, wi);
  Polynomial<F> u = Polynomial<F>(ext, F(1)) - fw;
  std::vector<Elt> gens;
  for (const auto& g : N) gens.push_back(detail::lift_elt(g, ext, vmap));
  for (int i = 0; i < rank; ++i) {
    Elt e(ext, rank);
    e[i] = u;
    gens.push_back(std::move(e));
  }
  // deglex tail: degree then lex keeps these eliminations far smaller
  // than a grevlex tie on the inhomogeneous auxiliary generators
  MonomialOrder tail = MonomialOrder::lex(ext->nvars())
                           .with_weight_front(std::vector<long>(ext->nvars(), 1));
  auto elim = eliminate(std::move(gens), {wi}, tail);
  return detail::drop_aux(elim, ring);
}

/// Specialization of a parametric Groebner basis (generic-fiber method).
/// The generators live in a ring whose variables split into a main block
/// and a parameter block; a Groebner basis is computed under the parametric
/// order (main order first, parameters compared last), the leading
/// parameter coefficients q_i are extracted, and the parameters are
/// substituted. When no q_i vanishes at the chosen point the substituted
/// basis is a Groebner basis of the specialized module with the same
/// leading terms as for generic parameter values.
template <typename F>
struct Specialization {
  bool generic = false;                      // no q_i vanished
  std::vector<FreeModuleElement<F>> basis;   // substituted basis (main ring)
  std::vector<Polynomial<F>> lead_coeffs;    // the q_i, in the full ring
};

template <typename F>
Specialization<F> specialize(const std::vector<FreeModuleElement<F>>& gens,
                             const std::vector<int>& param_vars,
                             const std::vector<F>& values,
                             const MonomialOrder& main_order_full,
                             const RingPtr& main_ring,
                             const std::vector<int>& main_var_map) {
  using Elt = FreeModuleElement<F>;
  Specialization<F> out;
  out.generic = true;
  if (gens.empty()) return out;
  const RingPtr& ring = gens[0].ring();
  std::vector<char> is_param(ring->nvars(), 0);
  for (int v : param_vars) is_param[v] = 1;
  std::vector<int> main_vars;
  for (int i = 0; i < ring->nvars(); ++i)
    if (!is_param[i]) main_vars.push_back(i);

  MonomialOrder ord = main_order_full;
  ord.set_main_block(main_vars);
  GroebnerBasis<F> gb = reduced_groebner_basis(gens, ord);

  for (const auto& g : gb.elements) {
    auto l = g.lead(ord);
    // leading parameter coefficient: all terms of the leading component
    // whose main part equals the main part of the lead
    Polynomial<F> q(ring);
    for (const auto& [e, c] : g[l.component].terms()) {
      bool same_main = true;
      for (int v : main_vars)
        if (e[v] != l.exp[v]) {
          same_main = false;
          break;
        }
      if (same_main) q.add_term(e, c);
    }
    out.lead_coeffs.push_back(q);
    // evaluate q at the parameter point
    F qv(0);
    for (const auto& [e, c] : q.terms()) {
      F t = c;
      for (size_t pi = 0; pi < param_vars.size(); ++pi)
        for (int j = 0; j < e[param_vars[pi]]; ++j) t *= values[pi];
      if (!t.is_zero()) qv += t;
    }
    if (qv.is_zero()) out.generic = false;
    // substitute parameters and map to the main ring
    Elt v(main_ring, g.rank());
    for (int i = 0; i < g.rank(); ++i) {
      Polynomial<F> p = g[i];
      for (size_t pi = 0; pi < param_vars.size(); ++pi)
        p = p.substitute(param_vars[pi], Polynomial<F>(ring, values[pi]));
      v[i] = p.template map_ring<F>(main_ring, main_var_map);
    }
    if (!v.is_zero()) out.basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace multideg

#endif
