#ifndef MULTIDEG_WEYL_HPP
#define MULTIDEG_WEYL_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "multideg/poly.hpp"

namespace multideg {

/// An algebra of differential-operator type: a polynomial ring whose
/// variables split into conjugate pairs (position, derivation) and central
/// variables. Each pair carries its commutation rule
///   [der, pos] = coeff * (central monomial),
/// e.g. [dx, x] = 1 in the Weyl algebra, [dx, x] = h in its homogenization,
/// [dt, t] = s^p in the generalized Rees algebra. Elements are stored in
/// normal order (positions left of derivations), so the underlying data is
/// an ordinary commutative polynomial; only multiplication differs.
struct WeylRing {
  struct ConjugatePair {
    int pos;
    int der;
    ExponentVector comm_exp;  // exponent of the central commutator monomial
    Rational comm_coeff;
  };

  RingPtr ring;
  std::vector<ConjugatePair> pairs;
  std::vector<int> pair_of;  // per variable: index into pairs, or -1 (central)

  int nvars() const { return ring->nvars(); }
  bool is_central(int v) const { return pair_of[v] < 0; }
};

using WeylRingPtr = std::shared_ptr<const WeylRing>;

/// Build a WeylRing. `pairs` lists (pos_name, der_name); variables named in
/// neither slot are central. Commutators default to 1 and can be reset with
/// set_commutator before freezing.
class WeylRingBuilder {
 public:
  explicit WeylRingBuilder(std::vector<std::string> vars)
      : vars_(std::move(vars)) {}

  WeylRingBuilder& add_pair(const std::string& pos, const std::string& der,
                            ExponentVector comm_exp = {},
                            Rational comm_coeff = Rational(1)) {
    pending_.push_back({pos, der, std::move(comm_exp), std::move(comm_coeff)});
    return *this;
  }

  WeylRingPtr build() const {
    auto wr = std::make_shared<WeylRing>();
    wr->ring = make_ring(vars_);
    wr->pair_of.assign(wr->ring->nvars(), -1);
    for (const auto& p : pending_) {
      int pi = wr->ring->var_index(p.pos);
      int di = wr->ring->var_index(p.der);
      if (pi < 0 || di < 0)
        throw std::invalid_argument("WeylRing: unknown variable in pair");
      WeylRing::ConjugatePair cp;
      cp.pos = pi;
      cp.der = di;
      cp.comm_exp = p.comm_exp.empty() ? ExponentVector(wr->ring->nvars(), 0)
                                       : p.comm_exp;
      if (static_cast<int>(cp.comm_exp.size()) != wr->ring->nvars())
        throw std::invalid_argument("WeylRing: commutator exponent length");
      cp.comm_coeff = p.comm_coeff;
      wr->pair_of[pi] = static_cast<int>(wr->pairs.size());
      wr->pair_of[di] = static_cast<int>(wr->pairs.size());
      wr->pairs.push_back(std::move(cp));
    }
    // commutator monomials must be central
    for (const auto& cp : wr->pairs)
      for (int v = 0; v < wr->ring->nvars(); ++v)
        if (cp.comm_exp[v] != 0 && wr->pair_of[v] >= 0)
          throw std::invalid_argument("WeylRing: commutator not central");
    return wr;
  }

 private:
  struct Pending {
    std::string pos, der;
    ExponentVector comm_exp;
    Rational comm_coeff;
  };
  std::vector<std::string> vars_;
  std::vector<Pending> pending_;
};

namespace detail {

// der^b * pos^g for one conjugate pair with [der,pos] = c*m (m central):
// sum_k k! C(b,k) C(g,k) (c*m)^k pos^{g-k} der^{b-k}. Returns the list of
// (k, scalar) contributions; monomial bookkeeping happens in the caller.
inline std::vector<std::pair<int, Rational>> reorder_coeffs(int b, int g,
                                                            const Rational& c) {
  std::vector<std::pair<int, Rational>> out;
  int kmax = std::min(b, g);
  BigInt fact = 1;
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) fact *= k;
    Rational s = Rational(BigInt(fact * binomial(b, k) * binomial(g, k)));
    for (int j = 0; j < k; ++j) s *= c;
    out.emplace_back(k, s);
  }
  return out;
}

}  // namespace detail

/// Product of two normally ordered terms (ea,ca)*(eb,cb) in W.
template <typename F>
Polynomial<F> weyl_term_product(const WeylRing& W, const ExponentVector& ea,
                                const F& ca, const ExponentVector& eb,
                                const F& cb) {
  Polynomial<F> acc = Polynomial<F>::monomial(W.ring, exp_add(ea, eb), ca * cb);
  for (const auto& cp : W.pairs) {
    int b = ea[cp.der], g = eb[cp.pos];
    if (b == 0 || g == 0) continue;
    Polynomial<F> next(W.ring);
    auto ks = detail::reorder_coeffs(b, g, cp.comm_coeff);
    for (const auto& [e, c] : acc.terms())
      for (const auto& [k, s] : ks) {
        if (s.is_zero()) continue;
        ExponentVector e2 = e;
        e2[cp.pos] -= k;
        e2[cp.der] -= k;
        for (int v = 0; v < W.nvars(); ++v) e2[v] += k * cp.comm_exp[v];
        next.add_term(e2, c * F(s));
      }
    acc = std::move(next);
  }
  return acc;
}

/// Noncommutative product of two normally ordered elements.
template <typename F>
Polynomial<F> weyl_mul(const WeylRing& W, const Polynomial<F>& a,
                       const Polynomial<F>& b) {
  Polynomial<F> r(W.ring);
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms())
      r += weyl_term_product(W, ea, ca, eb, cb);
  return r;
}

/// Left action p * v on a free module element, componentwise.
template <typename F>
FreeModuleElement<F> weyl_mul(const WeylRing& W, const Polynomial<F>& p,
                              const FreeModuleElement<F>& v) {
  FreeModuleElement<F> r(v.ring(), v.rank());
  for (int i = 0; i < v.rank(); ++i) r[i] = weyl_mul(W, p, v[i]);
  return r;
}

/// Weight of a term under a per-variable weight vector.
inline long weight_degree(const ExponentVector& e, const std::vector<long>& w) {
  long s = 0;
  for (size_t i = 0; i < e.size(); ++i) s += w[i] * static_cast<long>(e[i]);
  return s;
}

/// Maximal term weight of a nonzero element (its order along the
/// filtration defined by w).
template <typename F>
long order_along(const Polynomial<F>& p, const std::vector<long>& w) {
  bool first = true;
  long d = 0;
  for (const auto& [e, c] : p.terms()) {
    long t = weight_degree(e, w);
    if (first || t > d) d = t;
    first = false;
  }
  if (first) throw std::domain_error("order_along: zero element");
  return d;
}

template <typename F>
long order_along(const FreeModuleElement<F>& v, const std::vector<long>& w,
                 const std::vector<long>& shifts = {}) {
  bool first = true;
  long d = 0;
  for (int i = 0; i < v.rank(); ++i)
    for (const auto& [e, c] : v[i].terms()) {
      long t = weight_degree(e, w) + (shifts.empty() ? 0 : shifts[i]);
      if (first || t > d) d = t;
      first = false;
    }
  if (first) throw std::domain_error("order_along: zero element");
  return d;
}

/// Homogenize along the filtration by w using the central variable z
/// (weight 1): each term is padded by z^(k - weight) where k is the order
/// of the whole element (or the requested level, which must dominate).
template <typename F>
Polynomial<F> homogenize(const Polynomial<F>& p, const std::vector<long>& w,
                         int z, long level = -1) {
  if (p.is_zero()) return p;
  long k = order_along(p, w);
  if (level >= 0) {
    if (level < k) throw std::invalid_argument("homogenize: level too small");
    k = level;
  }
  Polynomial<F> r(p.ring());
  for (const auto& [e, c] : p.terms()) {
    ExponentVector e2 = e;
    e2[z] += static_cast<int>(k - weight_degree(e, w));
    r.add_term(e2, c);
  }
  return r;
}

template <typename F>
FreeModuleElement<F> homogenize(const FreeModuleElement<F>& v,
                                const std::vector<long>& w, int z,
                                const std::vector<long>& shifts = {},
                                long level = -1) {
  if (v.is_zero()) return v;
  long k = order_along(v, w, shifts);
  if (level >= 0) {
    if (level < k) throw std::invalid_argument("homogenize: level too small");
    k = level;
  }
  FreeModuleElement<F> r(v.ring(), v.rank());
  for (int i = 0; i < v.rank(); ++i) {
    long sh = shifts.empty() ? 0 : shifts[i];
    for (const auto& [e, c] : v[i].terms()) {
      ExponentVector e2 = e;
      e2[z] += static_cast<int>(k - weight_degree(e, w) - sh);
      r[i].add_term(e2, c);
    }
  }
  return r;
}

/// Dehomogenize: set variable z to 1.
template <typename F>
Polynomial<F> dehomogenize(const Polynomial<F>& p, int z) {
  Polynomial<F> r(p.ring());
  for (const auto& [e, c] : p.terms()) {
    ExponentVector e2 = e;
    e2[z] = 0;
    r.add_term(e2, c);
  }
  return r;
}

/// Top-weight part of an element: the symbol along the filtration by w,
/// as a polynomial in the same (commutative shadow) ring.
template <typename F>
Polynomial<F> symbol(const Polynomial<F>& p, const std::vector<long>& w) {
  if (p.is_zero()) return p;
  long k = order_along(p, w);
  Polynomial<F> r(p.ring());
  for (const auto& [e, c] : p.terms())
    if (weight_degree(e, w) == k) r.add_term(e, c);
  return r;
}

template <typename F>
FreeModuleElement<F> symbol(const FreeModuleElement<F>& v,
                            const std::vector<long>& w,
                            const std::vector<long>& shifts = {}) {
  if (v.is_zero()) return v;
  long k = order_along(v, w, shifts);
  FreeModuleElement<F> r(v.ring(), v.rank());
  for (int i = 0; i < v.rank(); ++i) {
    long sh = shifts.empty() ? 0 : shifts[i];
    for (const auto& [e, c] : v[i].terms())
      if (weight_degree(e, w) + sh == k) r[i].add_term(e, c);
  }
  return r;
}

/// Support points (weight pairs) of an operator under two weight vectors:
/// the finite point set whose convex hull is the Newton polygon of P in
/// the (u,v)-plane.
template <typename F>
std::vector<std::pair<long, long>> weight_support(const Polynomial<F>& p,
                                                  const std::vector<long>& u,
                                                  const std::vector<long>& v) {
  std::vector<std::pair<long, long>> pts;
  for (const auto& [e, c] : p.terms())
    pts.emplace_back(weight_degree(e, u), weight_degree(e, v));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace multideg

#endif
