#ifndef MULTIDEG_GCD_HPP
#define MULTIDEG_GCD_HPP

#include <map>

#include "multideg/poly.hpp"

namespace multideg {

using QPoly = Polynomial<Rational>;

/// Rational scalar c such that c*p has coprime integer coefficients with
/// positive leading (grevlex) coefficient; p nonzero.
inline Rational primitive_scale(const QPoly& p) {
  BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  MonomialOrder ord = MonomialOrder::grevlex(p.ring()->nvars());
  if ((p.lead(ord).second * scale).sign() < 0) scale = -scale;
  return scale;
}

inline QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(primitive_scale(p));
}

/// Exact division p / q; throws if q does not divide p.
template <typename F>
Polynomial<F> exact_divide(const Polynomial<F>& p, const Polynomial<F>& q) {
  if (q.is_zero()) throw FieldError("exact_divide: division by zero polynomial");
  MonomialOrder ord = MonomialOrder::grevlex(p.ring()->nvars());
  Polynomial<F> rem = p, quot(p.ring());
  auto [qe, qc] = q.lead(ord);
  while (!rem.is_zero()) {
    auto [re, rc] = rem.lead(ord);
    if (!exp_divides(qe, re))
      throw FieldError("exact_divide: not divisible");
    Polynomial<F> t = Polynomial<F>::monomial(p.ring(), exp_sub(re, qe), rc / qc);
    quot += t;
    rem -= t * q;
  }
  return quot;
}

namespace detail {

// p as a univariate polynomial in variable v with polynomial coefficients
inline std::map<int, QPoly> coeffs_in(const QPoly& p, int v) {
  std::map<int, QPoly> r;
  for (const auto& [e, c] : p.terms()) {
    ExponentVector e2 = e;
    int k = e2[v];
    e2[v] = 0;
    auto it = r.find(k);
    if (it == r.end()) it = r.emplace(k, QPoly(p.ring())).first;
    it->second.add_term(e2, c);
  }
  return r;
}

inline QPoly from_coeffs(const RingPtr& ring, int v,
                         const std::map<int, QPoly>& cs) {
  QPoly r(ring);
  for (const auto& [k, c] : cs) {
    ExponentVector m(ring->nvars(), 0);
    m[v] = k;
    r += c.shifted(m);
  }
  return r;
}

}  // namespace detail

QPoly poly_gcd(const QPoly& a, const QPoly& b);

namespace detail {

// pseudo-remainder of a by b in variable v (deg_v a >= deg_v b >=0)
inline QPoly pseudo_rem(QPoly a, const QPoly& b, int v) {
  long db = b.degree_in(v);
  auto bc = coeffs_in(b, v);
  QPoly lb = bc.rbegin()->second;
  while (!a.is_zero()) {
    long da = a.degree_in(v);
    if (da < db) break;
    auto ac = coeffs_in(a, v);
    QPoly la = ac.rbegin()->second;
    ExponentVector m(a.ring()->nvars(), 0);
    m[v] = static_cast<int>(da - db);
    a = a * lb - b.shifted(m) * la;
  }
  return a;
}

inline QPoly content_in(const QPoly& p, int v) {
  QPoly g(p.ring());
  for (const auto& [k, c] : coeffs_in(p, v)) g = poly_gcd(g, c);
  return g;
}

}  // namespace detail

/// Gcd of multivariate polynomials over Q via primitive pseudo-remainder
/// sequences; result is integer-primitive with positive leading coefficient.
inline QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  // pick the last variable occurring in either
  int v = -1;
  for (int i = a.ring()->nvars() - 1; i >= 0; --i)
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
      v = i;
      break;
    }
  if (v < 0) return QPoly(a.ring(), Rational(1));  // both constants
  QPoly ca = detail::content_in(a, v), cb = detail::content_in(b, v);
  QPoly cg = poly_gcd(ca, cb);
  QPoly f = exact_divide(a, ca), g = exact_divide(b, cb);
  if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
  while (!g.is_zero()) {
    QPoly r = detail::pseudo_rem(f, g, v);
    f = g;
    if (r.is_zero()) {
      g = r;
    } else if (r.degree_in(v) == 0) {
      // nontrivial constant-in-v remainder: gcd has v-degree 0
      f = QPoly(a.ring(), Rational(1));
      g = QPoly(a.ring());
    } else {
      g = exact_divide(r, detail::content_in(r, v));
    }
  }
  if (f.degree_in(v) > 0) f = exact_divide(f, detail::content_in(f, v));
  return primitive_part(cg * f);
}

}  // namespace multideg

#endif
