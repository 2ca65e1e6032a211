#ifndef MULTIDEG_GRADING_HPP
#define MULTIDEG_GRADING_HPP

#include <optional>
#include <vector>

#include "multideg/poly.hpp"

namespace multideg {

using DegreeVector = std::vector<long>;

inline DegreeVector deg_add(const DegreeVector& a, const DegreeVector& b) {
  DegreeVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

/// Multigrading deg: monomials -> Z^d, a degree vector per ring variable.
struct Multigrading {
  std::vector<DegreeVector> var_degrees;  // one per ring variable
  int d = 0;

  Multigrading() = default;
  Multigrading(std::vector<DegreeVector> vd, int dim)
      : var_degrees(std::move(vd)), d(dim) {
    for (const auto& a : var_degrees)
      if (static_cast<int>(a.size()) != d)
        throw std::invalid_argument("Multigrading: degree vector length");
  }

  DegreeVector degree(const ExponentVector& e) const {
    DegreeVector r(d, 0);
    for (size_t i = 0; i < e.size(); ++i)
      for (int j = 0; j < d; ++j) r[j] += static_cast<long>(e[i]) * var_degrees[i][j];
    return r;
  }
};

/// F- and V-degree shifts [n][m] of the generators of a free module; the
/// bidegree shift of generator i is (n_i, m_i).
struct ShiftPair {
  std::vector<long> n_shifts;
  std::vector<long> m_shifts;

  int rank() const { return static_cast<int>(n_shifts.size()); }

  std::vector<DegreeVector> bidegrees() const {
    std::vector<DegreeVector> r;
    for (size_t i = 0; i < n_shifts.size(); ++i)
      r.push_back({n_shifts[i], m_shifts[i]});
    return r;
  }
};

/// Degree of all terms when they agree; nullopt when inhomogeneous. The
/// zero polynomial is homogeneous of unconstrained degree (returns the
/// zero vector).
template <typename F>
std::optional<DegreeVector> homogeneous_degree(const Polynomial<F>& p,
                                               const Multigrading& g) {
  std::optional<DegreeVector> deg;
  for (const auto& [e, c] : p.terms()) {
    DegreeVector t = g.degree(e);
    if (!deg)
      deg = t;
    else if (*deg != t)
      return std::nullopt;
  }
  if (!deg) return DegreeVector(g.d, 0);
  return deg;
}

/// Shift-adjusted degree of a free-module element: term in component i
/// has degree deg(monomial) + shifts[i].
template <typename F>
std::optional<DegreeVector> homogeneous_degree(
    const FreeModuleElement<F>& v, const Multigrading& g,
    const std::vector<DegreeVector>& shifts) {
  std::optional<DegreeVector> deg;
  for (int i = 0; i < v.rank(); ++i)
    for (const auto& [e, c] : v[i].terms()) {
      DegreeVector t = deg_add(g.degree(e), shifts[i]);
      if (!deg)
        deg = t;
      else if (*deg != t)
        return std::nullopt;
    }
  if (!deg) return DegreeVector(g.d, 0);
  return deg;
}

template <typename F>
bool is_multihomogeneous(const Polynomial<F>& p, const Multigrading& g) {
  return homogeneous_degree(p, g).has_value();
}

template <typename F>
bool is_multihomogeneous(const FreeModuleElement<F>& v, const Multigrading& g,
                         const std::vector<DegreeVector>& shifts) {
  return homogeneous_degree(v, g, shifts).has_value();
}

/// One linear constraint sum coeffs[i]*y_i >= rhs.
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rational rhs;
};

/// Exact feasibility of a system of rational linear inequalities by
/// Fourier-Motzkin elimination (small dimensions only).
inline bool linear_feasible(std::vector<LinearConstraint> cs, int nvars) {
  for (int v = 0; v < nvars; ++v) {
    std::vector<LinearConstraint> pos, neg, zero;
    for (auto& c : cs) {
      int s = c.coeffs[v].sign();
      if (s > 0)
        pos.push_back(std::move(c));
      else if (s < 0)
        neg.push_back(std::move(c));
      else
        zero.push_back(std::move(c));
    }
    std::vector<LinearConstraint> next = std::move(zero);
    // p: a*y_v >= rp - P(y'), n: -b*y_v >= rn - N(y')  (a,b > 0)
    // combine: b*P + a*N >= b*rp + a*rn
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Rational a = p.coeffs[v], b = -n.coeffs[v];
        LinearConstraint c;
        c.coeffs.resize(nvars);
        for (int i = 0; i < nvars; ++i)
          c.coeffs[i] = b * p.coeffs[i] + a * n.coeffs[i];
        c.rhs = b * p.rhs + a * n.rhs;
        next.push_back(std::move(c));
      }
    cs = std::move(next);
  }
  for (const auto& c : cs)
    if (Rational(0) < c.rhs) return false;
  return true;
}

/// A grading is positive iff the graded pieces are finite-dimensional,
/// equivalently (Gordan) iff some rational functional y satisfies
/// y . deg(x_i) >= 1 for every variable.
inline bool is_positive(const Multigrading& g) {
  std::vector<LinearConstraint> cs;
  for (const auto& a : g.var_degrees) {
    LinearConstraint c;
    for (long ai : a) c.coeffs.push_back(Rational(ai));
    c.rhs = Rational(1);
    cs.push_back(std::move(c));
  }
  return linear_feasible(std::move(cs), g.d);
}

}  // namespace multideg

#endif
