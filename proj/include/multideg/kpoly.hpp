#ifndef MULTIDEG_KPOLY_HPP
#define MULTIDEG_KPOLY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "multideg/grading.hpp"
#include "multideg/groebner.hpp"

namespace multideg {

/// Integer Laurent polynomial in T_1..T_d (negative exponents allowed).
class KPolynomial {
 public:
  KPolynomial() = default;
  explicit KPolynomial(int d) : d_(d) {}

  static KPolynomial one(int d) {
    KPolynomial k(d);
    k.add_term(DegreeVector(d, 0), 1);
    return k;
  }

  static KPolynomial term(DegreeVector b, BigInt c = 1) {
    KPolynomial k(static_cast<int>(b.size()));
    k.add_term(std::move(b), std::move(c));
    return k;
  }

  int dim() const { return d_; }
  const std::map<DegreeVector, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(DegreeVector b, BigInt c) {
    if (c == 0) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(std::move(b), std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  KPolynomial& operator+=(const KPolynomial& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  KPolynomial& operator-=(const KPolynomial& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }
  friend KPolynomial operator+(KPolynomial a, const KPolynomial& b) {
    return a += b;
  }
  friend KPolynomial operator-(KPolynomial a, const KPolynomial& b) {
    return a -= b;
  }
  KPolynomial operator-() const {
    KPolynomial r(d_);
    for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
    return r;
  }
  friend KPolynomial operator*(const KPolynomial& a, const KPolynomial& b) {
    KPolynomial r(a.d_);
    for (const auto& [ba, ca] : a.terms_)
      for (const auto& [bb, cb] : b.terms_) {
        DegreeVector s(a.d_);
        for (int i = 0; i < a.d_; ++i) s[i] = ba[i] + bb[i];
        r.add_term(std::move(s), ca * cb);
      }
    return r;
  }

  friend bool operator==(const KPolynomial& a, const KPolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const KPolynomial& a, const KPolynomial& b) {
    return !(a == b);
  }

  /// Total degree of the term (sum of exponents).
  static long tdeg(const DegreeVector& b) {
    long s = 0;
    for (long x : b) s += x;
    return s;
  }

  /// Homogeneous part of the given total degree.
  KPolynomial homogeneous_part(long deg) const {
    KPolynomial r(d_);
    for (const auto& [b, c] : terms_)
      if (tdeg(b) == deg) r.add_term(b, c);
    return r;
  }

  std::string str(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::vector<std::string> nm = names;
    if (nm.empty())
      for (int i = 0; i < d_; ++i) nm.push_back("T" + std::to_string(i + 1));
    // descending total degree, then lexicographic exponents, for stable
    // human-friendly output
    std::vector<const std::pair<const DegreeVector, BigInt>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
      long da = tdeg(a->first), db = tdeg(b->first);
      if (da != db) return da > db;
      return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
      BigInt c = t->second;
      bool neg = c < 0;
      if (first) {
        if (neg) os << "-", c = -c;
      } else {
        os << (neg ? " - " : " + ");
        if (neg) c = -c;
      }
      first = false;
      bool any_var = false;
      for (long e : t->first) any_var = any_var || e != 0;
      if (c != 1 || !any_var) os << c.get_str();
      if (any_var) {
        bool started = (c != 1);
        for (int i = 0; i < d_; ++i) {
          if (t->first[i] == 0) continue;
          if (started) os << "*";
          started = true;
          os << nm[i];
          if (t->first[i] != 1) os << "^" << t->first[i];
        }
      }
    }
    return os.str();
  }

 private:
  int d_ = 0;
  std::map<DegreeVector, BigInt> terms_;
};

/// K-polynomial from the shift table of a graded free resolution:
/// sum_i (-1)^i sum_j T^{b_ij}; levels[0] are the shifts of L_0.
inline KPolynomial k_from_shifts(const std::vector<std::vector<DegreeVector>>& levels,
                                 int d) {
  KPolynomial k(d);
  long sign = 1;
  for (const auto& level : levels) {
    for (const auto& b : level) k.add_term(b, sign);
    sign = -sign;
  }
  return k;
}

/// Generator degrees at every level of a resolution of F/N where F has the
/// given shifts: level 0 = shifts, level i = degrees of the map columns.
template <typename F>
std::vector<std::vector<DegreeVector>> resolution_shifts(
    const FreeResolution<F>& res, const Multigrading& g,
    const std::vector<DegreeVector>& base_shifts) {
  std::vector<std::vector<DegreeVector>> levels;
  levels.push_back(base_shifts);
  for (const auto& step : res.steps) {
    std::vector<DegreeVector> lvl;
    for (const auto& col : step.map) {
      auto deg = homogeneous_degree(col, g, levels.back());
      if (!deg)
        throw std::invalid_argument(
            "resolution_shifts: map column not multihomogeneous");
      lvl.push_back(*deg);
    }
    levels.push_back(std::move(lvl));
  }
  return levels;
}

template <typename F>
KPolynomial k_from_resolution(const FreeResolution<F>& res,
                              const Multigrading& g,
                              const std::vector<DegreeVector>& base_shifts) {
  return k_from_shifts(resolution_shifts(res, g, base_shifts), g.d);
}

/// Monomial submodule of S^r given by generator monomials per component.
struct MonomialModule {
  int nvars = 0;
  int rank = 1;
  std::vector<std::vector<ExponentVector>> gens;  // per component

  static MonomialModule from_initial(
      const std::vector<std::pair<ExponentVector, int>>& leads, int nvars,
      int rank) {
    MonomialModule m;
    m.nvars = nvars;
    m.rank = rank;
    m.gens.resize(rank);
    for (const auto& [e, c] : leads) m.gens[c].push_back(e);
    return m;
  }
};

namespace detail {

inline void prune_divisible(std::vector<ExponentVector>& gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool min = true;
    for (size_t j = 0; j < gens.size() && min; ++j)
      if (i != j && exp_divides(gens[j], gens[i]) &&
          !(gens[j] == gens[i] && j > i))
        min = false;
    if (min) out.push_back(gens[i]);
  }
  gens = std::move(out);
}

class MonomialKMemo {
 public:
  MonomialKMemo(const Multigrading& g) : g_(g) {}

  KPolynomial k_quotient(std::vector<ExponentVector> gens) {
    prune_divisible(gens);
    auto it = memo_.find(gens);
    if (it != memo_.end()) return it->second;
    KPolynomial r = compute(gens);
    memo_.emplace(std::move(gens), r);
    return r;
  }

 private:
  KPolynomial compute(const std::vector<ExponentVector>& gens) {
    // generator 1 kills the quotient
    for (const auto& e : gens)
      if (total_degree(e) == 0) return KPolynomial(g_.d);
    // pairwise coprime (also covers 0 or 1 generators):
    // K = prod (1 - T^deg g)
    bool coprime = true;
    for (size_t i = 0; i < gens.size() && coprime; ++i)
      for (size_t j = i + 1; j < gens.size() && coprime; ++j) {
        ExponentVector gc = exp_gcd(gens[i], gens[j]);
        if (total_degree(gc) != 0) coprime = false;
      }
    if (coprime) {
      KPolynomial r = KPolynomial::one(g_.d);
      for (const auto& e : gens) {
        KPolynomial f = KPolynomial::one(g_.d);
        f -= KPolynomial::term(g_.degree(e));
        r = r * f;
      }
      return r;
    }
    // pivot on the variable occurring in the most generators
    int nv = static_cast<int>(gens[0].size());
    std::vector<int> count(nv, 0);
    for (const auto& e : gens)
      for (int v = 0; v < nv; ++v)
        if (e[v] > 0) count[v]++;
    int pivot = static_cast<int>(
        std::max_element(count.begin(), count.end()) - count.begin());
    // 0 -> S/(I:x)[-deg x] -> S/I -> S/(I + <x>) -> 0
    std::vector<ExponentVector> plus, quot;
    ExponentVector xv(nv, 0);
    xv[pivot] = 1;
    plus.push_back(xv);
    for (const auto& e : gens) {
      if (e[pivot] == 0) plus.push_back(e);
      ExponentVector q = e;
      if (q[pivot] > 0) q[pivot] -= 1;
      quot.push_back(std::move(q));
    }
    KPolynomial r = k_quotient(std::move(plus));
    KPolynomial shift = KPolynomial::term(g_.degree(xv));
    r += shift * k_quotient(std::move(quot));
    return r;
  }

  const Multigrading& g_;
  std::map<std::vector<ExponentVector>, KPolynomial> memo_;
};

}  // namespace detail

/// K-polynomial of F/N for a monomial submodule N of the shifted free
/// module F: splits componentwise, then runs the pivot recursion on each
/// monomial ideal with memoization.
inline KPolynomial k_monomial_quotient(const MonomialModule& m,
                                       const Multigrading& g,
                                       const std::vector<DegreeVector>& shifts) {
  detail::MonomialKMemo memo(g);
  KPolynomial k(g.d);
  for (int j = 0; j < m.rank; ++j)
    k += KPolynomial::term(shifts[j]) * memo.k_quotient(m.gens[j]);
  return k;
}

/// K-polynomial from a Groebner basis of a multihomogeneous submodule via
/// its initial module (valid by flat degeneration to the initial module).
template <typename F>
KPolynomial k_from_initial(const GroebnerBasis<F>& gb, const Multigrading& g,
                           const std::vector<DegreeVector>& shifts, int rank) {
  int nvars = static_cast<int>(g.var_degrees.size());
  MonomialModule m =
      MonomialModule::from_initial(gb.initial_module(), nvars, rank);
  return k_monomial_quotient(m, g, shifts);
}

namespace detail {

// minimum hitting set of the generator supports (branch on the smallest
// support; the support lists here are tiny)
inline int min_hitting_set(const std::vector<std::vector<int>>& supports) {
  if (supports.empty()) return 0;
  size_t pick = 0;
  for (size_t i = 1; i < supports.size(); ++i)
    if (supports[i].size() < supports[pick].size()) pick = i;
  int result = 1 << 20;
  for (int v : supports[pick]) {
    std::vector<std::vector<int>> rest;
    for (const auto& s : supports) {
      bool hit = false;
      for (int u : s) hit = hit || u == v;
      if (!hit) rest.push_back(s);
    }
    result = std::min(result, 1 + min_hitting_set(rest));
  }
  return result;
}

}  // namespace detail

/// Codimension of the monomial quotient F/N: dim(S/I) for a monomial ideal
/// is nvars minus the smallest set of variables meeting every generator's
/// support; the module dimension is the max over components.
inline int codim_monomial(const MonomialModule& m) {
  int best_dim = -1;  // -1: all components are zero modules
  for (int j = 0; j < m.rank; ++j) {
    bool zero_component = false;
    std::vector<std::vector<int>> supports;
    for (const auto& e : m.gens[j]) {
      std::vector<int> s;
      for (int v = 0; v < m.nvars; ++v)
        if (e[v] > 0) s.push_back(v);
      if (s.empty()) {
        zero_component = true;  // generator 1
        break;
      }
      supports.push_back(std::move(s));
    }
    if (zero_component) continue;
    int hit = detail::min_hitting_set(supports);
    best_dim = std::max(best_dim, m.nvars - hit);
  }
  if (best_dim < 0) return m.nvars + 1;  // zero module: codim beyond dim S
  return m.nvars - best_dim;
}

/// Substitute T_i -> 1 - T_i and truncate the result at total degree
/// `trunc`. Negative exponents expand as the binomial series
/// (1-T)^(-k) = sum_j C(k-1+j, j) T^j.
inline KPolynomial substitute_one_minus(const KPolynomial& k, long trunc) {
  int d = k.dim();
  KPolynomial out(d);
  for (const auto& [b, c] : k.terms()) {
    // product over i of (1-T_i)^{b_i}, truncated
    KPolynomial acc(d);
    acc.add_term(DegreeVector(d, 0), c);
    for (int i = 0; i < d; ++i) {
      if (b[i] == 0) continue;
      KPolynomial factor(d);
      if (b[i] > 0) {
        for (long j = 0; j <= b[i] && j <= trunc; ++j) {
          DegreeVector e(d, 0);
          e[i] = j;
          factor.add_term(std::move(e), (j % 2 ? -1 : 1) * binomial(b[i], j));
        }
      } else {
        long kk = -b[i];
        for (long j = 0; j <= trunc; ++j) {
          DegreeVector e(d, 0);
          e[i] = j;
          factor.add_term(std::move(e), binomial(kk - 1 + j, j));
        }
      }
      KPolynomial prod = acc * factor;
      KPolynomial next(d);
      for (const auto& [ba, ca] : prod.terms())
        if (KPolynomial::tdeg(ba) <= trunc) next.add_term(ba, ca);
      acc = std::move(next);
    }
    out += acc;
  }
  return out;
}

/// Homogeneous integer form of a fixed total degree in T_1..T_d.
struct Multidegree {
  KPolynomial form;
  long degree = 0;
};

/// Multidegree: substitute T -> 1-T and keep the homogeneous part of the
/// target degree (typically the codimension); lower parts, which must
/// vanish for a module of that codimension, are reported for validation.
inline Multidegree expand_and_extract(const KPolynomial& k, long target) {
  KPolynomial series = substitute_one_minus(k, target);
  Multidegree md;
  md.degree = target;
  md.form = series.homogeneous_part(target);
  return md;
}

/// True when every homogeneous part of K(1-T) strictly below `target`
/// vanishes (Prop-style sanity check on the claimed codimension).
inline bool lower_parts_vanish(const KPolynomial& k, long target) {
  KPolynomial series = substitute_one_minus(k, target);
  for (long j = 0; j < target; ++j)
    if (!series.homogeneous_part(j).is_zero()) return false;
  return true;
}

namespace detail {

// small integer functional y with y . a >= 1 for all degree vectors a
inline std::optional<DegreeVector> positive_functional(const Multigrading& g) {
  for (long R = 1; R <= 16; ++R) {
    DegreeVector y(g.d, -R);
    while (true) {
      bool ok = true;
      for (const auto& a : g.var_degrees) {
        long s = 0;
        for (int i = 0; i < g.d; ++i) s += y[i] * a[i];
        if (s < 1) {
          ok = false;
          break;
        }
      }
      if (ok) return y;
      int i = 0;
      while (i < g.d && y[i] == R) y[i++] = -R;
      if (i == g.d) break;
      y[i]++;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Compare the Hilbert function of F/N (N monomial) against the series
/// K / prod_i (1 - T^{deg x_i}) in every degree b with y.b <= B, where y
/// is a positive integer functional for the grading. Exhaustive in that
/// range; requires a positive grading.
inline bool hilbert_check(const MonomialModule& m, const Multigrading& g,
                          const std::vector<DegreeVector>& shifts,
                          const KPolynomial& k, long B) {
  if (!is_positive(g))
    throw std::invalid_argument("hilbert_check: grading not positive");
  auto yo = detail::positive_functional(g);
  if (!yo)
    throw std::invalid_argument("hilbert_check: no small positive functional");
  DegreeVector y = *yo;
  auto yval = [&](const DegreeVector& b) {
    long s = 0;
    for (size_t i = 0; i < b.size(); ++i) s += y[i] * b[i];
    return s;
  };

  // 1. count standard monomials: pairs (e, j) with e not in N_j
  std::map<DegreeVector, BigInt> counted;
  for (int j = 0; j < m.rank; ++j) {
    long base = yval(shifts[j]);
    // DFS over exponents; each step in variable v adds yval(deg x_v) >= 1
    std::vector<long> step(m.nvars);
    for (int v = 0; v < m.nvars; ++v) step[v] = yval(g.var_degrees[v]);
    ExponentVector e(m.nvars, 0);
    std::function<void(int, long)> dfs = [&](int v, long used) {
      if (v == m.nvars) {
        for (const auto& gen : m.gens[j])
          if (exp_divides(gen, e)) return;
        counted[deg_add(g.degree(e), shifts[j])] += 1;
        return;
      }
      for (int p = 0;; ++p) {
        e[v] = p;
        long u = used + p * step[v];
        if (u + base > B) break;
        dfs(v + 1, u);
      }
      e[v] = 0;
    };
    if (base <= B) dfs(0, 0);
  }

  // 2. series coefficients: K * prod_i 1/(1 - T^{a_i}) up to y-value B.
  // partition counts P(b) = #{(k_v) : sum k_v a_v = b} via DP
  std::map<DegreeVector, BigInt> part;
  part[DegreeVector(g.d, 0)] = 1;
  long slack = 0;
  for (const auto& [b, c] : k.terms()) slack = std::max(slack, -yval(b));
  long bound = B + slack;
  for (int v = 0; v < m.nvars; ++v) {
    std::map<DegreeVector, BigInt> next;
    for (const auto& [b, c] : part) {
      DegreeVector cur = b;
      while (yval(cur) <= bound) {
        next[cur] += c;
        cur = deg_add(cur, g.var_degrees[v]);
      }
    }
    part = std::move(next);
  }
  std::map<DegreeVector, BigInt> series;
  for (const auto& [b, c] : k.terms())
    for (const auto& [p, n] : part) {
      DegreeVector s = deg_add(b, p);
      if (yval(s) <= B) series[s] += c * n;
    }
  for (auto it = series.begin(); it != series.end();)
    it = it->second == 0 ? series.erase(it) : std::next(it);

  return counted == series;
}

}  // namespace multideg

#endif
