#ifndef MULTIDEG_HYPERGEOM_HPP
#define MULTIDEG_HYPERGEOM_HPP

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "multideg/bifiltered.hpp"

namespace multideg {

/// d x n integer matrix, row major.
using IntMatrix = std::vector<std::vector<BigInt>>;

namespace detail {

inline int mat_rows(const IntMatrix& A) { return static_cast<int>(A.size()); }

inline int mat_cols(const IntMatrix& A) {
  return A.empty() ? 0 : static_cast<int>(A[0].size());
}

inline void check_matrix(const IntMatrix& A) {
  if (A.empty() || A[0].empty())
    throw std::invalid_argument("hypergeom: empty matrix");
  for (const auto& r : A)
    if (static_cast<int>(r.size()) != mat_cols(A))
      throw std::invalid_argument("hypergeom: ragged matrix");
}

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> rref(std::vector<std::vector<Rational>>& M) {
  std::vector<int> pivots;
  int rows = static_cast<int>(M.size());
  int cols = rows == 0 ? 0 : static_cast<int>(M[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!M[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(M[r], M[p]);
    Rational inv = M[r][c].inverse();
    for (int j = c; j < cols; ++j) M[r][j] = M[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      Rational f = M[i][c];
      for (int j = c; j < cols; ++j) M[i][j] = M[i][j] - f * M[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// One solution of M y = b over Q, if any.
inline std::optional<std::vector<Rational>> solve_linear(
    std::vector<std::vector<Rational>> M, std::vector<Rational> b) {
  int rows = static_cast<int>(M.size());
  int cols = rows == 0 ? 0 : static_cast<int>(M[0].size());
  for (int i = 0; i < rows; ++i) M[i].push_back(b[i]);
  std::vector<int> pivots = rref(M);
  for (int c : pivots)
    if (c == cols) return std::nullopt;  // pivot in the constant column
  std::vector<Rational> y(cols, Rational(0));
  for (size_t k = 0; k < pivots.size(); ++k) y[pivots[k]] = M[k][cols];
  return y;
}

inline Rational det(std::vector<std::vector<Rational>> M) {
  int n = static_cast<int>(M.size());
  Rational d(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!M[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != c) {
      std::swap(M[p], M[c]);
      d = -d;
    }
    d = d * M[c][c];
    Rational inv = M[c][c].inverse();
    for (int i = c + 1; i < n; ++i) {
      if (M[i][c].is_zero()) continue;
      Rational f = M[i][c] * inv;
      for (int j = c; j < n; ++j) M[i][j] = M[i][j] - f * M[c][j];
    }
  }
  return d;
}

/// Fourier-Motzkin elimination that also extracts a feasible point.
inline std::optional<std::vector<Rational>> fm_point(
    const std::vector<LinearConstraint>& cs, int nvars) {
  if (nvars == 0) {
    for (const auto& c : cs)
      if (c.rhs.sign() > 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  int k = nvars - 1;
  std::vector<LinearConstraint> pos, neg, proj;
  for (const auto& c : cs) {
    int s = c.coeffs[k].sign();
    if (s > 0)
      pos.push_back(c);
    else if (s < 0)
      neg.push_back(c);
    else {
      LinearConstraint t = c;
      t.coeffs.resize(k);
      proj.push_back(std::move(t));
    }
  }
  // y_k >= (r_p - a_p.y')/c_p and y_k <= (r_q - a_q.y')/c_q combine to
  // (a_p/c_p - a_q/c_q).y' >= r_p/c_p - r_q/c_q
  for (const auto& p : pos)
    for (const auto& q : neg) {
      Rational ip = p.coeffs[k].inverse(), iq = q.coeffs[k].inverse();
      LinearConstraint t;
      t.coeffs.resize(k);
      for (int j = 0; j < k; ++j)
        t.coeffs[j] = p.coeffs[j] * ip - q.coeffs[j] * iq;
      t.rhs = p.rhs * ip - q.rhs * iq;
      proj.push_back(std::move(t));
    }
  auto sub = fm_point(proj, k);
  if (!sub) return std::nullopt;
  auto bound = [&](const LinearConstraint& c) {
    Rational v = c.rhs;
    for (int j = 0; j < k; ++j) v = v - c.coeffs[j] * (*sub)[j];
    return v * c.coeffs[k].inverse();
  };
  Rational yk(0);
  if (!pos.empty()) {
    yk = bound(pos[0]);
    for (size_t i = 1; i < pos.size(); ++i) {
      Rational b = bound(pos[i]);
      if (yk < b) yk = b;
    }
  } else if (!neg.empty()) {
    yk = bound(neg[0]);
    for (size_t i = 1; i < neg.size(); ++i) {
      Rational b = bound(neg[i]);
      if (b < yk) yk = b;
    }
  }
  sub->push_back(yk);
  return sub;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace detail

/// Diagonalization A -> S by unimodular row and column operations; only
/// the right transform V (A V column-equivalent data) is tracked, which is
/// what the lattice kernel needs.
struct SmithResult {
  IntMatrix S;  // d x n, diagonal up to rank
  IntMatrix V;  // n x n unimodular with A V = (row ops)^-1 S
  int rank = 0;
  bool spans_lattice = false;  // columns of A generate Z^d
};

inline SmithResult smith_diagonalize(const IntMatrix& A) {
  detail::check_matrix(A);
  int d = detail::mat_rows(A), n = detail::mat_cols(A);
  SmithResult res;
  res.S = A;
  res.V.assign(n, std::vector<BigInt>(n, 0));
  for (int j = 0; j < n; ++j) res.V[j][j] = 1;
  auto& S = res.S;
  auto& V = res.V;
  auto swap_cols = [&](int a, int b) {
    for (int i = 0; i < d; ++i) std::swap(S[i][a], S[i][b]);
    for (int i = 0; i < n; ++i) std::swap(V[i][a], V[i][b]);
  };
  auto sub_col = [&](int dst, int src, const BigInt& q) {
    for (int i = 0; i < d; ++i) S[i][dst] -= q * S[i][src];
    for (int i = 0; i < n; ++i) V[i][dst] -= q * V[i][src];
  };
  int m = std::min(d, n);
  int t = 0;
  for (; t < m; ++t) {
    // pick the nonzero entry of smallest absolute value as pivot
    int pi = -1, pj = -1;
    BigInt best = 0;
    for (int i = t; i < d; ++i)
      for (int j = t; j < n; ++j) {
        if (S[i][j] == 0) continue;
        BigInt a = abs(S[i][j]);
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    std::swap(S[t], S[pi]);
    if (pj != t) swap_cols(t, pj);
    if (S[t][t] < 0)
      for (int j = t; j < n; ++j) S[t][j] = -S[t][j];
    bool again = true;
    while (again) {
      again = false;
      for (int i = t + 1; i < d; ++i) {
        if (S[i][t] == 0) continue;
        BigInt q = detail::floor_div(S[i][t], S[t][t]);
        for (int j = t; j < n; ++j) S[i][j] -= q * S[t][j];
        if (S[i][t] != 0) {  // remainder is a smaller pivot
          std::swap(S[t], S[i]);
          again = true;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (S[t][j] == 0) continue;
        BigInt q = detail::floor_div(S[t][j], S[t][t]);
        sub_col(j, t, q);
        if (S[t][j] != 0) {
          swap_cols(t, j);
          again = true;
        }
      }
      if (S[t][t] < 0)
        for (int j = t; j < n; ++j) S[t][j] = -S[t][j];
    }
  }
  res.rank = t;
  BigInt prod = 1;
  for (int i = 0; i < res.rank; ++i) prod *= S[i][i];
  res.spans_lattice = (res.rank == d) && (abs(prod) == 1);
  return res;
}

/// Basis of the integer kernel {u in Z^n : A u = 0}.
inline std::vector<std::vector<BigInt>> lattice_kernel(const IntMatrix& A) {
  SmithResult sm = smith_diagonalize(A);
  int n = detail::mat_cols(A);
  std::vector<std::vector<BigInt>> ker;
  for (int j = sm.rank; j < n; ++j) {
    std::vector<BigInt> u(n);
    for (int i = 0; i < n; ++i) u[i] = sm.V[i][j];
    ker.push_back(std::move(u));
  }
  return ker;
}

inline bool spans_lattice(const IntMatrix& A) {
  return smith_diagonalize(A).spans_lattice;
}

namespace detail {

inline void check_gkz_matrix(const IntMatrix& A) {
  check_matrix(A);
  SmithResult sm = smith_diagonalize(A);
  if (sm.rank != mat_rows(A))
    throw std::invalid_argument("hypergeom: matrix is not of full row rank");
  if (!sm.spans_lattice)
    throw std::invalid_argument(
        "hypergeom: columns do not generate the full integer lattice");
}

inline RingPtr partial_ring(int n, bool with_h = false) {
  std::vector<std::string> vars;
  for (int j = 0; j < n; ++j) vars.push_back("d" + std::to_string(j + 1));
  if (with_h) vars.push_back("h");
  return make_ring(vars);
}

}  // namespace detail

/// Toric ideal I_A in k[d1..dn]: binomials from a lattice-kernel basis,
/// saturated by d1...dn; returned as the reduced grevlex Groebner basis.
inline std::vector<QPoly> toric_ideal(const IntMatrix& A) {
  detail::check_gkz_matrix(A);
  int n = detail::mat_cols(A);
  RingPtr R = detail::partial_ring(n);
  std::vector<FreeModuleElement<Rational>> gens;
  for (const auto& u : lattice_kernel(A)) {
    ExponentVector up(n, 0), um(n, 0);
    for (int j = 0; j < n; ++j) {
      if (u[j] > 0) up[j] = static_cast<int>(u[j].get_si());
      if (u[j] < 0) um[j] = static_cast<int>(BigInt(-u[j]).get_si());
    }
    QPoly b = QPoly::monomial(R, up, Rational(1)) -
              QPoly::monomial(R, um, Rational(1));
    FreeModuleElement<Rational> v(R, 1);
    v[0] = b;
    gens.push_back(std::move(v));
  }
  if (gens.empty()) return {};
  ExponentVector all(n, 1);
  QPoly prod = QPoly::monomial(R, all, Rational(1));
  auto sat = saturate(gens, prod, 1);
  auto gb = reduced_groebner_basis(sat, MonomialOrder::grevlex(n));
  std::vector<QPoly> out;
  for (const auto& g : gb.elements) out.push_back(g[0]);
  return out;
}

/// Presentation of M_A(beta) with every variable in the t-block: the
/// V-filtration is taken at the origin, so there is no x-block at all.
inline BifilteredPresentation build_presentation(
    const IntMatrix& A, const std::vector<Rational>& beta) {
  detail::check_gkz_matrix(A);
  int d = detail::mat_rows(A), n = detail::mat_cols(A);
  if (static_cast<int>(beta.size()) != d)
    throw std::invalid_argument("build_presentation: beta has wrong length");
  BifilteredPresentation M = make_presentation(0, n, 1);
  const RingPtr& R = M.D->ring;
  std::vector<WElt> gens;
  for (const auto& p : toric_ideal(A)) {
    QPoly q(R);
    for (const auto& [e, c] : p.terms()) {
      ExponentVector f(M.nvars(), 0);
      for (int j = 0; j < n; ++j) f[M.dt_var(j)] = e[j];
      q.add_term(f, c);
    }
    WElt v(R, 1);
    v[0] = q;
    gens.push_back(std::move(v));
  }
  for (int i = 0; i < d; ++i) {
    QPoly euler(R, -beta[i]);
    for (int j = 0; j < n; ++j) {
      if (A[i][j] == 0) continue;
      ExponentVector e(M.nvars(), 0);
      e[M.t_var(j)] = 1;
      e[M.dt_var(j)] = 1;
      euler.add_term(e, Rational(A[i][j]));
    }
    WElt v(R, 1);
    v[0] = euler;
    gens.push_back(std::move(v));
  }
  M.gens = std::move(gens);
  return M;
}

/// Generators of H_A(beta) = I_A + Euler operators, in the Weyl algebra of
/// build_presentation.
inline std::vector<QPoly> hypergeometric_ideal(const IntMatrix& A,
                                               const std::vector<Rational>& beta) {
  BifilteredPresentation M = build_presentation(A, beta);
  std::vector<QPoly> out;
  for (const auto& g : M.gens) out.push_back(g[0]);
  return out;
}

/// (1,...,1) lies in the Q-row span of A.
inline bool is_homogeneous(const IntMatrix& A) {
  detail::check_matrix(A);
  int d = detail::mat_rows(A), n = detail::mat_cols(A);
  std::vector<std::vector<Rational>> At(n, std::vector<Rational>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < n; ++j) At[j][i] = Rational(A[i][j]);
  std::vector<Rational> ones(n, Rational(1));
  return detail::solve_linear(std::move(At), std::move(ones)).has_value();
}

/// Pointedness: some w in Z^n with all entries > 0 lies in the row span of
/// A; returns the witness when one exists.
inline std::pair<bool, std::optional<std::vector<BigInt>>> is_pointed(
    const IntMatrix& A) {
  detail::check_matrix(A);
  int d = detail::mat_rows(A), n = detail::mat_cols(A);
  std::vector<LinearConstraint> cs;
  for (int j = 0; j < n; ++j) {
    LinearConstraint c;
    c.coeffs.resize(d);
    for (int i = 0; i < d; ++i) c.coeffs[i] = Rational(A[i][j]);
    c.rhs = Rational(1);
    cs.push_back(std::move(c));
  }
  auto y = detail::fm_point(cs, d);
  if (!y) return {false, std::nullopt};
  BigInt scale = 1;
  for (const auto& v : *y)
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.denominator().get_mpz_t());
  std::vector<BigInt> w(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < d; ++i)
      w[j] += (*y)[i].numerator() * (scale / (*y)[i].denominator()) * A[i][j];
  return {true, std::move(w)};
}

namespace detail {

using QPoint = std::vector<Rational>;

/// Hyperplane through k points of Q^k spanning it: primitive integer
/// normal with positive first nonzero entry, and the offset.
inline std::optional<std::pair<QPoint, Rational>> hyperplane_through(
    const std::vector<QPoint>& pts, const std::vector<int>& subset) {
  int k = static_cast<int>(pts[0].size());
  // normal = nullspace of the edge vectors from the first subset point
  std::vector<std::vector<Rational>> E;
  for (size_t s = 1; s < subset.size(); ++s) {
    std::vector<Rational> e(k);
    for (int j = 0; j < k; ++j)
      e[j] = pts[subset[s]][j] - pts[subset[0]][j];
    E.push_back(std::move(e));
  }
  std::vector<int> pivots = rref(E);
  if (static_cast<int>(pivots.size()) != k - 1) return std::nullopt;
  std::vector<char> is_pivot(k, 0);
  for (int p : pivots) is_pivot[p] = 1;
  int free_col = -1;
  for (int j = 0; j < k; ++j)
    if (!is_pivot[j]) free_col = j;
  QPoint nrm(k, Rational(0));
  nrm[free_col] = Rational(1);
  for (size_t r = 0; r < pivots.size(); ++r) nrm[pivots[r]] = -E[r][free_col];
  // canonical primitive integer scaling
  BigInt den = 1, num = 0;
  for (const auto& v : nrm) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.denominator().get_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.numerator().get_mpz_t());
  }
  Rational s(den, num == 0 ? BigInt(1) : num);
  for (int j = 0; j < k; ++j)
    if (!nrm[j].is_zero()) {
      if ((nrm[j] * s).sign() < 0) s = -s;
      break;
    }
  for (auto& v : nrm) v = v * s;
  Rational c(0);
  for (int j = 0; j < k; ++j) c = c + nrm[j] * pts[subset[0]][j];
  return std::make_pair(std::move(nrm), std::move(c));
}

/// Triangulation of the convex hull of a full-dimensional point set in
/// Q^k, as index simplices: star from the lexicographically smallest
/// point over recursively triangulated facets.
inline std::vector<std::vector<int>> triangulate_hull(
    const std::vector<QPoint>& pts, int k) {
  std::vector<std::vector<int>> simplices;
  int m = static_cast<int>(pts.size());
  if (k == 0) return {{0}};
  if (m < k + 1) return {};
  int p0 = 0;
  for (int i = 1; i < m; ++i)
    if (pts[i] < pts[p0]) p0 = i;

  std::set<std::pair<QPoint, Rational>> seen;
  std::vector<int> subset(k);
  std::vector<char> take(m, 0);
  std::fill(take.begin(), take.begin() + k, 1);
  // all k-subsets via the permutation trick on the mask
  std::sort(take.begin(), take.end());
  do {
    int s = 0;
    for (int i = 0; i < m; ++i)
      if (take[i]) subset[s++] = i;
    auto hp = hyperplane_through(pts, subset);
    if (!hp) continue;
    if (!seen.insert(*hp).second) continue;
    const auto& [nrm, c] = *hp;
    bool above = false, below = false;
    std::vector<int> face;
    for (int i = 0; i < m; ++i) {
      Rational v(0);
      for (int j = 0; j < k; ++j) v = v + nrm[j] * pts[i][j];
      int sg = (v - c).sign();
      if (sg > 0) above = true;
      else if (sg < 0) below = true;
      else face.push_back(i);
    }
    if (above && below) continue;  // not supporting
    bool p0_on_face = false;
    for (int i : face) p0_on_face |= (i == p0);
    if (p0_on_face) continue;
    // project the facet along the largest normal component
    int drop = 0;
    for (int j = 1; j < k; ++j)
      if (abs(nrm[j].numerator() * nrm[drop].denominator()) >
          abs(nrm[drop].numerator() * nrm[j].denominator()))
        drop = j;
    if (nrm[drop].is_zero()) continue;
    std::vector<QPoint> fpts;
    for (int i : face) {
      QPoint q;
      for (int j = 0; j < k; ++j)
        if (j != drop) q.push_back(pts[i][j]);
      fpts.push_back(std::move(q));
    }
    for (const auto& sub : triangulate_hull(fpts, k - 1)) {
      std::vector<int> simplex = {p0};
      for (int local : sub) simplex.push_back(face[local]);
      simplices.push_back(std::move(simplex));
    }
  } while (std::next_permutation(take.begin(), take.end()));
  return simplices;
}

}  // namespace detail

/// Normalized volume of conv{0, a_1, ..., a_n}: d! times the Euclidean
/// volume, computed by an exact star triangulation.
inline BigInt volume(const IntMatrix& A) {
  detail::check_matrix(A);
  int d = detail::mat_rows(A), n = detail::mat_cols(A);
  std::vector<detail::QPoint> pts = {detail::QPoint(d, Rational(0))};
  for (int j = 0; j < n; ++j) {
    detail::QPoint p(d);
    for (int i = 0; i < d; ++i) p[i] = Rational(A[i][j]);
    if (std::find(pts.begin(), pts.end(), p) == pts.end())
      pts.push_back(std::move(p));
  }
  {
    std::vector<std::vector<Rational>> E;
    for (size_t i = 1; i < pts.size(); ++i) {
      std::vector<Rational> e(d);
      for (int j = 0; j < d; ++j) e[j] = pts[i][j] - pts[0][j];
      E.push_back(std::move(e));
    }
    if (static_cast<int>(detail::rref(E).size()) != d)
      throw std::invalid_argument("volume: point configuration is degenerate");
  }
  Rational total(0);
  for (const auto& sx : detail::triangulate_hull(pts, d)) {
    std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d));
    for (int r = 0; r < d; ++r)
      for (int j = 0; j < d; ++j)
        M[r][j] = pts[sx[r + 1]][j] - pts[sx[0]][j];
    Rational dt = detail::det(std::move(M));
    if (dt.sign() < 0) dt = -dt;
    total = total + dt;
  }
  if (total.denominator() != 1 || total.sign() <= 0)
    throw std::logic_error("volume: triangulation did not produce an integer");
  return total.numerator();
}

/// F-homogenization H(I_A) in k[d1..dn, h], from a degree-compatible
/// Groebner basis of I_A.
inline std::vector<QPoly> homogenized_toric(const IntMatrix& A) {
  int n = detail::mat_cols(A);
  RingPtr Rh = detail::partial_ring(n, /*with_h=*/true);
  std::vector<QPoly> out;
  for (const auto& p : toric_ideal(A)) {
    long dmax = 0;
    for (const auto& [e, c] : p.terms()) dmax = std::max(dmax, total_degree(e));
    QPoly q(Rh);
    for (const auto& [e, c] : p.terms()) {
      ExponentVector f(n + 1, 0);
      for (int j = 0; j < n; ++j) f[j] = e[j];
      f[n] = static_cast<int>(dmax - total_degree(e));
      q.add_term(f, c);
    }
    out.push_back(std::move(q));
  }
  return out;
}

/// Cohen-Macaulayness of k[d,h]/H(I_A): the projective dimension read off
/// a minimal graded free resolution equals n - d exactly in the CM case
/// (Auslander-Buchsbaum with depth = dim = d + 1).
inline bool cohen_macaulay(const IntMatrix& A) {
  int d = detail::mat_rows(A), n = detail::mat_cols(A);
  auto H = homogenized_toric(A);
  if (H.empty()) return true;  // polynomial ring
  const RingPtr& Rh = H[0].ring();
  std::vector<FreeModuleElement<Rational>> gens;
  for (const auto& p : H) {
    FreeModuleElement<Rational> v(Rh, 1);
    v[0] = p;
    gens.push_back(std::move(v));
  }
  auto res = free_resolution(gens, MonomialOrder::grevlex(Rh->nvars()));
  minimize_resolution(res);
  int pd = 0;
  for (size_t i = 0; i < res.steps.size(); ++i)
    if (res.steps[i].source_rank > 0) pd = static_cast<int>(i) + 1;
  return pd == n - d;
}

/// Degree of k[d,h]/H(I_A) via its K-polynomial: the coefficient of the
/// codimension-degree form after T -> 1-T. Serves as an independent route
/// to the normalized volume.
inline BigInt volume_degree_route(const IntMatrix& A) {
  int d = detail::mat_rows(A), n = detail::mat_cols(A);
  auto H = homogenized_toric(A);
  if (H.empty()) {
    if (n != d) throw std::logic_error("volume_degree_route: empty ideal");
    return 1;
  }
  const RingPtr& Rh = H[0].ring();
  std::vector<FreeModuleElement<Rational>> gens;
  for (const auto& p : H) {
    FreeModuleElement<Rational> v(Rh, 1);
    v[0] = p;
    gens.push_back(std::move(v));
  }
  auto gb = reduced_groebner_basis(gens, MonomialOrder::grevlex(Rh->nvars()));
  long codim = codim_monomial(
      MonomialModule::from_initial(gb.initial_module(), Rh->nvars(), 1));
  if (codim != n - d)
    throw std::logic_error("volume_degree_route: unexpected codimension");
  Multigrading std_grading(std::vector<DegreeVector>(Rh->nvars(), {1}), 1);
  KPolynomial k = k_from_initial(gb, std_grading, {DegreeVector{0}}, 1);
  Multidegree md = expand_and_extract(k, codim);
  if (md.form.terms().size() != 1)
    throw std::logic_error("volume_degree_route: degree extraction failed");
  return md.form.terms().begin()->second;
}

/// vol(A) * sum_{j=d}^n C(n-d, j-d) T1^j T2^{n-j}.
inline Multidegree closed_form_multidegree(const IntMatrix& A) {
  detail::check_matrix(A);
  int d = detail::mat_rows(A), n = detail::mat_cols(A);
  BigInt vol = volume(A);
  Multidegree md;
  md.degree = n;
  KPolynomial form(2);
  for (int j = d; j <= n; ++j)
    form.add_term({j, n - j}, vol * binomial(n - d, j - d));
  md.form = form;
  return md;
}

/// Shortcut for the homogeneous Cohen-Macaulay case: the bigraded
/// characteristic ideal is I_A plus the Euler symbols, so the multidegree
/// comes from one commutative K-polynomial.
inline Multidegree theorem2_fastpath(const IntMatrix& A) {
  detail::check_gkz_matrix(A);
  int d = detail::mat_rows(A), n = detail::mat_cols(A);
  BifilteredPresentation M = make_presentation(0, n, 1);
  GradedPresentation P;
  P.ring = make_ring(M.D->ring->vars);
  P.rank = 1;
  P.grading = builtin_bigrading(0, n, GradedFlavor::Bigr);
  P.shifts = {DegreeVector{0, 0}};
  for (const auto& p : toric_ideal(A)) {
    QPoly q(P.ring);
    for (const auto& [e, c] : p.terms()) {
      ExponentVector f(M.nvars(), 0);
      for (int j = 0; j < n; ++j) f[M.dt_var(j)] = e[j];
      q.add_term(f, c);
    }
    WElt v(P.ring, 1);
    v[0] = q;
    P.gens.push_back(std::move(v));
  }
  for (int i = 0; i < d; ++i) {
    QPoly euler(P.ring);
    for (int j = 0; j < n; ++j) {
      if (A[i][j] == 0) continue;
      ExponentVector e(M.nvars(), 0);
      e[M.t_var(j)] = 1;
      e[M.dt_var(j)] = 1;
      euler.add_term(e, Rational(A[i][j]));
    }
    WElt v(P.ring, 1);
    v[0] = euler;
    P.gens.push_back(std::move(v));
  }
  KPolynomial k = k_of_presentation(P, {});
  return expand_and_extract(k, n);
}

/// The full analysis for one matrix and one beta (or a
/// generic beta realized as seeded integer draws, self-verified by a
/// second independent draw).
struct GKZAnalysis {
  int d = 0, n = 0;
  bool homogeneous = false;
  bool pointed = false;
  std::optional<std::vector<BigInt>> pointed_witness;
  BigInt volume = 0;
  bool cohen_macaulay = false;
  Multidegree closed_form;
  bool generic_beta = false;
  std::vector<Rational> beta;
  int beta_attempts = 0;
  unsigned long long seed = 0;
  MultidegreeReport report;
  bool formula_match = false;
  std::optional<bool> fastpath_match;
};

inline GKZAnalysis analyze(const IntMatrix& A,
                           const std::optional<std::vector<Rational>>& beta,
                           unsigned long long seed = 20240817ULL) {
  detail::check_gkz_matrix(A);
  GKZAnalysis out;
  out.d = detail::mat_rows(A);
  out.n = detail::mat_cols(A);
  out.seed = seed;
  out.homogeneous = is_homogeneous(A);
  auto [ptd, wit] = is_pointed(A);
  out.pointed = ptd;
  out.pointed_witness = wit;
  out.volume = volume(A);
  out.cohen_macaulay = cohen_macaulay(A);
  out.closed_form = closed_form_multidegree(A);

  if (beta) {
    out.beta = *beta;
    out.report = multidegree_fv(build_presentation(A, out.beta), seed);
  } else {
    out.generic_beta = true;
    const int max_attempts = 8;
    for (int a = 0; a < max_attempts; ++a) {
      out.beta_attempts = a + 1;
      auto draw = [&](unsigned long long salt) {
        std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * salt));
        std::uniform_int_distribution<long> dist(-1000000, 1000000);
        std::vector<Rational> b(out.d);
        for (int i = 0; i < out.d; ++i) b[i] = Rational(dist(rng));
        return b;
      };
      std::vector<Rational> b1 = draw(2 * a + 1), b2 = draw(2 * a + 2);
      MultidegreeReport r1 = multidegree_fv(build_presentation(A, b1), seed);
      MultidegreeReport r2 = multidegree_fv(build_presentation(A, b2), seed);
      if (r1.k == r2.k && r1.nice == r2.nice) {
        out.beta = b1;
        out.report = std::move(r1);
        break;
      }
      if (a == max_attempts - 1)
        throw std::runtime_error("analyze: generic beta draws keep disagreeing");
    }
  }
  out.formula_match =
      out.report.multidegree.form == out.closed_form.form;
  if (out.homogeneous && out.cohen_macaulay)
    out.fastpath_match =
        theorem2_fastpath(A).form == out.report.multidegree.form;
  return out;
}

}  // namespace multideg

#endif
