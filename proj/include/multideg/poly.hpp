#ifndef MULTIDEG_POLY_HPP
#define MULTIDEG_POLY_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "multideg/order.hpp"
#include "multideg/rational.hpp"

namespace multideg {

struct Ring {
  std::vector<std::string> vars;
  int nvars() const { return static_cast<int>(vars.size()); }
  int var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (vars[i] == name) return i;
    return -1;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
  return std::make_shared<Ring>(Ring{std::move(vars)});
}

struct RingMismatch : std::runtime_error {
  RingMismatch() : std::runtime_error("operands live in different rings") {}
};

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a != b && (!a || !b || a->vars != b->vars)) throw RingMismatch();
}

/// Sparse multivariate polynomial; no zero coefficients stored, terms keyed
/// by exponent vector so equal values have identical representations.
template <typename F>
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, F>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, const F& c) : ring_(std::move(ring)) {
    if (!c.is_zero()) terms_[ExponentVector(ring_->nvars(), 0)] = c;
  }

  static Polynomial monomial(RingPtr ring, ExponentVector e, const F& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_[std::move(e)] = c;
    return p;
  }

  static Polynomial variable(const RingPtr& ring, int idx, int power = 1) {
    ExponentVector e(ring->nvars(), 0);
    e[idx] = power;
    return monomial(ring, std::move(e), F(1));
  }

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const ExponentVector& e, const F& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_same_ring(ring_, o.ring_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same_ring(ring_, o.ring_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  Polynomial operator-() const {
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a.ring_, b.ring_);
    Polynomial r(a.ring_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const F& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
  }

  Polynomial shifted(const ExponentVector& m) const {
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(exp_add(e, m), c);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  /// Leading term under ord; polynomial must be nonzero.
  std::pair<ExponentVector, F> lead(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::domain_error("lead of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (ord.compare(it->first, best->first) > 0) best = it;
    return {best->first, best->second};
  }

  long degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  long degree_in(int var) const {
    long d = 0;
    for (const auto& [e, c] : terms_) d = std::max<long>(d, e.at(var));
    return d;
  }

  /// Substitute variable idx by value (a polynomial in the same ring).
  Polynomial substitute(int idx, const Polynomial& value) const {
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_) {
      ExponentVector e2 = e;
      int k = e2[idx];
      e2[idx] = 0;
      Polynomial t = monomial(ring_, e2, c);
      for (int i = 0; i < k; ++i) t = t * value;
      r += t;
    }
    return r;
  }

  /// Image in another ring under a variable index map (-1 entries must not
  /// occur in the support).
  template <typename G = F>
  Polynomial<G> map_ring(const RingPtr& target,
                         const std::vector<int>& var_map) const {
    Polynomial<G> r(target);
    for (const auto& [e, c] : terms_) {
      ExponentVector e2(target->nvars(), 0);
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (var_map[i] < 0)
          throw std::domain_error("map_ring: variable has no image");
        e2[var_map[i]] += e[i];
      }
      r.add_term(e2, G(c));
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    // degrevlex-descending for canonical, diffable output
    std::vector<const typename TermMap::value_type*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    MonomialOrder ord = MonomialOrder::grevlex(ring_->nvars());
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
      return ord.compare(a->first, b->first) > 0;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
      std::string cs = t->second.str();
      bool neg = !cs.empty() && cs[0] == '-';
      if (first) {
        if (neg) os << "-", cs = cs.substr(1);
      } else {
        os << (neg ? " - " : " + ");
        if (neg) cs = cs.substr(1);
      }
      first = false;
      bool const_one = (cs == "1");
      bool any_var = total_degree(t->first) > 0;
      if (!const_one || !any_var) os << cs;
      if (any_var) {
        bool started = !const_one;
        for (int i = 0; i < ring_->nvars(); ++i) {
          if (t->first[i] == 0) continue;
          if (started) os << "*";
          started = true;
          os << ring_->vars[i];
          if (t->first[i] > 1) os << "^" << t->first[i];
        }
      }
    }
    return os.str();
  }

 private:
  RingPtr ring_;
  TermMap terms_;
};

/// Element of a free module S^r, stored componentwise.
template <typename F>
class FreeModuleElement {
 public:
  FreeModuleElement() = default;
  FreeModuleElement(RingPtr ring, int rank)
      : ring_(std::move(ring)), comps_(rank, Polynomial<F>(ring_)) {}
  explicit FreeModuleElement(Polynomial<F> p)
      : ring_(p.ring()), comps_{std::move(p)} {}

  const RingPtr& ring() const { return ring_; }
  int rank() const { return static_cast<int>(comps_.size()); }
  Polynomial<F>& operator[](int i) { return comps_[i]; }
  const Polynomial<F>& operator[](int i) const { return comps_[i]; }

  bool is_zero() const {
    for (const auto& p : comps_)
      if (!p.is_zero()) return false;
    return true;
  }

  FreeModuleElement& operator+=(const FreeModuleElement& o) {
    for (int i = 0; i < rank(); ++i) comps_[i] += o.comps_[i];
    return *this;
  }
  FreeModuleElement& operator-=(const FreeModuleElement& o) {
    for (int i = 0; i < rank(); ++i) comps_[i] -= o.comps_[i];
    return *this;
  }
  friend FreeModuleElement operator+(FreeModuleElement a,
                                     const FreeModuleElement& b) {
    return a += b;
  }
  friend FreeModuleElement operator-(FreeModuleElement a,
                                     const FreeModuleElement& b) {
    return a -= b;
  }

  FreeModuleElement scaled(const F& c) const {
    FreeModuleElement r(ring_, rank());
    for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i].scaled(c);
    return r;
  }

  FreeModuleElement mul_monomial(const ExponentVector& m, const F& c) const {
    FreeModuleElement r(ring_, rank());
    for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i].shifted(m).scaled(c);
    return r;
  }

  friend FreeModuleElement operator*(const Polynomial<F>& p,
                                     const FreeModuleElement& v) {
    FreeModuleElement r(v.ring_, v.rank());
    for (int i = 0; i < v.rank(); ++i) r.comps_[i] = p * v.comps_[i];
    return r;
  }

  friend bool operator==(const FreeModuleElement& a, const FreeModuleElement& b) {
    return a.comps_ == b.comps_;
  }

  struct Lead {
    ExponentVector exp;
    int component;
    F coeff;
  };

  Lead lead(const MonomialOrder& ord) const {
    const ExponentVector* be = nullptr;
    int bc = -1;
    const F* bcoef = nullptr;
    for (int i = 0; i < rank(); ++i)
      for (const auto& [e, c] : comps_[i].terms())
        if (!be || ord.compare(e, i, *be, bc) > 0) be = &e, bc = i, bcoef = &c;
    if (!be) throw std::domain_error("lead of zero module element");
    return {*be, bc, *bcoef};
  }

  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < rank(); ++i) {
      if (i) os << ", ";
      os << comps_[i].str();
    }
    os << ")";
    return os.str();
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial<F>> comps_;
};

}  // namespace multideg

#endif
