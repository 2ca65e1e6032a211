#ifndef MULTIDEG_RATFUN_HPP
#define MULTIDEG_RATFUN_HPP

#include <string>
#include <vector>

#include "multideg/gcd.hpp"
#include "multideg/poly.hpp"

namespace multideg {

struct PoleError : FieldError {
  PoleError() : FieldError("rational function: denominator vanishes") {}
};

/// Element of Q(lambda_1..lambda_p), stored as an integer-primitive
/// numerator/denominator pair with gcd 1 and positive denominator lead.
/// Constants built without a ring live in the 0-variable ring and unify
/// with any parameter ring on combination.
class RationalFunction {
 public:
  RationalFunction() : RationalFunction(Rational(0)) {}
  RationalFunction(long n) : RationalFunction(Rational(n)) {}
  RationalFunction(const Rational& c)
      : num_(scalar_ring(), c), den_(scalar_ring(), Rational(1)) {}
  RationalFunction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw FieldError("rational function: zero denominator");
    normalize();
  }
  explicit RationalFunction(QPoly num)
      : num_(std::move(num)), den_(num_.ring(), Rational(1)) {
    normalize();
  }

  static RingPtr scalar_ring() {
    static RingPtr r = make_ring({});
    return r;
  }

  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) {
    return a += b;
  }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) {
    return a -= b;
  }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) {
    return a *= b;
  }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) {
    return a /= b;
  }

  RationalFunction& operator+=(RationalFunction o) {
    unify(*this, o);
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (den_.is_zero()) throw FieldError("rational function: zero denominator");
    normalize();
    return *this;
  }
  RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }
  RationalFunction& operator*=(RationalFunction o) {
    unify(*this, o);
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  RationalFunction& operator/=(RationalFunction o) {
    if (o.is_zero()) throw FieldError("rational function: division by zero");
    unify(*this, o);
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
  }

  RationalFunction inverse() const {
    if (is_zero()) throw FieldError("rational function: inverse of zero");
    return RationalFunction(den_, num_);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.ring() == b.ring() || a.ring()->vars == b.ring()->vars)
      return a.num_ == b.num_ && a.den_ == b.den_;
    RationalFunction x = a, y = b;
    unify(x, y);
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  /// Value at lambda = c; throws PoleError when the denominator vanishes.
  Rational evaluate(const std::vector<Rational>& c) const {
    Rational d = eval_poly(den_, c);
    if (d.is_zero()) throw PoleError();
    return eval_poly(num_, c) / d;
  }

  std::string str() const {
    if (den_ == QPoly(den_.ring(), Rational(1))) return num_.str();
    std::string n = num_.str(), d = den_.str();
    if (num_.size() > 1) n = "(" + n + ")";
    if (den_.size() > 1) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  static Rational eval_poly(const QPoly& p, const std::vector<Rational>& c) {
    if (p.ring()->nvars() > static_cast<int>(c.size()))
      throw FieldError("evaluate: wrong number of parameter values");
    Rational r(0);
    for (const auto& [e, k] : p.terms()) {
      Rational t = k;
      for (size_t i = 0; i < e.size(); ++i)
        for (int j = 0; j < e[i]; ++j) t *= c[i];
      r += t;
    }
    return r;
  }

  static void unify(RationalFunction& a, RationalFunction& b) {
    if (a.ring() == b.ring() || a.ring()->vars == b.ring()->vars) return;
    if (a.ring()->nvars() == 0) {
      a = lift(a, b.ring());
    } else if (b.ring()->nvars() == 0) {
      b = lift(b, a.ring());
    } else {
      throw RingMismatch();
    }
  }

  static RationalFunction lift(const RationalFunction& c, const RingPtr& ring) {
    Rational v = c.num_.is_zero()
                     ? Rational(0)
                     : c.num_.terms().begin()->second / c.den_.terms().begin()->second;
    RationalFunction r;
    r.num_ = QPoly(ring, v);
    r.den_ = QPoly(ring, Rational(1));
    return r;
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = QPoly(den_.ring(), Rational(1));
      return;
    }
    QPoly g = poly_gcd(num_, den_);
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
    // denominator integer-primitive with positive lead pins the scalar,
    // so equal values get identical representations
    Rational s = primitive_scale(den_);
    den_ = den_.scaled(s);
    num_ = num_.scaled(s);
  }

  QPoly num_, den_;
};

}  // namespace multideg

#endif
