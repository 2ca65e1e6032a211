#ifndef MULTIDEG_OPPARSE_HPP
#define MULTIDEG_OPPARSE_HPP

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "multideg/kpoly.hpp"
#include "multideg/weyl.hpp"

namespace multideg {

/// Lexical or syntax error in an operator expression, with position.
struct ParseError : std::runtime_error {
  int line = 1, column = 1;
  ParseError(const std::string& msg, int l, int c)
      : std::runtime_error(msg + " at line " + std::to_string(l) +
                           ", column " + std::to_string(c)),
        line(l),
        column(c) {}
};

namespace detail {

struct OpLexer {
  const std::string& s;
  size_t i = 0;
  int line = 1, col = 1;

  explicit OpLexer(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  }

  bool eof() {
    skip_ws();
    return i >= s.size();
  }

  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }

  void advance(size_t k) {
    i += k;
    col += static_cast<int>(k);
  }

  [[noreturn]] void fail(const std::string& msg) {
    skip_ws();
    throw ParseError(msg, line, col);
  }

  bool accept(char c) {
    if (peek() == c) {
      advance(1);
      return true;
    }
    return false;
  }

  // nonnegative integer literal
  BigInt integer() {
    skip_ws();
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail("expected a number");
    BigInt v(s.substr(i, j - i));
    advance(j - i);
    return v;
  }

  std::string identifier() {
    skip_ws();
    size_t j = i;
    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                            s[j] == '_'))
      ++j;
    if (j == i) fail("expected a variable name");
    std::string id = s.substr(i, j - i);
    advance(j - i);
    return id;
  }
};

}  // namespace detail

/// Parse an operator expression over the variables of W and normal-order
/// it. Grammar: poly ::= ['-'] term (('+'|'-') term)*,
/// term ::= factor ('*' factor)*, factor ::= rational | var ['^' int].
/// Multiplication must be written explicitly; factors multiply left to
/// right with the Weyl relations applied.
template <typename F = Rational>
Polynomial<F> parse_operator(const WeylRing& W, const std::string& text) {
  detail::OpLexer lx(text);
  const RingPtr& R = W.ring;
  Polynomial<F> result(R);

  auto parse_factor = [&](Polynomial<F>& acc) {
    char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = lx.integer();
      F coeff(num);
      if (lx.accept('/')) {
        BigInt den = lx.integer();
        if (den == 0) lx.fail("zero denominator");
        coeff = F(Rational(num, den));
      }
      acc = weyl_mul(W, acc, Polynomial<F>(R, coeff));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      int l = lx.line, cl = lx.col;
      std::string name = lx.identifier();
      int v = R->var_index(name);
      if (v < 0) throw ParseError("unknown variable '" + name + "'", l, cl);
      long e = 1;
      if (lx.accept('^')) {
        BigInt be = lx.integer();
        e = be.get_si();
        if (e < 0) lx.fail("negative exponent");
      }
      Polynomial<F> var = Polynomial<F>::variable(R, v);
      for (long k = 0; k < e; ++k) acc = weyl_mul(W, acc, var);
      if (e == 0) acc = weyl_mul(W, acc, Polynomial<F>(R, F(1)));
      return;
    }
    lx.fail("expected a coefficient or a variable");
  };

  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.accept('-'))
      sign = -1;
    else if (lx.accept('+')) {
      if (first) lx.fail("unexpected '+'");
    } else if (!first) {
      lx.fail("expected '+' or '-'");
    }
    Polynomial<F> term(R, F(1));
    parse_factor(term);
    while (lx.accept('*')) parse_factor(term);
    if (sign < 0) term = term.scaled(F(-1));
    result += term;
    first = false;
  }
  if (first) lx.fail("empty expression");
  return result;
}

namespace detail {

inline void append_monomial(std::ostringstream& os, const Rational& c,
                            const std::vector<std::string>& names,
                            const std::vector<long>& exps, bool first) {
  Rational a = c;
  if (first) {
    if (a.sign() < 0) {
      os << "-";
      a = -a;
    }
  } else {
    os << (a.sign() < 0 ? " - " : " + ");
    if (a.sign() < 0) a = -a;
  }
  bool any_var = false;
  for (long e : exps)
    if (e != 0) any_var = true;
  bool printed = false;
  if (!a.is_one() || !any_var) {
    os << a.str();
    printed = true;
  }
  for (size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] == 0) continue;
    if (printed) os << "*";
    os << names[v];
    if (exps[v] != 1) os << "^" << exps[v];
    printed = true;
  }
}

/// Degrevlex-descending comparison usable for Laurent exponents too.
inline bool degrevlex_greater(const std::vector<long>& a,
                              const std::vector<long>& b) {
  long da = 0, db = 0;
  for (long x : a) da += x;
  for (long x : b) db += x;
  if (da != db) return da > db;
  for (size_t j = a.size(); j-- > 0;)
    if (a[j] != b[j]) return a[j] < b[j];
  return false;
}

}  // namespace detail

/// Canonical text form: terms in degrevlex-descending order.
inline std::string poly_to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  const auto& names = p.ring()->vars;
  std::vector<std::pair<std::vector<long>, Rational>> terms;
  for (const auto& [e, c] : p.terms()) {
    std::vector<long> le(e.begin(), e.end());
    terms.push_back({std::move(le), c});
  }
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return detail::degrevlex_greater(x.first, y.first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    detail::append_monomial(os, c, names, e, first);
    first = false;
  }
  return os.str();
}

/// Canonical text form of a K-polynomial / multidegree in T1..Td.
inline std::string kpoly_to_string(const KPolynomial& k) {
  if (k.is_zero()) return "0";
  std::vector<std::string> names;
  for (int j = 0; j < k.dim(); ++j)
    names.push_back(k.dim() == 1 ? "T" : "T" + std::to_string(j + 1));
  std::vector<std::pair<std::vector<long>, Rational>> terms;
  for (const auto& [b, c] : k.terms()) {
    std::vector<long> e(b.begin(), b.end());
    terms.push_back({std::move(e), Rational(c)});
  }
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return detail::degrevlex_greater(x.first, y.first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    detail::append_monomial(os, c, names, e, first);
    first = false;
  }
  return os.str();
}

}  // namespace multideg

#endif
