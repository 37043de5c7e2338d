#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "apapr/scalar.hpp"

namespace apapr {

/// Parameter name -> exponent (>= 1). The empty monomial is the constant term.
using Monomial = std::map<std::string, unsigned>;

/// Parameter name -> exact value.
using Binding = std::map<std::string, Scalar>;

/// Polynomial in named parameters with rational coefficients, stored in
/// expanded canonical form: zero coefficients are never kept, so two
/// expressions are equal iff their term maps are equal.
class ParamExpr {
 public:
  ParamExpr() = default;
  ParamExpr(int value) : ParamExpr(Scalar(value)) {}  // NOLINT(google-explicit-constructor)
  ParamExpr(Scalar value);                           // NOLINT(google-explicit-constructor)

  static ParamExpr parameter(const std::string& name);

  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const Monomial& m) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term; throws ArithmeticError when the expression is not constant.
  Scalar constant_value() const;
  unsigned degree() const;
  std::set<std::string> parameters() const;

  /// Full evaluation; throws UnboundParameter naming the first missing name.
  Scalar eval(const Binding& binding) const;
  /// Partial evaluation: bound parameters are replaced, the rest stay symbolic.
  ParamExpr substitute(const Binding& binding) const;

  ParamExpr pow(unsigned exponent) const;
  ParamExpr inverse() const;

  /// Canonical text, highest total degree first. parse_expr(to_string()) == *this.
  std::string to_string() const;

  ParamExpr& operator+=(const ParamExpr& rhs);
  ParamExpr& operator-=(const ParamExpr& rhs);
  ParamExpr& operator*=(const ParamExpr& rhs);
  /// Division by a nonzero constant only.
  ParamExpr& operator/=(const ParamExpr& rhs);

  friend ParamExpr operator+(ParamExpr a, const ParamExpr& b) { return a += b; }
  friend ParamExpr operator-(ParamExpr a, const ParamExpr& b) { return a -= b; }
  friend ParamExpr operator*(ParamExpr a, const ParamExpr& b) { return a *= b; }
  friend ParamExpr operator/(ParamExpr a, const ParamExpr& b) { return a /= b; }
  ParamExpr operator-() const;

  friend bool operator==(const ParamExpr&, const ParamExpr&) = default;

 private:
  void add_term(const Monomial& m, const Scalar& c);

  std::map<Monomial, Scalar> terms_;
};

/// Grammar (whitespace ignored between tokens):
///
///   expr    = term { ("+" | "-") term } ;
///   term    = unary { ("*" | "/") unary } ;
///   unary   = "-" unary | power ;
///   power   = primary [ "^" integer ] ;
///   primary = integer | identifier | "(" expr ")" ;
///
/// "/" requires a nonzero constant divisor, so "3/4" and "p/2" are accepted and
/// "1/p" is rejected. Throws ParseError with the offending byte offset.
ParamExpr parse_expr(std::string_view text);

std::ostream& operator<<(std::ostream& os, const ParamExpr& e);

inline bool is_zero(const ParamExpr& e) { return e.is_zero(); }
inline ParamExpr inverse(const ParamExpr& e) { return e.inverse(); }
inline std::string to_string(const ParamExpr& e) { return e.to_string(); }

}  // namespace apapr
