#include "apapr/param_expr.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

#include "apapr/error.hpp"

namespace apapr {

namespace {

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (const auto& [name, e] : m) d += e;
  return d;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (const auto& [name, e] : b) out[name] += e;
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParamExpr parse() {
    ParamExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParamExpr expr() {
    ParamExpr acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  ParamExpr term() {
    ParamExpr acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        ParamExpr divisor = unary();
        if (!divisor.is_constant()) throw ParseError("division by non-constant expression", at);
        if (divisor.is_zero()) throw ParseError("division by zero", at);
        acc /= divisor;
      } else {
        return acc;
      }
    }
  }

  ParamExpr unary() {
    if (accept('-')) return -unary();
    return power();
  }

  ParamExpr power() {
    ParamExpr base = primary();
    if (!accept('^')) return base;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("exponent must be a nonnegative integer");
    unsigned long e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
      if (e > 1000) fail("exponent too large");
    }
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/'))
      fail("non-integer exponent");
    return base.pow(static_cast<unsigned>(e));
  }

  ParamExpr primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ParamExpr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not supported");
      return ParamExpr(Scalar(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return ParamExpr::parameter(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamExpr::ParamExpr(Scalar value) {
  if (!value.is_zero()) terms_.emplace(Monomial{}, std::move(value));
}

ParamExpr ParamExpr::parameter(const std::string& name) {
  ParamExpr e;
  e.terms_.emplace(Monomial{{name, 1}}, Scalar(1));
  return e;
}

Scalar ParamExpr::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

bool ParamExpr::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar ParamExpr::constant_value() const {
  if (!is_constant()) throw ArithmeticError("expression '" + to_string() + "' is not constant");
  return coefficient({});
}

unsigned ParamExpr::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

std::set<std::string> ParamExpr::parameters() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m) names.insert(name);
  return names;
}

Scalar ParamExpr::eval(const Binding& binding) const {
  Scalar total(0);
  for (const auto& [m, c] : terms_) {
    Scalar value = c;
    for (const auto& [name, e] : m) {
      auto it = binding.find(name);
      if (it == binding.end()) throw UnboundParameter(name);
      value *= it->second.pow(e);
    }
    total += value;
  }
  return total;
}

ParamExpr ParamExpr::substitute(const Binding& binding) const {
  ParamExpr out;
  for (const auto& [m, c] : terms_) {
    Scalar coeff = c;
    Monomial rest;
    for (const auto& [name, e] : m) {
      auto it = binding.find(name);
      if (it == binding.end()) {
        rest.emplace(name, e);
      } else {
        coeff *= it->second.pow(e);
      }
    }
    out.add_term(rest, coeff);
  }
  return out;
}

ParamExpr ParamExpr::pow(unsigned exponent) const {
  ParamExpr result(1);
  ParamExpr base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

ParamExpr ParamExpr::inverse() const {
  return ParamExpr(constant_value().inverse());
}

void ParamExpr::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamExpr& ParamExpr::operator+=(const ParamExpr& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

ParamExpr& ParamExpr::operator-=(const ParamExpr& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

ParamExpr& ParamExpr::operator*=(const ParamExpr& rhs) {
  ParamExpr product;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) product.add_term(multiply(ma, mb), ca * cb);
  terms_ = std::move(product.terms_);
  return *this;
}

ParamExpr& ParamExpr::operator/=(const ParamExpr& rhs) {
  const Scalar inv = rhs.inverse().constant_value();
  for (auto& [m, c] : terms_) c *= inv;
  return *this;
}

ParamExpr ParamExpr::operator-() const {
  ParamExpr out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string ParamExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Scalar>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return total_degree(a.first) > total_degree(b.first);
  });

  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    Scalar mag = c.abs();
    if (first) {
      if (c.sign() < 0) out << "-";
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;

    bool wrote = false;
    if (m.empty() || mag != Scalar(1)) {
      out << mag.to_string();
      wrote = true;
    }
    for (const auto& [name, e] : m) {
      if (wrote) out << "*";
      out << name;
      if (e != 1) out << "^" << e;
      wrote = true;
    }
  }
  return out.str();
}

ParamExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const ParamExpr& e) { return os << e.to_string(); }

}  // namespace apapr
