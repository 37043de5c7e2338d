#include "apapr/scalar.hpp"

#include <cctype>
#include <ostream>

#include "apapr/error.hpp"

namespace apapr {

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) throw ArithmeticError("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](std::string& out) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      out.push_back(text[pos++]);
    if (pos == start) throw ParseError("expected digits in rational '" + std::string(text) + "'", pos);
  };

  std::string num;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    if (text[pos] == '-') num.push_back('-');
    ++pos;
  }
  digits(num);
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den.clear();
    digits(den);
  }
  if (pos != text.size())
    throw ParseError("unexpected character in rational '" + std::string(text) + "'", pos);

  mpz_class d(den);
  if (d == 0) throw ParseError("division by zero in rational '" + std::string(text) + "'", 0);
  mpq_class q{mpz_class(num), d};
  return Scalar(std::move(q));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  return Scalar(mpq_class(1 / value_));
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result(1);
  Scalar base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  value_ += rhs.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace apapr
