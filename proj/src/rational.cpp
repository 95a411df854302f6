#include "gbc/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "gbc/error.hpp"

namespace gbc {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (body.starts_with(kUnicodeMinus)) {
    negative = true;
    body.remove_prefix(kUnicodeMinus.size());
  } else if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text))
    throw ParseError("not a rational: '" + std::string(text) + "'");

  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("zero to a negative power");
    return Rational(1) / pow(-exponent);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace gbc
