#pragma once

/**
 * @file rational.hpp
 * @brief Exact signed rationals over arbitrary-precision integers.
 *
 * Values are always canonical: gcd(|num|, den) = 1, den > 0, and zero is
 * stored as 0/1. Backed by GMP's mpq_class; the wrapper exists so the rest
 * of the library sees one value type with a fixed text format ("p/q", or
 * "p" when q = 1, negative values prefixed by '-').
 */

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gbc {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>)
      value_ = static_cast<long>(v);
    else
      value_ = static_cast<unsigned long>(v);
  }

  Rational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error when den is zero.
  Rational(const BigInt& num, const BigInt& den);

  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /// Accepts "[sign]digits" or "[sign]digits/digits"; sign is '-', '+' or U+2212.
  static Rational parse(std::string_view text);

  [[nodiscard]] BigInt num() const { return value_.get_num(); }
  [[nodiscard]] BigInt den() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  [[nodiscard]] std::string str() const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  /// Integer power; 0^0 = 1. Negative exponents on zero throw std::domain_error.
  [[nodiscard]] Rational pow(long exponent) const;
  [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_{0};
};

}  // namespace gbc
