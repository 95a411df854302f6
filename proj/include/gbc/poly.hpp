#pragma once

// Dense univariate polynomials with exact rational coefficients.
// coeffs()[i] is the coefficient of x^i; the highest stored coefficient is
// nonzero, and the zero polynomial stores nothing.

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gbc/rational.hpp"

namespace gbc {

class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& c) : Poly(std::vector<Rational>{c}) {}  // NOLINT(google-explicit-constructor)

  static Poly x() { return Poly{0, 1}; }
  static Poly monomial(const Rational& c, long degree);
  /// (a + b x)^e
  static Poly linear_power(const Rational& a, const Rational& b, long e);

  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  [[nodiscard]] std::optional<long> degree() const;
  [[nodiscard]] Rational coeff(long i) const;
  [[nodiscard]] Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  [[nodiscard]] Poly derivative() const;
  [[nodiscard]] Rational operator()(const Rational& at) const;
  /// Scales so the leading coefficient is 1. Zero stays zero.
  [[nodiscard]] Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Human-readable, constant term first: "1 - 5x^4 + 4x^5". Zero prints "0".
  [[nodiscard]] std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division over Q: a = q b + r, deg r < deg b. Throws ZeroPolynomialError on b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// Coefficient strings, constant term first.
nlohmann::json to_json(const Poly& p);
std::string to_csv(const Poly& p);

}  // namespace gbc
