#include "gbc/poly.hpp"

#include <sstream>

#include "gbc/error.hpp"
#include "gbc/special_numbers.hpp"

namespace gbc {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, long degree) {
  if (degree < 0) throw PreconditionError("monomial: negative degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear_power(const Rational& a, const Rational& b, long e) {
  if (e < 0) throw PreconditionError("linear_power: negative exponent");
  std::vector<Rational> v(static_cast<std::size_t>(e) + 1);
  for (long i = 0; i <= e; ++i) v[i] = Rational(binomial(e, i)) * a.pow(e - i) * b.pow(i);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<long> Poly::degree() const {
  if (is_zero()) return std::nullopt;
  return static_cast<long>(coeffs_.size()) - 1;
}

Rational Poly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
  return Poly(std::move(v));
}

Rational Poly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / leading());
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    const Rational mag = c.abs();
    if (i == 0) {
      os << mag.str();
    } else {
      if (mag != Rational(1)) os << (mag.is_integer() ? mag.str() : "(" + mag.str() + ")");
      os << 'x';
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ZeroPolynomialError();
  const long db = *b.degree();
  std::vector<Rational> rem = a.coeffs();
  if (static_cast<long>(rem.size()) - 1 < db) return {Poly{}, a};
  std::vector<Rational> quot(rem.size() - static_cast<std::size_t>(db));
  const Rational inv_lead = Rational(1) / b.leading();
  for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
    if (rem[i].is_zero()) continue;
    const Rational q = rem[i] * inv_lead;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (long j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

nlohmann::json to_json(const Poly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

std::string to_csv(const Poly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out += (i ? "," : "") + p.coeffs()[i].str();
  return out.empty() ? "0" : out;
}

}  // namespace gbc
