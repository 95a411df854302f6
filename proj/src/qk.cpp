#include "gbc/qk.hpp"

#include <algorithm>
#include <string>

#include "gbc/error.hpp"
#include "gbc/special_numbers.hpp"

namespace gbc {

namespace {

void check_spec(QkSpec spec) {
  if (spec.n < 0 || spec.k < 0) throw PreconditionError("QkSpec needs n >= 0 and k >= 0");
}

Rational sign_power(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

const Poly kOneMinusX{1, -1};

}  // namespace

Poly qk_recurrence(QkSpec spec) {
  check_spec(spec);
  Poly q = Poly{1} - Poly::monomial(1, spec.n);
  for (long m = 0; m < spec.k; ++m) {
    const Poly step = kOneMinusX * q.derivative() * (Rational(1) / Rational(m + 1));
    q += step;
  }
  return q;
}

Poly qk_form1(QkSpec spec) {
  check_spec(spec);
  Poly sum;
  for (long j = 0; j <= std::min(spec.k, spec.n); ++j)
    sum += Poly::linear_power(1, -1, j) * Poly::monomial(Rational(binomial(spec.n, j)), spec.n - j);
  return Poly{1} - sum;
}

Poly qk_form2(QkSpec spec) {
  check_spec(spec);
  const auto [n, k] = spec;
  const Rational prefactor = -Rational(n - k) * Rational(binomial(n, k)) * sign_power(n + k);
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  // C(k, n-r) vanishes unless n-k <= r <= n.
  for (long r = std::max(1L, n - k); r <= n; ++r)
    coeffs[r] = prefactor * Rational(binomial(k, n - r)) * sign_power(r) / Rational(r);
  if (k < n) coeffs[0] += 1;
  return Poly(std::move(coeffs));
}

Poly qk_form3(QkSpec spec) {
  check_spec(spec);
  const auto [n, k] = spec;
  if (k >= n) return {};
  std::vector<Rational> tail(static_cast<std::size_t>(n - k));
  for (long j = 0; j < n - k; ++j) tail[j] = Rational(binomial(j + k, j));
  return Poly::linear_power(1, -1, k + 1) * Poly(std::move(tail));
}

Poly density(long n, long k) {
  if (k < 0 || n < k) throw PreconditionError("density requires 0 <= k <= n");
  return Poly::monomial(Rational(binomial(n, k)), n - k) * Poly::linear_power(1, -1, k + 1);
}

Rational gosper_g(long k, long r, long j) {
  if (r < 1) throw PreconditionError("gosper_g requires r >= 1");
  if (k < 0 || j < 0) throw PreconditionError("gosper_g requires k, j >= 0");
  if (j == 0) return 0;  // 1/(j-1)! has a pole at j = 0
  const Rational magnitude = Rational(factorial(k + j)) /
                             (Rational(r) * Rational(factorial(j - 1)) * Rational(factorial(k))) *
                             Rational(binomial(k, r - j));
  return sign_power(j + 1) * magnitude;
}

bool gosper_certificate_check(long k, long r, long j_max) {
  if (r < 1) throw PreconditionError("gosper_certificate_check requires r >= 1");
  if (k < 0 || j_max < 0) throw PreconditionError("gosper_certificate_check requires k, j_max >= 0");
  for (long j = 0; j <= j_max; ++j) {
    const Rational summand = sign_power(j) * Rational(binomial(k + 1, r - j)) * Rational(binomial(k + j, j));
    if (summand != gosper_g(k, r, j + 1) - gosper_g(k, r, j)) return false;
  }
  return true;
}

}  // namespace gbc
