#include "gbc/closed_form.hpp"

#include <cmath>
#include <string>

#include "gbc/error.hpp"
#include "gbc/special_numbers.hpp"

namespace gbc {

namespace {

void require_alpha_prime_zero(const Params& p, const char* what) {
  if (!p.alpha_prime.is_zero())
    throw PreconditionError(std::string(what) + " requires alpha' = 0, got " + p.alpha_prime.str());
}

void require_nonnegative(long n, const char* what) {
  if (n < 0) throw PreconditionError(std::string(what) + ": n must be nonnegative");
}

Rational second_factor(const Params& p, long k) {
  Rational out = 1;
  for (long j = 1; j <= k; ++j) out *= p.gamma_prime + Rational(j) * p.beta_prime;
  return out;
}

Rational first_factor(const Params& p, long n, long k) {
  const long d = n - k;
  Rational sum = 0;
  for (long i1 = 0; i1 <= d; ++i1) {
    const BigInt c = stirling_first_unsigned(n, n - i1);
    if (c == 0) continue;
    for (long i2 = 0; i1 + i2 <= d; ++i2) {
      const BigInt weight = c * binomial(n - i1, k + i2) * stirling_second(k + i2, k);
      if (weight == 0) continue;
      const long i3 = d - i1 - i2;
      sum += Rational(weight) * p.alpha.pow(i1) * p.beta.pow(i2) * p.gamma.pow(i3);
    }
  }
  return sum;
}

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398119521)) + 1;
}

BigFloat make_float(const Rational& r, unsigned bits) {
  BigFloat out;
  out.precision(digits10_for_bits(bits));
  mpfr_set_prec(out.backend().data(), bits);
  mpfr_set_q(out.backend().data(), r.raw().get_mpq_t(), MPFR_RNDN);
  return out;
}

}  // namespace

FactoredValue gbc_factored(const Params& params, long n, long k) {
  require_alpha_prime_zero(params, "gbc_factored");
  require_nonnegative(n, "gbc_factored");
  FactoredValue out;
  out.second_factor = second_factor(params, k);
  out.first_factor = (k < 0 || k > n) ? Rational(0) : first_factor(params, n, k);
  out.product = out.first_factor * out.second_factor;
  return out;
}

Rational gbc_hyper(const Params& params, long n, long k) {
  require_alpha_prime_zero(params, "gbc_hyper");
  require_nonnegative(n, "gbc_hyper");
  if (params.alpha.is_zero() || params.beta.is_zero() || params.beta_prime.is_zero())
    throw DegenerateParameterError("gbc_hyper divides by alpha, beta and beta'; use gbc_factored");
  if (k < 0) return 0;

  Rational alternating = 0;
  for (long j = 0; j <= k; ++j) {
    Rational term = Rational(binomial(k, j)) *
                    rising_factorial((params.beta * Rational(j) + params.gamma) / params.alpha, n);
    if ((k - j) % 2 != 0) term = -term;
    alternating += term;
  }
  return params.alpha.pow(n) / Rational(factorial(k)) * (params.beta_prime / params.beta).pow(k) *
         rising_factorial(params.gamma_prime / params.beta_prime + Rational(1), k) * alternating;
}

Rational expanded_coefficient(const Params& params, long n, long k, long i1, long i2, long i3, long j1,
                              long j2) {
  require_alpha_prime_zero(params, "expanded_coefficient");
  if (n < 0 || k < 0 || i1 < 0 || i2 < 0 || i3 < 0 || j1 < 0 || j2 < 0)
    throw PreconditionError("expanded_coefficient: indices must be nonnegative");
  if (i1 + i2 + i3 != n - k || j1 + j2 != k)
    throw PreconditionError("expanded_coefficient: need i1+i2+i3 = n-k and j1+j2 = k");
  const BigInt weight = stirling_first_unsigned(k + 1, j2 + 1) * stirling_first_unsigned(n, n - i1) *
                        binomial(n - i1, k + i2) * stirling_second(k + i2, k);
  if (weight == 0) return 0;
  return Rational(weight) * params.alpha.pow(i1) * params.beta.pow(i2) * params.gamma.pow(i3) *
         params.beta_prime.pow(j1) * params.gamma_prime.pow(j2);
}

Rational expanded_sum(const Params& params, long n, long k) {
  require_alpha_prime_zero(params, "expanded_sum");
  require_nonnegative(n, "expanded_sum");
  if (k < 0 || k > n) return 0;
  Rational sum = 0;
  const long d = n - k;
  for (long i1 = 0; i1 <= d; ++i1)
    for (long i2 = 0; i1 + i2 <= d; ++i2)
      for (long j2 = 0; j2 <= k; ++j2) sum += expanded_coefficient(params, n, k, i1, i2, d - i1 - i2, k - j2, j2);
  return sum;
}

SeriesEstimate row_sum_series(const Params& params, long n, long truncation_j, unsigned precision_bits) {
  require_alpha_prime_zero(params, "row_sum_series");
  require_nonnegative(n, "row_sum_series");
  if (truncation_j < 1) throw PreconditionError("row_sum_series: truncation_j must be positive");
  if (precision_bits < 2) throw PreconditionError("row_sum_series: precision_bits must be at least 2");
  const auto& a = params.alpha;
  const auto& b = params.beta;
  const auto& bp = params.beta_prime;
  if (a.is_zero() || b.is_zero() || bp.is_zero())
    throw DegenerateParameterError("row_sum_series needs alpha, beta, beta' nonzero");
  if (a.sign() < 0 || b.sign() < 0 || bp.sign() < 0)
    throw PreconditionError("row_sum_series needs alpha, beta, beta' > 0");

  const Rational shape = params.gamma_prime / bp;  // g'/b'
  const Rational base = Rational(1) + bp / b;       // 1 + b'/b
  const Rational ratio = (bp / b) / base;           // (b'/b)^j (1+b'/b)^{-j} per step
  const Rational n_fact(factorial(n));
  const Rational scale = a.pow(n) * n_fact / base;  // alpha^n n! (1+b'/b)^{-1}

  // Exact part of term j: C(j + shape, j) C(n + (jb+g)/a - 1, n) ratio^j.
  Rational upper_binom = 1;  // C(j + shape, j) = rising(shape+1, j) / j!
  Rational geometric = 1;
  Rational partial = 0;
  Rational last = 0;
  for (long j = 0; j <= truncation_j; ++j) {
    if (j > 0) {
      upper_binom *= (shape + Rational(j)) / Rational(j);
      geometric *= ratio;
    }
    const Rational lower_binom = rising_factorial((b * Rational(j) + params.gamma) / a, n) / n_fact;
    last = scale * upper_binom * lower_binom * geometric;
    partial += last;
  }

  SeriesEstimate out;
  out.truncation_j = truncation_j;
  out.precision_bits = precision_bits;

  // The one inexact factor: (1 + b'/b)^(-g'/b').
  BigFloat power = make_float(base, precision_bits);
  const BigFloat exponent = make_float(-shape, precision_bits);
  mpfr_pow(power.backend().data(), power.backend().data(), exponent.backend().data(), MPFR_RNDN);

  out.value = make_float(partial, precision_bits);
  mpfr_mul(out.value.backend().data(), out.value.backend().data(), power.backend().data(), MPFR_RNDN);
  out.last_term = make_float(last.abs(), precision_bits);
  mpfr_mul(out.last_term.backend().data(), out.last_term.backend().data(), power.backend().data(), MPFR_RNDN);
  out.residual_ratio = make_float(Rational(0), precision_bits);
  if (!partial.is_zero())
    mpfr_set_q(out.residual_ratio.backend().data(), (last / partial).abs().raw().get_mpq_t(), MPFR_RNDN);
  return out;
}

nlohmann::json to_json(const FactoredValue& v) {
  return {{"first", v.first_factor.str()}, {"second", v.second_factor.str()}, {"product", v.product.str()}};
}

}  // namespace gbc
