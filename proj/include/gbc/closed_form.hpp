#pragma once

/**
 * @file closed_form.hpp
 * @brief Closed forms for {n||k} when alpha' = 0, and the row-sum series.
 *
 * With alpha' = 0 the coefficient splits into a polynomial in
 * (alpha, beta, gamma) times prod_{j=1}^{k} (gamma' + j beta'):
 *
 *   first  = sum_{i1+i2+i3 = n-k} c(n, n-i1) C(n-i1, k+i2) S(k+i2, k)
 *                                 alpha^i1 beta^i2 gamma^i3
 *   second = prod_{j=1}^{k} (gamma' + j beta')
 *
 * with c, S the unsigned first-kind and second-kind Stirling numbers. This
 * form is division-free and total, so gbc_factored() is the canonical
 * evaluator. gbc_hyper() is the rising-factorial sum, which divides by
 * alpha, beta and beta'; it is kept as a second route for cross-checking.
 *
 * row_sum_series() is the only floating-point code in the library.
 */

#include <nlohmann/json.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "gbc/rational.hpp"
#include "gbc/triangle.hpp"

namespace gbc {

struct FactoredValue {
  Rational first_factor;
  Rational second_factor;
  Rational product;

  friend bool operator==(const FactoredValue&, const FactoredValue&) = default;
};

/// Throws PreconditionError when alpha' != 0 or n < 0. Product is 0 outside 0 <= k <= n.
FactoredValue gbc_factored(const Params& params, long n, long k);

/// Throws PreconditionError when alpha' != 0; DegenerateParameterError when alpha, beta or beta' is 0.
Rational gbc_hyper(const Params& params, long n, long k);

/// One term of the fully expanded sum
///   c(k+1, j2+1) c(n, n-i1) C(n-i1, k+i2) S(k+i2, k)
///     alpha^i1 beta^i2 gamma^i3 beta'^j1 gamma'^j2,
/// over i1+i2+i3 = n-k and j1+j2 = k. Throws PreconditionError on an index mismatch.
Rational expanded_coefficient(const Params& params, long n, long k, long i1, long i2, long i3, long j1,
                              long j2);

/// Sum of expanded_coefficient over every valid index tuple.
Rational expanded_sum(const Params& params, long n, long k);

using BigFloat = boost::multiprecision::mpfr_float;

struct SeriesEstimate {
  BigFloat value;
  /// Magnitude of the last included term (j = truncation_j).
  BigFloat last_term;
  /// last_term / |value|; a large ratio means the truncation has not converged.
  BigFloat residual_ratio;
  long truncation_j = 0;
  unsigned precision_bits = 0;
};

/// Partial sum j = 0..truncation_j of
///   alpha^n n! sum_j C(j + g'/b', j) C(n + (j b + g)/a - 1, n)
///                    (b'/b)^j (1 + b'/b)^(-j-1-g'/b')
/// (a, b, g, b', g' = alpha, beta, gamma, beta', gamma'), which converges
/// to rho(n) for alpha, beta, beta' > 0. Every factor is exact except
/// (1 + b'/b)^(-g'/b'), evaluated once at precision_bits.
SeriesEstimate row_sum_series(const Params& params, long n, long truncation_j, unsigned precision_bits);

nlohmann::json to_json(const FactoredValue& v);

}  // namespace gbc
