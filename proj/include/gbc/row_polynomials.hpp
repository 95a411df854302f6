#pragma once

/**
 * @file row_polynomials.hpp
 * @brief Row polynomials phi_n(x) = sum_k {n||k} x^k and exact real-root certificates.
 *
 * phi() builds phi_n by the derivative recurrence
 *
 *   phi_{n+1} = ((alpha n + gamma) + (alpha' n + beta' + gamma') x) phi_n
 *             + (beta + beta' x) x phi_n'
 *
 * using polynomial algebra only, so it is an independent route to the
 * triangle rows. Reality of zeros is decided with Sturm chains over the
 * rationals: no floating point is involved, so a verdict is a proof for
 * that polynomial.
 */

#include <nlohmann/json.hpp>

#include "gbc/poly.hpp"
#include "gbc/triangle.hpp"

namespace gbc {

struct RealityCertificate {
  long degree = 0;
  long squarefree_degree = 0;
  long distinct_real_roots = 0;
  bool all_real = true;

  friend bool operator==(const RealityCertificate&, const RealityCertificate&) = default;
};

Poly phi(const Params& params, long n);

/// prod_{j<n} ((alpha j + gamma) + (alpha' j + gamma') x). Requires beta = beta' = 0.
Poly phi_product_form(const Params& params, long n);

/// p / gcd(p, p'), made monic. Throws ZeroPolynomialError on 0.
Poly squarefree_part(const Poly& p);

/// Distinct real roots of p, counted on its squarefree part.
long sturm_distinct_real_roots(const Poly& p);

RealityCertificate certify_all_real(const Poly& p);

/// True iff p has no root in (0, +inf).
bool negativity_check(const Poly& p);

nlohmann::json to_json(const RealityCertificate& cert);

}  // namespace gbc
