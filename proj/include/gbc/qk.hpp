#pragma once

// The Q_k family: Q_0 = 1 - x^n, Q_{k+1} = Q_k + (1 - x) Q_k' / (k + 1),
// together with its three closed forms, the density in n and the
// telescoping certificate that links forms 2 and 3. Every form returns an
// exact polynomial in x so they can be compared coefficient by coefficient.

#include "gbc/poly.hpp"

namespace gbc {

struct QkSpec {
  long n = 0;  // exponent in Q_0 = 1 - x^n
  long k = 0;  // iteration index
};

Poly qk_recurrence(QkSpec spec);

/// 1 - sum_{j=0}^{k} C(n,j) (1-x)^j x^{n-j}
Poly qk_form1(QkSpec spec);

/// -(n-k) C(n,k) (-1)^{n+k} sum_{r>=1} C(k, n-r) (-1)^r x^r / r + [k < n]
Poly qk_form2(QkSpec spec);

/// (1-x)^{k+1} sum_{j=0}^{n-k-1} C(j+k, j) x^j
Poly qk_form3(QkSpec spec);

/// p_n = C(n,k) x^{n-k} (1-x)^{k+1}. Throws PreconditionError when n < k.
Poly density(long n, long k);

/// g_j = (-1)^{j+1} (k+j)! / (r (j-1)! k!) C(k, r-j), with g_0 = 0.
Rational gosper_g(long k, long r, long j);

/// Checks (-1)^j C(k+1, r-j) C(k+j, j) = g_{j+1} - g_j for 0 <= j <= j_max.
bool gosper_certificate_check(long k, long r, long j_max);

}  // namespace gbc
