#include "gbc/row_polynomials.hpp"

#include <string>
#include <vector>

#include "gbc/error.hpp"

namespace gbc {

namespace {

void require_nonnegative(long n, const char* what) {
  if (n < 0) throw PreconditionError(std::string(what) + ": n must be nonnegative");
}

// Positive rescaling keeps coefficient growth in check and leaves every sign
// in the chain untouched.
Poly normalize_positive(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading().abs());
}

// Sturm chain of a squarefree polynomial: s0 = s, s1 = s', s_{i+1} = -rem(s_{i-1}, s_i).
std::vector<Poly> sturm_chain(const Poly& s) {
  std::vector<Poly> chain{normalize_positive(s)};
  Poly next = normalize_positive(s.derivative());
  while (!next.is_zero()) {
    chain.push_back(next);
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    next = normalize_positive(-divmod(a, b).second);
  }
  return chain;
}

long count_variations(const std::vector<int>& signs) {
  long variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

long variations_at_infinity(const std::vector<Poly>& chain, bool positive) {
  std::vector<int> signs;
  for (const auto& p : chain) {
    const int lead = p.leading().sign();
    const bool odd = (*p.degree() % 2) != 0;
    signs.push_back(positive || !odd ? lead : -lead);
  }
  return count_variations(signs);
}

long variations_at_zero(const std::vector<Poly>& chain) {
  std::vector<int> signs;
  for (const auto& p : chain) signs.push_back(p.coeff(0).sign());
  return count_variations(signs);
}

}  // namespace

Poly phi(const Params& params, long n) {
  require_nonnegative(n, "phi");
  Poly current{1};
  const Poly shift_factor = Poly{params.beta, params.beta_prime} * Poly::x();
  for (long m = 0; m < n; ++m) {
    const Rational mm(m);
    const Poly multiplier{params.alpha * mm + params.gamma,
                          params.alpha_prime * mm + params.beta_prime + params.gamma_prime};
    current = multiplier * current + shift_factor * current.derivative();
  }
  return current;
}

Poly phi_product_form(const Params& params, long n) {
  require_nonnegative(n, "phi_product_form");
  if (!params.beta.is_zero() || !params.beta_prime.is_zero())
    throw PreconditionError("phi_product_form requires beta = beta' = 0");
  Poly out{1};
  for (long j = 0; j < n; ++j) {
    const Rational jj(j);
    out *= Poly{params.alpha * jj + params.gamma, params.alpha_prime * jj + params.gamma_prime};
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

long sturm_distinct_real_roots(const Poly& p) {
  const Poly s = squarefree_part(p);
  if (*s.degree() == 0) return 0;
  const auto chain = sturm_chain(s);
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

RealityCertificate certify_all_real(const Poly& p) {
  const Poly s = squarefree_part(p);
  RealityCertificate cert;
  cert.degree = *p.degree();
  cert.squarefree_degree = *s.degree();
  cert.distinct_real_roots = sturm_distinct_real_roots(s);
  cert.all_real = cert.distinct_real_roots == cert.squarefree_degree;
  return cert;
}

bool negativity_check(const Poly& p) {
  Poly s = squarefree_part(p);
  // A root at 0 is simple in s; strip it so 0 is not a root of the chain head.
  if (s.coeff(0).is_zero()) s = divmod(s, Poly::x()).first;
  if (*s.degree() == 0) return true;
  const auto chain = sturm_chain(s);
  return variations_at_zero(chain) - variations_at_infinity(chain, true) == 0;
}

nlohmann::json to_json(const RealityCertificate& cert) {
  return {{"degree", cert.degree},
          {"squarefree_degree", cert.squarefree_degree},
          {"distinct_real_roots", cert.distinct_real_roots},
          {"all_real", cert.all_real}};
}

}  // namespace gbc
