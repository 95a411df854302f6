// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures_4_2.hpp"
#include "gbc/closed_form.hpp"
#include "gbc/qk.hpp"
#include "gbc/row_polynomials.hpp"
#include "gbc/special_numbers.hpp"
#include "gbc/triangle.hpp"
#include "test_support.hpp"

using namespace gbc;
using gbc::testing::RationalGen;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

struct Criterion {
  std::string name;
  double time_limit_s;  // <= 0: no limit stated
  std::function<Outcome()> body;
};

std::string nk(long n, long k) { return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")"; }

Outcome classical_specializations() {
  Outcome o;
  const auto bin = compute_table(classical::binomial(), 15);
  const auto s1 = compute_table(classical::stirling_first(), 15);
  const auto s2 = compute_table(classical::stirling_second(), 15);
  for (long n = 0; n <= 15; ++n)
    for (long k = 0; k <= n; ++k) {
      o.expect(bin.at(n, k) == Rational(binomial(n, k)), "binomial " + nk(n, k));
      o.expect(s1.at(n, k) == Rational(stirling_first_unsigned(n, k)), "Stirling first " + nk(n, k));
      o.expect(s2.at(n, k) == Rational(stirling_second(n, k)), "Stirling second " + nk(n, k));
    }
  return o;
}

Outcome closed_form_equivalence() {
  Outcome o;
  RationalGen gen(20261017);
  long hyper_checks = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Params p = gen.params();
    p.alpha_prime = 0;
    const auto t = compute_table(p, 10);
    const bool hyper_ok = !p.alpha.is_zero() && !p.beta.is_zero() && !p.beta_prime.is_zero();
    for (long n = 0; n <= 10; ++n)
      for (long k = 0; k <= n; ++k) {
        const Rational product = gbc_factored(p, n, k).product;
        o.expect(product == t.at(n, k), "factored vs recurrence at " + p.str() + " " + nk(n, k));
        if (hyper_ok) {
          o.expect(gbc_hyper(p, n, k) == product, "rising-factorial sum at " + p.str() + " " + nk(n, k));
          ++hyper_checks;
        }
      }
  }
  o.expect(hyper_checks > 0, "no tuple exercised the rising-factorial sum");
  return o;
}

Outcome four_two_identities() {
  Outcome o;
  RationalGen gen(42);
  for (int trial = 0; trial < 25; ++trial) {
    Params general = gen.params();
    o.expect(gbc::testing::published_4_2_general(general) == entry(general, 4, 2), "general at " + general.str());
    Params restricted = gen.params();
    restricted.alpha_prime = 0;
    o.expect(gbc::testing::published_4_2_factored(restricted) == entry(restricted, 4, 2),
             "factored at " + restricted.str());
  }
  return o;
}

Outcome real_rootedness() {
  Outcome o;
  RationalGen gen(1729);
  for (int trial = 0; trial < 50; ++trial) {
    const Params p{gen.nonnegative(), gen.nonnegative(), gen.nonnegative(), gen.nonnegative(), 0, gen.nonnegative()};
    for (long n = 0; n <= 10; ++n) {
      const Poly f = phi(p, n);
      if (f.is_zero()) continue;  // identically zero rows carry no zeros to certify
      o.expect(certify_all_real(f).all_real, "not all real: " + p.str() + " n=" + std::to_string(n));
      o.expect(negativity_check(f), "positive zero: " + p.str() + " n=" + std::to_string(n));
    }
  }
  const Poly counter = phi(Params{3, 1, 1, 0, 1, 0}, 3);
  const auto cert = certify_all_real(counter);
  o.expect(!cert.all_real, "counterexample certified all-real");
  o.expect(cert.distinct_real_roots == 1, "counterexample real-root count");
  o.expect(counter == Poly{2} * Poly{1, 1} * Poly{14, 12, 3}, "counterexample factorization");
  return o;
}

Outcome product_formula() {
  Outcome o;
  RationalGen gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Params p{gen.any(), 0, gen.any(), gen.any(), 0, gen.any()};
    for (long n = 0; n <= 12; ++n)
      o.expect(phi_product_form(p, n) == phi(p, n), "product form at " + p.str() + " n=" + std::to_string(n));
  }
  return o;
}

Outcome qk_forms() {
  Outcome o;
  for (long n = 0; n <= 20; ++n)
    for (long k = 0; k <= n + 3; ++k) {
      const QkSpec s{n, k};
      const Poly rec = qk_recurrence(s);
      o.expect(qk_form1(s) == rec && qk_form2(s) == rec && qk_form3(s) == rec, "forms disagree " + nk(n, k));
      if (k >= n) o.expect(rec.is_zero(), "Q_k nonzero for k >= n " + nk(n, k));
    }
  const char* published[] = {"1 - x^5", "1 - 5x^4 + 4x^5", "1 - 10x^3 + 15x^4 - 6x^5",
                             "1 - 10x^2 + 20x^3 - 15x^4 + 4x^5", "1 - 5x + 10x^2 - 10x^3 + 5x^4 - x^5"};
  for (long k = 0; k < 5; ++k)
    o.expect(qk_recurrence({5, k}).str() == published[k], "n=5 list entry k=" + std::to_string(k));
  for (long k = 5; k <= 10; ++k) o.expect(qk_recurrence({5, k}).is_zero(), "n=5 tail k=" + std::to_string(k));
  return o;
}

Outcome density_and_gosper() {
  Outcome o;
  for (long n = 0; n <= 15; ++n)
    for (long k = 0; k <= n; ++k) {
      Poly sum;
      for (long m = k; m < n; ++m) sum += density(m, k);
      o.expect(sum == qk_form3({n, k}), "density partial sum " + nk(n, k));
    }
  for (long k = 0; k <= 10; ++k)
    for (long r = 1; r <= 15; ++r)
      o.expect(gosper_certificate_check(k, r, 15), "Gosper k=" + std::to_string(k) + " r=" + std::to_string(r));
  return o;
}

double relative_error(const BigFloat& approx, const Rational& exact) {
  mpfr_t diff, ref;
  mpfr_init2(diff, 512);
  mpfr_init2(ref, 512);
  mpfr_set_q(ref, exact.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_sub(diff, approx.backend().data(), ref, MPFR_RNDN);
  mpfr_div(diff, diff, ref, MPFR_RNDN);
  const double out = std::abs(mpfr_get_d(diff, MPFR_RNDN));
  mpfr_clear(diff);
  mpfr_clear(ref);
  return out;
}

Outcome row_sums() {
  Outcome o;
  const auto bin = compute_table(classical::binomial(), 10);
  const auto s1 = compute_table(classical::stirling_first(), 10);
  const auto s2 = compute_table(classical::stirling_second(), 10);
  for (long n = 0; n <= 10; ++n) {
    o.expect(row_sum(bin, n) == Rational(2).pow(n), "2^n at n=" + std::to_string(n));
    o.expect(row_sum(s1, n) == Rational(factorial(n)), "n! at n=" + std::to_string(n));
    o.expect(row_sum(s2, n) == Rational(bell(n)), "Bell at n=" + std::to_string(n));
  }
  const Params tuples[] = {
      {1, 1, 1, 0, 1, 1},
      {1, 2, 1, 0, 1, 2},
      {2, 1, 3, 0, 1, 1},
      {Rational::parse("1/2"), 3, Rational::parse("2/3"), 0, Rational::parse("5/4"), Rational::parse("1/3")},
  };
  for (const auto& p : tuples) {
    const auto t = compute_table(p, 6);
    for (long n = 0; n <= 6; ++n) {
      const double err = relative_error(row_sum_series(p, n, 400, 128).value, row_sum(t, n));
      o.expect(err <= 1e-9, "series at " + p.str() + " n=" + std::to_string(n) + " rel err " + std::to_string(err));
    }
  }
  return o;
}

Outcome sturm_oracle() {
  Outcome o;
  RationalGen gen(2718);
  for (int trial = 0; trial < 100; ++trial) {
    Poly p{gen.nonzero()};
    std::vector<Rational> roots;
    const long target = gen.integer(1, 8);
    long degree = 0;
    while (degree < target) {
      if (degree + 2 <= target && gen.coin()) {
        const Rational c = gen.any(), d = gen.positive();
        p *= Poly{c * c + d, Rational(-2) * c, 1};  // discriminant -4d < 0
        degree += 2;
      } else {
        const Rational r = gen.any(5, 3);
        p *= Poly{-r, 1};
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        ++degree;
      }
    }
    o.expect(sturm_distinct_real_roots(p) == static_cast<long>(roots.size()), "count on " + p.str());
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1 classical specializations n<=15", 1.0, classical_specializations},
      {"AC2 closed form == recurrence, 50 tuples, n<=10", 10.0, closed_form_equivalence},
      {"AC3 published {4||2} expansions", 0.0, four_two_identities},
      {"AC4 real zeros for beta'=0, counterexample (3,1,1,0,1,0)", 30.0, real_rootedness},
      {"AC5 beta=beta'=0 product formula", 0.0, product_formula},
      {"AC6 Q_k four-way equality n<=20", 10.0, qk_forms},
      {"AC7 density partial sums and Gosper certificate", 0.0, density_and_gosper},
      {"AC8 row sums exact and series rel err <= 1e-9", 0.0, row_sums},
      {"AC9 Sturm count on 100 constructed polynomials", 0.0, sturm_oracle},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.expect(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s");
    }
    std::printf("[%s] %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.name.c_str(), secs, o.ok ? "" : ": ",
                o.detail.c_str());
    failures += o.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
