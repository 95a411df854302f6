#include <doctest.h>

#include "fixtures_4_2.hpp"
#include "gbc/closed_form.hpp"
#include "gbc/error.hpp"
#include "test_support.hpp"

using namespace gbc;
using gbc::testing::RationalGen;

namespace {

Params with_alpha_prime_zero(RationalGen& gen) {
  Params p = gen.params();
  p.alpha_prime = 0;
  return p;
}

Params hyper_ready(RationalGen& gen) {
  return {gen.nonzero(), gen.nonzero(), gen.any(), 0, gen.nonzero(), gen.any()};
}

double relative_error(const BigFloat& approx, const Rational& exact) {
  BigFloat e;
  e.precision(60);
  mpfr_set_prec(e.backend().data(), 256);
  mpfr_set_q(e.backend().data(), exact.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_sub(e.backend().data(), approx.backend().data(), e.backend().data(), MPFR_RNDN);
  mpfr_abs(e.backend().data(), e.backend().data(), MPFR_RNDN);
  return mpfr_get_d(e.backend().data(), MPFR_RNDN) / std::abs(exact.to_double());
}

}  // namespace

TEST_CASE("factored value examples") {
  const auto v = gbc_factored(classical::binomial(), 4, 2);
  CHECK(v.first_factor == 6);
  CHECK(v.second_factor == 1);
  CHECK(v.product == 6);
  CHECK(to_json(v).dump() == R"({"first":"6","product":"6","second":"1"})");

  RationalGen gen(1);
  for (int trial = 0; trial < 5; ++trial) {
    const Params p = with_alpha_prime_zero(gen);
    for (long n = 0; n <= 6; ++n) {
      const auto z = gbc_factored(p, n, 0);
      CHECK(z.second_factor == 1);
      CHECK(z.product == first_column_product(p, n));
    }
  }
}

TEST_CASE("factored value equals the recurrence") {
  RationalGen gen(42);
  for (int trial = 0; trial < 10; ++trial) {
    const Params p = with_alpha_prime_zero(gen);
    const auto t = compute_table(p, 10);
    for (long n = 0; n <= 10; ++n)
      for (long k = -1; k <= n + 1; ++k) {
        const auto v = gbc_factored(p, n, k);
        CHECK(v.product == v.first_factor * v.second_factor);
        CHECK(v.product == t.at(n, k));
      }
  }
}

TEST_CASE("factored value guards alpha'") {
  Params p = classical::binomial();
  p.alpha_prime = 1;
  CHECK_THROWS_AS(gbc_factored(p, 3, 1), PreconditionError);
  CHECK_THROWS_AS(gbc_hyper(p, 3, 1), PreconditionError);
  CHECK_THROWS_AS(expanded_sum(p, 3, 1), PreconditionError);
}

TEST_CASE("second factor recursion") {
  RationalGen gen(8);
  const Params p = with_alpha_prime_zero(gen);
  for (long k = 1; k <= 12; ++k)
    CHECK(gbc_factored(p, 12, k).second_factor ==
          gbc_factored(p, 12, k - 1).second_factor * (p.gamma_prime + Rational(k) * p.beta_prime));
}

TEST_CASE("rising-factorial sum") {
  const Params p{1, 1, 1, 0, 1, 1};
  CHECK(gbc_hyper(p, 2, 1) == entry(p, 2, 1));
  CHECK(gbc_hyper(p, 0, 0) == 1);

  RationalGen gen(314);
  for (int trial = 0; trial < 10; ++trial) {
    const Params q = hyper_ready(gen);
    for (long n = 0; n <= 8; ++n)
      for (long k = 0; k <= n; ++k) CHECK(gbc_hyper(q, n, k) == gbc_factored(q, n, k).product);
  }
}

TEST_CASE("rising-factorial sum rejects zero divisors") {
  CHECK_THROWS_AS(gbc_hyper(classical::binomial(), 4, 2), DegenerateParameterError);
  CHECK_THROWS_AS(gbc_hyper(Params{1, 0, 1, 0, 1, 1}, 4, 2), DegenerateParameterError);
  CHECK_THROWS_AS(gbc_hyper(Params{1, 1, 1, 0, 0, 1}, 4, 2), DegenerateParameterError);
}

TEST_CASE("expanded sum") {
  CHECK(expanded_sum(classical::binomial(), 4, 2) == 6);
  CHECK_THROWS_AS(expanded_coefficient(classical::binomial(), 4, 2, 1, 0, 0, 1, 1), PreconditionError);
  CHECK_THROWS_AS(expanded_coefficient(classical::binomial(), 4, 2, 1, 1, 0, 2, 1), PreconditionError);

  RationalGen gen(55);
  for (int trial = 0; trial < 5; ++trial) {
    const Params p = with_alpha_prime_zero(gen);
    const auto t = compute_table(p, 8);
    for (long n = 0; n <= 8; ++n)
      for (long k = 0; k <= n; ++k) CHECK(expanded_sum(p, n, k) == t.at(n, k));
  }
}

TEST_CASE("published {4||2} expansions match the recurrence") {
  RationalGen gen(4242);
  for (int trial = 0; trial < 20; ++trial) {
    const Params general = gen.params();
    CHECK(gbc::testing::published_4_2_general(general) == entry(general, 4, 2));
    const Params restricted = with_alpha_prime_zero(gen);
    CHECK(gbc::testing::published_4_2_factored(restricted) == entry(restricted, 4, 2));
    CHECK(gbc::testing::published_4_2_factored(restricted) == gbc_factored(restricted, 4, 2).product);
  }
}

TEST_CASE("row-sum series") {
  const Params p{1, 1, 1, 0, 1, 1};
  const auto t = compute_table(p, 3);
  const auto est = row_sum_series(p, 3, 200, 128);
  CHECK(relative_error(est.value, row_sum(t, 3)) <= 1e-9);
  CHECK(est.truncation_j == 200);
  CHECK(est.precision_bits == 128);

  CHECK(relative_error(row_sum_series(p, 0, 200, 128).value, 1) <= 1e-9);

  const Params q{1, 2, 1, 0, 1, 2};
  CHECK(relative_error(row_sum_series(q, 4, 400, 128).value, row_sum(compute_table(q, 4), 4)) <= 1e-9);
}

TEST_CASE("row-sum series residual reports slow convergence") {
  const Params p{1, 1, 1, 0, 1, 1};
  const auto short_run = row_sum_series(p, 3, 5, 128);
  const auto long_run = row_sum_series(p, 3, 200, 128);
  CHECK(short_run.residual_ratio > long_run.residual_ratio);
  CHECK(long_run.residual_ratio < 1e-40);
}

TEST_CASE("row-sum series preconditions") {
  CHECK_THROWS_AS(row_sum_series(Params{0, 1, 1, 0, 1, 1}, 3, 10, 128), DegenerateParameterError);
  CHECK_THROWS_AS(row_sum_series(Params{1, 0, 1, 0, 1, 1}, 3, 10, 128), DegenerateParameterError);
  CHECK_THROWS_AS(row_sum_series(Params{1, 1, 1, 0, 0, 1}, 3, 10, 128), DegenerateParameterError);
  CHECK_THROWS_AS(row_sum_series(Params{1, -1, 1, 0, 1, 1}, 3, 10, 128), PreconditionError);
  CHECK_THROWS_AS(row_sum_series(Params{1, 1, 1, 1, 1, 1}, 3, 10, 128), PreconditionError);
  CHECK_THROWS_AS(row_sum_series(Params{1, 1, 1, 0, 1, 1}, 3, 0, 128), PreconditionError);
}
