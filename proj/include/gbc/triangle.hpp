#pragma once

/**
 * @file triangle.hpp
 * @brief Generalized binomial coefficient triangles {n||k}.
 *
 * A triangle is fixed by six rationals (alpha, beta, gamma, alpha', beta',
 * gamma') and the recurrence
 *
 *   {n+1||k} = (alpha n + beta k + gamma) {n||k}
 *            + (alpha' n + beta' k + gamma') {n||k-1},    {0||k} = [k = 0],
 *
 * with entries outside 0 <= k <= n read as zero. Binomial coefficients,
 * both kinds of Stirling numbers and the Eulerian numbers are special cases
 * (see classical_params()).
 *
 * compute_table() runs each row update as an OpenMP loop over k; the
 * entries of one row are independent given the previous row.
 * compute_table_serial() is the single-threaded reference the parallel
 * kernel is tested and benchmarked against. Both produce identical tables.
 */

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gbc/rational.hpp"

namespace gbc {

struct Params {
  Rational alpha, beta, gamma;
  Rational alpha_prime, beta_prime, gamma_prime;

  /// "a,b,c,a',b',c'" with each component in Rational::parse syntax.
  static Params parse(std::string_view text);
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Params&, const Params&) = default;
};

namespace classical {
Params binomial();          // (0,0,1,0,0,1)
Params stirling_first();    // (1,0,0,0,0,1), unsigned
Params stirling_second();   // (0,1,0,0,0,1)
Params eulerian();          // (0,1,1,1,-1,1): A(n,k) = permutations of n with k descents
}  // namespace classical

class GBCTable {
 public:
  [[nodiscard]] const Params& params() const { return params_; }
  [[nodiscard]] long max_n() const { return static_cast<long>(rows_.size()) - 1; }

  /// Row n holds {n||0}, ..., {n||n}. Throws std::out_of_range past max_n.
  [[nodiscard]] std::span<const Rational> row(long n) const;

  /// {n||k}, zero outside the triangle. Throws std::out_of_range when n > max_n.
  [[nodiscard]] Rational at(long n, long k) const;

  friend bool operator==(const GBCTable&, const GBCTable&) = default;

 private:
  friend GBCTable compute_table(const Params&, long);
  friend GBCTable compute_table_serial(const Params&, long);

  Params params_;
  std::vector<std::vector<Rational>> rows_;
};

/// One recurrence step: fills next[0..n+1] from prev[0..n] (row n -> n+1).
void advance_row(const Params& p, long n, std::span<const Rational> prev, std::span<Rational> next);
void advance_row_serial(const Params& p, long n, std::span<const Rational> prev,
                        std::span<Rational> next);

GBCTable compute_table(const Params& params, long max_n);
GBCTable compute_table_serial(const Params& params, long max_n);

/// {n||k} for a single entry; builds rows 0..n.
Rational entry(const Params& params, long n, long k);

/// rho(n) = sum_k {n||k}. Throws std::out_of_range when n > table.max_n().
Rational row_sum(const GBCTable& table, long n);

/// prod_{j=0}^{n-1} (alpha j + gamma), the k = 0 column.
Rational first_column_product(const Params& params, long n);

/// One line per row, entries comma separated, no header.
std::string to_csv(const GBCTable& table);
/// Array of rows, each an array of rational strings.
nlohmann::json to_json(const GBCTable& table);

}  // namespace gbc
