#include "gbc/triangle.hpp"

#include <sstream>
#include <stdexcept>

#include "gbc/error.hpp"

namespace gbc {

namespace {

// Below this row length the OpenMP fork costs more than the row itself.
constexpr long kParallelRowThreshold = 48;

void require_nonnegative(long n, const char* what) {
  if (n < 0) throw PreconditionError(std::string(what) + ": n must be nonnegative");
}

inline Rational step_entry(const Params& p, long n, long k, std::span<const Rational> prev) {
  Rational v = 0;
  if (k <= n) v += (p.alpha * Rational(n) + p.beta * Rational(k) + p.gamma) * prev[k];
  if (k >= 1) v += (p.alpha_prime * Rational(n) + p.beta_prime * Rational(k) + p.gamma_prime) * prev[k - 1];
  return v;
}

void check_row_sizes(long n, std::span<const Rational> prev, std::span<Rational> next) {
  if (static_cast<long>(prev.size()) != n + 1 || static_cast<long>(next.size()) != n + 2)
    throw std::length_error("advance_row: row sizes do not match n");
}

}  // namespace

Params Params::parse(std::string_view text) {
  Params out;
  Rational* fields[] = {&out.alpha,       &out.beta,       &out.gamma,
                        &out.alpha_prime, &out.beta_prime, &out.gamma_prime};
  std::size_t index = 0;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (index >= 6) throw ParseError("expected 6 comma-separated parameters, got more: '" + std::string(text) + "'");
    try {
      *fields[index] = Rational::parse(piece);
    } catch (const ParseError&) {
      throw ParseError("parameter " + std::to_string(index + 1) + " of '" + std::string(text) +
                       "' is not a rational: '" + std::string(piece) + "'");
    }
    ++index;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (index != 6)
    throw ParseError("expected 6 comma-separated parameters, got " + std::to_string(index) + ": '" +
                     std::string(text) + "'");
  return out;
}

std::string Params::str() const {
  return alpha.str() + "," + beta.str() + "," + gamma.str() + "," + alpha_prime.str() + "," +
         beta_prime.str() + "," + gamma_prime.str();
}

namespace classical {
Params binomial() { return {0, 0, 1, 0, 0, 1}; }
Params stirling_first() { return {1, 0, 0, 0, 0, 1}; }
Params stirling_second() { return {0, 1, 0, 0, 0, 1}; }
Params eulerian() { return {0, 1, 1, 1, -1, 1}; }
}  // namespace classical

std::span<const Rational> GBCTable::row(long n) const {
  if (n < 0 || n > max_n()) throw std::out_of_range("row " + std::to_string(n) + " outside table");
  return rows_[static_cast<std::size_t>(n)];
}

Rational GBCTable::at(long n, long k) const {
  const auto r = row(n);
  if (k < 0 || k > n) return 0;
  return r[static_cast<std::size_t>(k)];
}

void advance_row_serial(const Params& p, long n, std::span<const Rational> prev, std::span<Rational> next) {
  check_row_sizes(n, prev, next);
  for (long k = 0; k <= n + 1; ++k) next[k] = step_entry(p, n, k, prev);
}

void advance_row(const Params& p, long n, std::span<const Rational> prev, std::span<Rational> next) {
  check_row_sizes(n, prev, next);
#pragma omp parallel for schedule(dynamic, 8) if (n + 2 >= kParallelRowThreshold)
  for (long k = 0; k <= n + 1; ++k) next[k] = step_entry(p, n, k, prev);
}

GBCTable compute_table(const Params& params, long max_n) {
  require_nonnegative(max_n, "compute_table");
  GBCTable t;
  t.params_ = params;
  t.rows_.reserve(static_cast<std::size_t>(max_n) + 1);
  t.rows_.push_back({Rational(1)});
  for (long n = 0; n < max_n; ++n) {
    std::vector<Rational> next(static_cast<std::size_t>(n) + 2);
    advance_row(params, n, t.rows_.back(), next);
    t.rows_.push_back(std::move(next));
  }
  return t;
}

GBCTable compute_table_serial(const Params& params, long max_n) {
  require_nonnegative(max_n, "compute_table_serial");
  GBCTable t;
  t.params_ = params;
  t.rows_.push_back({Rational(1)});
  for (long n = 0; n < max_n; ++n) {
    std::vector<Rational> next(static_cast<std::size_t>(n) + 2);
    advance_row_serial(params, n, t.rows_.back(), next);
    t.rows_.push_back(std::move(next));
  }
  return t;
}

Rational entry(const Params& params, long n, long k) {
  require_nonnegative(n, "entry");
  if (k < 0 || k > n) return 0;
  return compute_table(params, n).at(n, k);
}

Rational row_sum(const GBCTable& table, long n) {
  Rational sum = 0;
  for (const auto& v : table.row(n)) sum += v;
  return sum;
}

Rational first_column_product(const Params& params, long n) {
  require_nonnegative(n, "first_column_product");
  Rational out = 1;
  for (long j = 0; j < n; ++j) out *= params.alpha * Rational(j) + params.gamma;
  return out;
}

std::string to_csv(const GBCTable& table) {
  std::ostringstream os;
  for (long n = 0; n <= table.max_n(); ++n) {
    const auto r = table.row(n);
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k].str();
    os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const GBCTable& table) {
  auto rows = nlohmann::json::array();
  for (long n = 0; n <= table.max_n(); ++n) {
    auto row = nlohmann::json::array();
    for (const auto& v : table.row(n)) row.push_back(v.str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gbc
