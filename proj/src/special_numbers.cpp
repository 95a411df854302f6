#include "gbc/special_numbers.hpp"

#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "gbc/error.hpp"

namespace gbc {

namespace {

void require_nonnegative(long n, const char* what) {
  if (n < 0) throw PreconditionError(std::string(what) + ": n must be nonnegative");
}

// Rows of a triangle T(n, k), 0 <= k <= n, grown on demand by a two-term
// recurrence T(n+1, k) = weight(n, k) T(n, k) + T(n, k-1).
class MemoTriangle {
 public:
  using Weight = std::function<BigInt(long n, long k)>;

  explicit MemoTriangle(Weight weight) : weight_(std::move(weight)) { rows_.push_back({BigInt(1)}); }

  BigInt get(long n, long k) {
    if (k < 0 || k > n) return 0;
    std::lock_guard lock(mutex_);
    while (static_cast<long>(rows_.size()) <= n) {
      const long m = static_cast<long>(rows_.size()) - 1;
      const auto& prev = rows_.back();
      std::vector<BigInt> next(m + 2);
      for (long j = 0; j <= m + 1; ++j) {
        BigInt v = 0;
        if (j <= m) v += weight_(m, j) * prev[j];
        if (j >= 1) v += prev[j - 1];
        next[j] = v;
      }
      rows_.push_back(std::move(next));
    }
    return rows_[n][k];
  }

 private:
  Weight weight_;
  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

MemoTriangle& first_kind_table() {
  static MemoTriangle table([](long n, long) { return BigInt(n); });
  return table;
}

MemoTriangle& second_kind_table() {
  static MemoTriangle table([](long, long k) { return BigInt(k); });
  return table;
}

}  // namespace

BigInt binomial(long n, long k) {
  require_nonnegative(n, "binomial");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(long n) {
  require_nonnegative(n, "factorial");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Rational rising_factorial(const Rational& x, long n) {
  require_nonnegative(n, "rising_factorial");
  Rational out = 1;
  for (long i = 0; i < n; ++i) out *= x + Rational(i);
  return out;
}

BigInt stirling_first_unsigned(long n, long k) {
  require_nonnegative(n, "stirling_first_unsigned");
  return first_kind_table().get(n, k);
}

BigInt stirling_second(long n, long k) {
  require_nonnegative(n, "stirling_second");
  return second_kind_table().get(n, k);
}

BigInt bell(long n) {
  require_nonnegative(n, "bell");
  BigInt sum = 0;
  for (long k = 0; k <= n; ++k) sum += stirling_second(n, k);
  return sum;
}

}  // namespace gbc
