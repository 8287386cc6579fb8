#include "stoes/exact.hpp"

#include <stdexcept>

namespace stoes {

BigInt falling_factorial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  BigInt out = 1;
  for (std::uint64_t i = 0; i < r; ++i) out *= static_cast<unsigned long>(n - i);
  return out;
}

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt derangement_number(std::uint64_t n) {
  if (n == 0) return 1;
  BigInt prev2 = 1;  // D_0
  BigInt prev1 = 0;  // D_1
  for (std::uint64_t m = 2; m <= n; ++m) {
    BigInt next = (prev1 + prev2) * static_cast<unsigned long>(m - 1);
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

std::vector<BigInt> derangement_numbers(std::uint64_t n) {
  std::vector<BigInt> d(n + 1);
  d[0] = 1;
  if (n >= 1) d[1] = 0;
  for (std::uint64_t m = 2; m <= n; ++m) d[m] = (d[m - 1] + d[m - 2]) * static_cast<unsigned long>(m - 1);
  return d;
}

BigRat poisson_partial_sum(std::uint64_t j, std::int64_t k) {
  if (k < 0) return 0;
  const auto top = static_cast<std::uint64_t>(k);
  // Over the common denominator k!: sum_i j^i * (k!/i!).
  const BigInt jj = static_cast<unsigned long>(j);
  BigInt power = 1;
  BigInt tail = factorial(top);
  BigInt sum = 0;
  for (std::uint64_t i = 0; i <= top; ++i) {
    sum += power * tail;
    power *= jj;
    if (i < top) mpz_divexact_ui(tail.get_mpz_t(), tail.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return make_rat(sum, factorial(top));
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt multinomial(std::int64_t n, std::int64_t i, std::int64_t j) {
  if (n < 0 || i < 0 || j < 0 || i + j > n) return 0;
  return binomial(n, i) * binomial(n - i, j);
}

BigInt int_pow(const BigInt& base, std::uint64_t e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

BigRat rat_pow(const BigRat& base, std::uint64_t e) {
  BigRat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  // Powers of a canonical fraction stay coprime; sign lives in the numerator.
  return out;
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRat out(num, den);
  out.canonicalize();
  return out;
}

BigRat round_half_even(const BigRat& value, int places) {
  if (places < 0) throw std::invalid_argument("negative decimal places");
  const BigInt scale = int_pow(BigInt(10), static_cast<std::uint64_t>(places));
  const BigRat scaled = value * BigRat(scale);
  BigInt q;
  BigInt r;
  // floor division so the remainder is non-negative
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const BigInt twice = 2 * r;
  const int cmp_half = cmp(twice, scaled.get_den());
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  return make_rat(q, scale);
}

std::string to_fixed(const BigRat& value, int places) {
  const BigRat rounded = round_half_even(value, places);
  const BigInt scale = int_pow(BigInt(10), static_cast<std::uint64_t>(places));
  BigInt units = rounded.get_num() * (scale / rounded.get_den());
  const bool negative = units < 0;
  if (negative) units = -units;
  std::string digits = units.get_str();
  if (digits.size() <= static_cast<std::size_t>(places)) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = negative ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) {
    out += '.';
    out += digits.substr(digits.size() - places);
  }
  return out;
}

}  // namespace stoes
