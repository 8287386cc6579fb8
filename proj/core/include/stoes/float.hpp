#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "stoes/exact.hpp"

namespace stoes {

/// MPFR-backed float with per-value working precision. Conversions from
/// BigInt/BigRat round to nearest at the target precision; binary operations
/// take the larger of the two operand precisions.
class Float {
 public:
  static constexpr mpfr_prec_t kDefaultBits = 128;

  Float();
  Float(long value, mpfr_prec_t bits = kDefaultBits);  // NOLINT(google-explicit-constructor)
  Float(int value, mpfr_prec_t bits = kDefaultBits) : Float(static_cast<long>(value), bits) {}  // NOLINT
  explicit Float(double value, mpfr_prec_t bits = kDefaultBits);
  explicit Float(const BigInt& value, mpfr_prec_t bits = kDefaultBits);
  explicit Float(const BigRat& value, mpfr_prec_t bits = kDefaultBits);

  Float(const Float& other);
  Float(Float&& other) noexcept;
  Float& operator=(const Float& other);
  Float& operator=(Float&& other) noexcept;
  ~Float();

  static Float zero(mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  Float& operator+=(const Float& rhs);
  Float& operator-=(const Float& rhs);
  Float& operator*=(const Float& rhs);
  Float& operator/=(const Float& rhs);

  friend Float operator+(Float lhs, const Float& rhs) { return lhs += rhs; }
  friend Float operator-(Float lhs, const Float& rhs) { return lhs -= rhs; }
  friend Float operator*(Float lhs, const Float& rhs) { return lhs *= rhs; }
  friend Float operator/(Float lhs, const Float& rhs) { return lhs /= rhs; }
  Float operator-() const;

  friend std::partial_ordering operator<=>(const Float& lhs, const Float& rhs);
  friend bool operator==(const Float& lhs, const Float& rhs) { return (lhs <=> rhs) == 0; }

  friend Float exp(const Float& x);
  friend Float log(const Float& x);
  friend Float sqrt(const Float& x);
  friend Float abs(const Float& x);

  double to_double() const;
  long double to_long_double() const;

  /// Fixed-point decimal string, rounded to nearest-even on the binary value.
  std::string to_fixed(int places) const;
  /// Shortest-ish decimal with `digits` significant digits.
  std::string to_string(int digits = 30) const;

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

 private:
  struct WithPrecision {};
  Float(WithPrecision, mpfr_prec_t bits);

  mpfr_t value_;
};

}  // namespace stoes
