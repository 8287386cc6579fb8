#pragma once

#include <cstdint>
#include <string>

#include "stoes/exact.hpp"
#include "stoes/float.hpp"

namespace stoes {

/// Exact value coeff * e^epow. Products are always exact; sums are exact only
/// when both sides carry the same power of e (or one side is zero).
class ScaledExp {
 public:
  ScaledExp() = default;
  ScaledExp(BigRat coeff, std::int64_t epow) : coeff_(std::move(coeff)), epow_(epow) {}

  static ScaledExp rational(BigRat value) { return {std::move(value), 0}; }
  static ScaledExp e_power(std::int64_t epow) { return {BigRat(1), epow}; }

  const BigRat& coeff() const { return coeff_; }
  std::int64_t epow() const { return epow_; }

  bool is_zero() const { return coeff_ == 0; }
  /// True when the value is a plain rational (zero, or no e factor).
  bool is_rational() const { return epow_ == 0 || is_zero(); }

  /// The rational value; throws std::domain_error if an e factor remains.
  BigRat as_rational() const;

  ScaledExp& operator*=(const ScaledExp& rhs);
  ScaledExp& operator/=(const ScaledExp& rhs);
  /// Throws std::domain_error when the e-powers differ and neither side is zero.
  ScaledExp& operator+=(const ScaledExp& rhs);
  ScaledExp& operator-=(const ScaledExp& rhs);

  friend ScaledExp operator*(ScaledExp lhs, const ScaledExp& rhs) { return lhs *= rhs; }
  friend ScaledExp operator/(ScaledExp lhs, const ScaledExp& rhs) { return lhs /= rhs; }
  friend ScaledExp operator+(ScaledExp lhs, const ScaledExp& rhs) { return lhs += rhs; }
  friend ScaledExp operator-(ScaledExp lhs, const ScaledExp& rhs) { return lhs -= rhs; }

  ScaledExp pow(std::uint64_t e) const;

  /// Value equality: zero compares equal regardless of e-power.
  friend bool operator==(const ScaledExp& lhs, const ScaledExp& rhs);

  Float to_float(mpfr_prec_t bits = Float::kDefaultBits) const;
  double to_double() const { return to_float().to_double(); }

  std::string to_string() const;

 private:
  BigRat coeff_{0};
  std::int64_t epow_ = 0;
};

}  // namespace stoes
