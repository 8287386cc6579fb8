#include "stoes/scaled_exp.hpp"

#include <stdexcept>

namespace stoes {

BigRat ScaledExp::as_rational() const {
  if (!is_rational()) {
    throw std::domain_error("value carries e^" + std::to_string(epow_) + " and is not rational");
  }
  return coeff_;
}

ScaledExp& ScaledExp::operator*=(const ScaledExp& rhs) {
  coeff_ *= rhs.coeff_;
  epow_ += rhs.epow_;
  return *this;
}

ScaledExp& ScaledExp::operator/=(const ScaledExp& rhs) {
  if (rhs.is_zero()) throw std::domain_error("ScaledExp division by zero");
  coeff_ /= rhs.coeff_;
  epow_ -= rhs.epow_;
  return *this;
}

ScaledExp& ScaledExp::operator+=(const ScaledExp& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (epow_ != rhs.epow_) {
    throw std::domain_error("cannot add e^" + std::to_string(epow_) + " and e^" + std::to_string(rhs.epow_) +
                            " terms exactly");
  }
  coeff_ += rhs.coeff_;
  return *this;
}

ScaledExp& ScaledExp::operator-=(const ScaledExp& rhs) {
  ScaledExp neg(-rhs.coeff_, rhs.epow_);
  return *this += neg;
}

ScaledExp ScaledExp::pow(std::uint64_t e) const {
  return {rat_pow(coeff_, e), epow_ * static_cast<std::int64_t>(e)};
}

bool operator==(const ScaledExp& lhs, const ScaledExp& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return lhs.is_zero() && rhs.is_zero();
  return lhs.epow_ == rhs.epow_ && lhs.coeff_ == rhs.coeff_;
}

Float ScaledExp::to_float(mpfr_prec_t bits) const {
  Float c(coeff_, bits + 16);
  if (epow_ == 0) return Float(coeff_, bits);
  Float e = exp(Float(static_cast<long>(epow_), bits + 16));
  Float out = Float::zero(bits);
  mpfr_mul(out.raw(), c.raw(), e.raw(), MPFR_RNDN);
  return out;
}

std::string ScaledExp::to_string() const {
  if (epow_ == 0) return coeff_.get_str();
  return "(" + coeff_.get_str() + ")*e^" + std::to_string(epow_);
}

}  // namespace stoes
