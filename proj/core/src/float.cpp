#include "stoes/float.hpp"

#include <algorithm>
#include <vector>

namespace stoes {

namespace {
constexpr mpfr_rnd_t kRound = MPFR_RNDN;

mpfr_prec_t wider(const Float& a, const Float& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

Float::Float() : Float(WithPrecision{}, kDefaultBits) {}

Float::Float(WithPrecision, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Float Float::zero(mpfr_prec_t bits) { return Float(WithPrecision{}, bits); }

Float::Float(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, kRound);
}

Float::Float(double value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, kRound);
}

Float::Float(const BigInt& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), kRound);
}

Float::Float(const BigRat& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

Float::Float(const Float& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, kRound);
}

Float::Float(Float&& other) noexcept {
  // MPFR has no move; swap into a fresh minimal-precision value.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Float& Float::operator=(const Float& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

Float& Float::operator=(Float&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Float::~Float() { mpfr_clear(value_); }

Float& Float::operator+=(const Float& rhs) {
  Float out = zero(wider(*this, rhs));
  mpfr_add(out.value_, value_, rhs.value_, kRound);
  return *this = std::move(out);
}

Float& Float::operator-=(const Float& rhs) {
  Float out = zero(wider(*this, rhs));
  mpfr_sub(out.value_, value_, rhs.value_, kRound);
  return *this = std::move(out);
}

Float& Float::operator*=(const Float& rhs) {
  Float out = zero(wider(*this, rhs));
  mpfr_mul(out.value_, value_, rhs.value_, kRound);
  return *this = std::move(out);
}

Float& Float::operator/=(const Float& rhs) {
  Float out = zero(wider(*this, rhs));
  mpfr_div(out.value_, value_, rhs.value_, kRound);
  return *this = std::move(out);
}

Float Float::operator-() const {
  Float out = zero(precision());
  mpfr_neg(out.value_, value_, kRound);
  return out;
}

std::partial_ordering operator<=>(const Float& lhs, const Float& rhs) {
  if (mpfr_unordered_p(lhs.value_, rhs.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Float exp(const Float& x) {
  Float out = Float::zero(x.precision());
  mpfr_exp(out.value_, x.value_, kRound);
  return out;
}

Float log(const Float& x) {
  Float out = Float::zero(x.precision());
  mpfr_log(out.value_, x.value_, kRound);
  return out;
}

Float sqrt(const Float& x) {
  Float out = Float::zero(x.precision());
  mpfr_sqrt(out.value_, x.value_, kRound);
  return out;
}

Float abs(const Float& x) {
  Float out = Float::zero(x.precision());
  mpfr_abs(out.value_, x.value_, kRound);
  return out;
}

double Float::to_double() const { return mpfr_get_d(value_, kRound); }

long double Float::to_long_double() const { return mpfr_get_ld(value_, kRound); }

std::string Float::to_fixed(int places) const {
  const int len = mpfr_snprintf(nullptr, 0, "%.*RNf", places, value_);
  std::vector<char> buf(static_cast<std::size_t>(len) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*RNf", places, value_);
  std::string out(buf.data(), static_cast<std::size_t>(len));
  if (out.starts_with('-') && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string Float::to_string(int digits) const {
  const int len = mpfr_snprintf(nullptr, 0, "%.*RNg", digits, value_);
  std::vector<char> buf(static_cast<std::size_t>(len) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*RNg", digits, value_);
  return {buf.data(), static_cast<std::size_t>(len)};
}

}  // namespace stoes
