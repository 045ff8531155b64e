#include "permclass/estimates.hpp"

#include <cmath>
#include <algorithm>

#include "permclass/errors.hpp"

namespace permclass {

namespace {

mpfr_prec_t prec_for(int digits) {
  if (digits < 1 || digits > 1000000)
    throw OutOfRange("precision must be between 1 and 1000000 decimal digits");
  return static_cast<mpfr_prec_t>(
             std::ceil(static_cast<double>(digits) * 3.3219280948873626)) +
         32;
}

}  // namespace

Real::Real(int digits) : digits_(digits) {
  mpfr_init2(value_, prec_for(digits));
  mpfr_set_zero(value_, 1);
}

Real::Real(const Real& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::pi(int digits) {
  Real r(digits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::from_long(long v, int digits) {
  Real r(digits);
  mpfr_set_si(r.value_, v, MPFR_RNDN);
  return r;
}

Real Real::from_integer(const mpz_class& v, int digits) {
  Real r(digits);
  mpfr_set_z(r.value_, v.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::from_decimal(const std::string& text, int digits) {
  Real r(digits);
  if (mpfr_set_str(r.value_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw BadEntry("not a decimal number: '" + text + "'");
  return r;
}

double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

mpz_class Real::floor() const {
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDD);
  return out;
}

std::string Real::str(int significant_digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", significant_digits, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real operator+(const Real& a, const Real& b) {
  Real r(std::max(a.digits_, b.digits_));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(std::max(a.digits_, b.digits_));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(std::max(a.digits_, b.digits_));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(std::max(a.digits_, b.digits_));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real sqrt(const Real& a) {
  Real r(a.digits_);
  mpfr_sqrt(r.value_, a.value_, MPFR_RNDN);
  return r;
}

Real exp(const Real& a) {
  Real r(a.digits_);
  mpfr_exp(r.value_, a.value_, MPFR_RNDN);
  return r;
}

Real abs(const Real& a) {
  Real r(a.digits_);
  mpfr_abs(r.value_, a.value_, MPFR_RNDN);
  return r;
}

int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.value_, b.value_); }

namespace {

// exp(sqrt(2/3) pi sqrt(n))
Real growth_term(long n, int digits) {
  const Real two_thirds =
      Real::from_long(2, digits) / Real::from_long(3, digits);
  return exp(sqrt(two_thirds) * Real::pi(digits) *
             sqrt(Real::from_long(n, digits)));
}

Real four_sqrt3(int digits) {
  return Real::from_long(4, digits) * sqrt(Real::from_long(3, digits));
}

mpz_class round_half_up(const Real& x, int digits) {
  return (x + Real::from_decimal("0.5", digits)).floor();
}

}  // namespace

Real hr_estimate(long n, int digits) {
  if (n < 1) throw OutOfRange("hr_estimate requires n >= 1");
  return growth_term(n, digits) /
         (four_sqrt3(digits) * Real::from_long(n, digits));
}

mpz_class modified_estimate_small(long n, int digits) {
  if (n < 3 || n > 80)
    throw OutOfRange("modified_estimate_small accepts 3 <= n <= 80 (the "
                     "piecewise correction is defined only there)");
  const bool odd = n % 2 != 0;
  const Real scale = Real::from_decimal(
      odd ? EstimatorConstants::odd_scale : EstimatorConstants::even_scale,
      digits);
  const Real shift = Real::from_decimal(
      odd ? EstimatorConstants::odd_shift : EstimatorConstants::even_shift,
      digits);
  const Real offset = Real::from_decimal(
      odd ? EstimatorConstants::odd_offset : EstimatorConstants::even_offset,
      digits);
  const Real correction =
      scale * sqrt(Real::from_long(n, digits) + shift) + offset;
  const Real value =
      growth_term(n, digits) /
      (four_sqrt3(digits) * (Real::from_long(n, digits) + correction));
  return round_half_up(value, digits);
}

mpz_class modified_estimate_large(long n, int digits) {
  if (n < 80) throw OutOfRange("modified_estimate_large requires n >= 80");
  const Real a2 = Real::from_decimal(EstimatorConstants::a2, digits);
  const Real b2 = Real::from_decimal(EstimatorConstants::b2, digits);
  const Real c2 = Real::from_decimal(EstimatorConstants::c2, digits);
  const Real correction =
      a2 * sqrt(Real::from_long(n, digits) + c2) + b2;
  const Real value =
      growth_term(n, digits) /
      (four_sqrt3(digits) * (Real::from_long(n, digits) + correction));
  return round_half_up(value, digits);
}

Real relative_error(const mpz_class& estimate, const mpz_class& exact,
                    int digits) {
  return relative_error(Real::from_integer(estimate, digits), exact);
}

Real relative_error(const Real& estimate, const mpz_class& exact) {
  const int digits = estimate.digits();
  const Real exact_r = Real::from_integer(exact, digits);
  return abs(estimate - exact_r) / exact_r;
}

}  // namespace permclass
