#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace permclass {

// Arbitrary-precision real backed by MPFR, sized for a requested number of
// significant decimal digits. Binary operations widen to the larger operand
// precision; everything rounds to nearest.
class Real {
 public:
  explicit Real(int digits = 50);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real pi(int digits);
  static Real from_long(long v, int digits);
  static Real from_integer(const mpz_class& v, int digits);
  static Real from_decimal(const std::string& text, int digits);

  int digits() const noexcept { return digits_; }
  double to_double() const;
  mpz_class floor() const;
  std::string str(int significant_digits = 20) const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real sqrt(const Real& a);
  friend Real exp(const Real& a);
  friend Real abs(const Real& a);
  friend int cmp(const Real& a, const Real& b);
  friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }

 private:
  mpfr_t value_;
  int digits_;
};

// The fitted constants of the two modified estimators, kept as decimal
// strings and parsed at the working precision.
struct EstimatorConstants {
  static constexpr const char* odd_scale = "0.4527092482";
  static constexpr const char* odd_shift = "4.35278";
  static constexpr const char* odd_offset = "-0.05498719946";
  static constexpr const char* even_scale = "0.4412187317";
  static constexpr const char* even_shift = "-2.01699";
  static constexpr const char* even_offset = "0.2102618735";
  static constexpr const char* a2 = "0.4432884566";
  static constexpr const char* b2 = "0.1325096085";
  static constexpr const char* c2 = "0.275078";
};

// exp(sqrt(2/3) pi sqrt(n)) / (4 sqrt(3) n); asymptotic, no finite-n bound.
Real hr_estimate(long n, int digits = 50);

// floor(exp(sqrt(2/3) pi sqrt(n)) / (4 sqrt(3) (n + C2(n))) + 1/2) with the
// parity-piecewise correction C2. Domain 3..80; throws OutOfRange outside.
mpz_class modified_estimate_small(long n, int digits = 50);

// Same shape with the correction a2 sqrt(n + c2) + b2. Domain n >= 80.
mpz_class modified_estimate_large(long n, int digits = 50);

// |estimate - exact| / exact.
Real relative_error(const mpz_class& estimate, const mpz_class& exact,
                    int digits = 50);
Real relative_error(const Real& estimate, const mpz_class& exact);

}  // namespace permclass
