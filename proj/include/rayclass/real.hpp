#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>

namespace rayclass {

/// Arbitrary-precision real number backed by an MPFR value.
///
/// Every value carries its own mantissa precision. Values created without an
/// explicit precision take the calling thread's working precision (see
/// WorkingPrecision). Binary operations round to the larger operand precision,
/// always with round-to-nearest, so results depend only on operand values and
/// precisions.
class Real {
 public:
  Real();
  Real(int v);     // NOLINT(google-explicit-constructor)
  Real(long v);    // NOLINT(google-explicit-constructor)
  Real(double v);  // NOLINT(google-explicit-constructor)
  Real(long v, mpfr_prec_t bits);
  Real(double v, mpfr_prec_t bits);
  /// Parses a decimal string ("1.5e-3", "-2", ...). Throws std::invalid_argument.
  static Real parse(const std::string& text);
  static Real pi();
  static Real pi(mpfr_prec_t bits);
  /// num / den evaluated at working precision.
  static Real ratio(std::int64_t num, std::int64_t den);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Natural log of |x| as a double, usable where the magnitude underflows a double.
  double log_abs_double() const;
  /// Scientific notation with `digits` significant decimal digits
  /// (0 means enough digits to round-trip the mantissa).
  std::string to_string(int digits = 0) const;

 private:
  struct Uninit {};
  Real(mpfr_prec_t bits, Uninit);
  friend Real make_real_with_precision(mpfr_prec_t bits);
  mpfr_t value_;
};

/// Zero carrying the given precision.
Real make_real_with_precision(mpfr_prec_t bits);

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
void sin_cos(const Real& x, Real& s, Real& c);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real floor(const Real& x);
Real round(const Real& x);
Real hypot(const Real& x, const Real& y);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
/// x * 2^e
Real ldexp(const Real& x, long e);

/// Working precision of the calling thread, in bits.
mpfr_prec_t working_precision();

/// Sets the calling thread's working precision for the guard's lifetime.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(mpfr_prec_t bits);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

 private:
  mpfr_prec_t saved_;
};

}  // namespace rayclass
