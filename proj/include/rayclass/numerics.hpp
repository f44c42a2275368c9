#pragma once

#include <string>
#include <utility>

#include "rayclass/errors.hpp"
#include "rayclass/real.hpp"

namespace rayclass {

/// Working precision plus the absolute error target for final results.
///
/// Invariants: bits >= 64, eps > 0 and eps >= 2^(16 - bits), i.e. at least
/// sixteen guard bits remain below the target.
class PrecisionContext {
 public:
  PrecisionContext(int bits, double eps);

  int bits() const { return bits_; }
  double eps() const { return eps_; }
  Real eps_real() const;

 private:
  int bits_;
  double eps_;
};

/// Complex number with arbitrary-precision parts.
class Complex {
 public:
  Complex() = default;
  Complex(Real re) : re_(std::move(re)), im_(make_real_with_precision(re_.precision())) {}  // NOLINT
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(int re) : Complex(Real(re)) {}  // NOLINT
  Complex(double re, double im) : re_(re), im_(im) {}

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex operator-() const { return {-re_, -im_}; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

 private:
  Real re_;
  Real im_;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& s);
Complex operator*(const Real& s, const Complex& a);
Complex operator/(const Complex& a, const Real& s);

Complex conj(const Complex& z);
/// |z|^2
Real norm(const Complex& z);
Real abs(const Complex& z);
/// Principal argument in (-pi, pi].
Real arg(const Complex& z);
Complex exp(const Complex& z);
/// exp(i * theta)
Complex expi(const Real& theta);
/// Principal logarithm.
Complex log(const Complex& z);
/// z^n for an integer n (binary powering; n < 0 inverts first).
Complex pow(const Complex& z, long n);
Complex sqr(const Complex& z);
/// i * z
Complex mul_i(const Complex& z);

/// a / b, rejecting |b| < eps with ErrorKind::NearZero.
Complex divide(const Complex& a, const Complex& b, const PrecisionContext& ctx);
/// Principal n-th root exp(log(z)/n); rejects |z| < eps with ErrorKind::NearZero.
Complex root(const Complex& z, int n, const PrecisionContext& ctx);

/// Smallest M >= 1 with exp(-2*pi*im_tau*M) < eps * 2^-16.
/// Throws ErrorKind::ImTooSmall when im_tau < 0.1.
int truncation_terms(double im_tau, double eps);

/// Decimal string pair at the values' full precision.
std::pair<std::string, std::string> to_strings(const Complex& z, int digits = 0);

}  // namespace rayclass
