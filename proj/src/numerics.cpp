#include "rayclass/numerics.hpp"

#include <cmath>
#include <sstream>

namespace rayclass {

PrecisionContext::PrecisionContext(int bits, double eps) : bits_(bits), eps_(eps) {
  if (bits < 64) throw Error(ErrorKind::InvalidArgument, "precision must be at least 64 bits");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  if (std::log2(eps) < 16.0 - bits) {
    std::ostringstream msg;
    msg << "eps=" << eps << " leaves fewer than 16 guard bits at " << bits << " bits";
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
}

Real PrecisionContext::eps_real() const { return Real(eps_, static_cast<mpfr_prec_t>(bits_)); }

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) { return *this = *this * o; }
Complex& Complex::operator/=(const Complex& o) { return *this = *this / o; }

Complex operator+(const Complex& a, const Complex& b) { return {a.real() + b.real(), a.imag() + b.imag()}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.real() - b.real(), a.imag() - b.imag()}; }

Complex operator*(const Complex& a, const Complex& b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

Complex operator/(const Complex& a, const Complex& b) {
  const Real d = norm(b);
  return {(a.real() * b.real() + a.imag() * b.imag()) / d, (a.imag() * b.real() - a.real() * b.imag()) / d};
}

Complex operator*(const Complex& a, const Real& s) { return {a.real() * s, a.imag() * s}; }
Complex operator*(const Real& s, const Complex& a) { return a * s; }
Complex operator/(const Complex& a, const Real& s) { return {a.real() / s, a.imag() / s}; }

Complex conj(const Complex& z) { return {z.real(), -z.imag()}; }
Real norm(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }
Real abs(const Complex& z) { return hypot(z.real(), z.imag()); }
Real arg(const Complex& z) { return atan2(z.imag(), z.real()); }

Complex expi(const Real& theta) {
  Real s;
  Real c;
  sin_cos(theta, s, c);
  return {c, s};
}

Complex exp(const Complex& z) {
  Complex w = expi(z.imag());
  return w * exp(z.real());
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex sqr(const Complex& z) {
  return {z.real() * z.real() - z.imag() * z.imag(), ldexp(z.real() * z.imag(), 1)};
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return pow(Complex(Real(1L, z.real().precision())) / z, -n);
  Complex result(Real(1L, z.real().precision()));
  Complex base = z;
  while (n > 0) {
    if ((n & 1) != 0) result *= base;
    n >>= 1;
    if (n > 0) base = sqr(base);
  }
  return result;
}

Complex mul_i(const Complex& z) { return {-z.imag(), z.real()}; }

Complex divide(const Complex& a, const Complex& b, const PrecisionContext& ctx) {
  if (abs(b) < ctx.eps_real()) throw Error(ErrorKind::NearZero, "division by a value below eps");
  return a / b;
}

Complex root(const Complex& z, int n, const PrecisionContext& ctx) {
  if (n <= 0) throw Error(ErrorKind::InvalidArgument, "root order must be positive");
  if (abs(z) < ctx.eps_real()) throw Error(ErrorKind::NearZero, "root of a value below eps");
  const Complex l = log(z);
  return exp(l / Real(static_cast<long>(n), z.real().precision()));
}

int truncation_terms(double im_tau, double eps) {
  if (!(im_tau >= 0.1)) throw Error(ErrorKind::ImTooSmall, "Im(tau) below 0.1");
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  if (std::isinf(im_tau)) return 1;
  const double needed = (-std::log(eps) + 16.0 * std::log(2.0)) / (2.0 * M_PI * im_tau);
  if (needed < 1.0) return 1;
  return static_cast<int>(std::floor(needed)) + 1;
}

std::pair<std::string, std::string> to_strings(const Complex& z, int digits) {
  return {z.real().to_string(digits), z.imag().to_string(digits)};
}

}  // namespace rayclass
