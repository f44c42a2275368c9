#include "rayclass/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace rayclass {

namespace {

thread_local mpfr_prec_t t_working_bits = 256;

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

mpfr_prec_t working_precision() { return t_working_bits; }

WorkingPrecision::WorkingPrecision(mpfr_prec_t bits) : saved_(t_working_bits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) throw std::invalid_argument("precision out of range");
  t_working_bits = bits;
}

WorkingPrecision::~WorkingPrecision() { t_working_bits = saved_; }

Real::Real(mpfr_prec_t bits, Uninit) { mpfr_init2(value_, bits); }

Real make_real_with_precision(mpfr_prec_t bits) {
  Real r(bits, Real::Uninit{});
  mpfr_set_zero(r.get(), 1);
  return r;
}

Real::Real() : Real(t_working_bits, Uninit{}) { mpfr_set_zero(value_, 1); }
Real::Real(int v) : Real(t_working_bits, Uninit{}) { mpfr_set_si(value_, v, MPFR_RNDN); }
Real::Real(long v) : Real(t_working_bits, Uninit{}) { mpfr_set_si(value_, v, MPFR_RNDN); }
Real::Real(double v) : Real(t_working_bits, Uninit{}) { mpfr_set_d(value_, v, MPFR_RNDN); }
Real::Real(long v, mpfr_prec_t bits) : Real(bits, Uninit{}) { mpfr_set_si(value_, v, MPFR_RNDN); }
Real::Real(double v, mpfr_prec_t bits) : Real(bits, Uninit{}) { mpfr_set_d(value_, v, MPFR_RNDN); }

Real Real::parse(const std::string& text) {
  Real r;
  char* end = nullptr;
  mpfr_strtofr(r.value_, text.c_str(), &end, 10, MPFR_RNDN);
  if (end == text.c_str() || *end != '\0') throw std::invalid_argument("not a decimal number: '" + text + "'");
  return r;
}

Real Real::pi() { return pi(t_working_bits); }

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits, Uninit{});
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::ratio(std::int64_t num, std::int64_t den) {
  Real r(static_cast<long>(num));
  mpfr_div_si(r.value_, r.value_, static_cast<long>(den), MPFR_RNDN);
  return r;
}

Real::Real(const Real& other) : Real(other.precision(), Uninit{}) { mpfr_set(value_, other.value_, MPFR_RNDN); }

Real::Real(Real&& other) noexcept {
  value_[0] = other.value_[0];
  other.value_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (value_[0]._mpfr_d == nullptr) {
    mpfr_init2(value_, other.precision());
  } else if (precision() != other.precision()) {
    mpfr_set_prec(value_, other.precision());
  }
  mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  std::swap(value_[0], other.value_[0]);
  return *this;
}

Real::~Real() {
  if (value_[0]._mpfr_d != nullptr) mpfr_clear(value_);
}

Real& Real::operator+=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(precision(), Uninit{});
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

double Real::log_abs_double() const {
  if (is_zero()) return -INFINITY;
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, value_, MPFR_RNDN);
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

std::string Real::to_string(int digits) const {
  if (digits <= 0) {
    digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * std::log10(2.0))) + 1;
  }
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

#define RAYCLASS_BINARY(op, fn)                             \
  Real operator op(const Real& a, const Real& b) {          \
    Real r = make_real_with_precision(wider(a, b));         \
    fn(r.get(), a.get(), b.get(), MPFR_RNDN);               \
    return r;                                               \
  }
RAYCLASS_BINARY(+, mpfr_add)
RAYCLASS_BINARY(-, mpfr_sub)
RAYCLASS_BINARY(*, mpfr_mul)
RAYCLASS_BINARY(/, mpfr_div)
#undef RAYCLASS_BINARY

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }

#define RAYCLASS_UNARY(name, fn)                            \
  Real name(const Real& x) {                                \
    Real r = make_real_with_precision(x.precision());       \
    fn(r.get(), x.get(), MPFR_RNDN);                        \
    return r;                                               \
  }
RAYCLASS_UNARY(abs, mpfr_abs)
RAYCLASS_UNARY(sqrt, mpfr_sqrt)
RAYCLASS_UNARY(exp, mpfr_exp)
RAYCLASS_UNARY(log, mpfr_log)
RAYCLASS_UNARY(sin, mpfr_sin)
RAYCLASS_UNARY(cos, mpfr_cos)
#undef RAYCLASS_UNARY

void sin_cos(const Real& x, Real& s, Real& c) {
  s = make_real_with_precision(x.precision());
  c = make_real_with_precision(x.precision());
  mpfr_sin_cos(s.get(), c.get(), x.get(), MPFR_RNDN);
}

Real atan2(const Real& y, const Real& x) {
  Real r = make_real_with_precision(wider(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Real& exponent) {
  Real r = make_real_with_precision(wider(base, exponent));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, long exponent) {
  Real r = make_real_with_precision(base.precision());
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}

Real floor(const Real& x) {
  Real r = make_real_with_precision(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

Real round(const Real& x) {
  Real r = make_real_with_precision(x.precision());
  mpfr_round(r.get(), x.get());
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r = make_real_with_precision(wider(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real ldexp(const Real& x, long e) {
  Real r = make_real_with_precision(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

}  // namespace rayclass
