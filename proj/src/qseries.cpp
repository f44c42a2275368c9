#include "rayclass/qseries.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace rayclass {

namespace {

Real at_bits(const Real& x, int bits) {
  Real out = make_real_with_precision(bits);
  mpfr_set(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real to_real(const Fraction& f) { return Real::ratio(f.numerator(), f.denominator()); }

// exp(2 pi i * t * tau) for real t.
Complex exp_tau(const Real& t, const Complex& tau) {
  const Real two_pi_t = ldexp(Real::pi(), 1) * t;
  return expi(two_pi_t * tau.real()) * exp(-two_pi_t * tau.imag());
}

Complex one() { return Complex(Real(1L, working_precision())); }

Real sigma_power(long n, long k) {
  Real s(0L, working_precision());
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += pow(Real(d, working_precision()), k);
    if (d * d != n) s += pow(Real(n / d, working_precision()), k);
  }
  return s;
}

std::int64_t ceil_abs(const Fraction& f) {
  const std::int64_t n = f.numerator() < 0 ? -f.numerator() : f.numerator();
  return (n + f.denominator() - 1) / f.denominator();
}

}  // namespace

ModularPoint::ModularPoint(const Complex& tau, const PrecisionContext& ctx)
    : ctx_(ctx), terms_(truncation_terms(tau.imag().to_double(), ctx.eps())) {
  WorkingPrecision guard(ctx.bits());
  tau_ = Complex(at_bits(tau.real(), ctx.bits()), at_bits(tau.imag(), ctx.bits()));
  q_ = exp_tau(Real(1L, ctx.bits()), tau_);
  euler_ = one();
  Complex qn = q_;
  for (int n = 1; n <= terms_; ++n) {
    euler_ *= one() - qn;
    qn *= q_;
  }
}

FractionPair::FractionPair(std::int64_t num1, std::int64_t num2, std::int64_t den)
    : num1_(num1), num2_(num2), den_(den) {
  if (den < 1) throw Error(ErrorKind::InvalidArgument, "denominator must be positive");
  if (num1 % den == 0 && num2 % den == 0) {
    throw Error(ErrorKind::DegenerateIndex, "index pair " + to_string() + " lies in Z^2");
  }
}

FractionPair FractionPair::parse(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::InvalidArgument, "expected 'a/N,b/N', got '" + text + "'");
  auto component = [&](const std::string& part) {
    const auto slash = part.find('/');
    try {
      std::size_t used = 0;
      const std::int64_t num = std::stoll(part.substr(0, slash), &used);
      if (slash == std::string::npos) return Fraction(num);
      const std::int64_t den = std::stoll(part.substr(slash + 1));
      if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + text + "'");
      return Fraction(num, den);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidArgument, "cannot parse index component '" + part + "'");
    }
  };
  const Fraction a = component(text.substr(0, comma));
  const Fraction b = component(text.substr(comma + 1));
  const std::int64_t n = std::lcm(a.denominator(), b.denominator());
  return {a.numerator() * (n / a.denominator()), b.numerator() * (n / b.denominator()), n};
}

FractionPair FractionPair::reduced() const { return {mod_floor(num1_, den_), mod_floor(num2_, den_), den_}; }

FractionPair FractionPair::doubled() const { return {2 * num1_, 2 * num2_, den_}; }

bool FractionPair::is_two_torsion() const { return (2 * num1_) % den_ == 0 && (2 * num2_) % den_ == 0; }

std::string FractionPair::to_string() const {
  std::ostringstream out;
  out << num1_ << "/" << den_ << "," << num2_ << "/" << den_;
  return out.str();
}

Fraction bernoulli2(const Fraction& x) { return x * x - x + Fraction(1, 6); }

Complex eta(const ModularPoint& pt) {
  WorkingPrecision guard(pt.context().bits());
  const Real pi = Real::pi();
  const Complex zeta8 = expi(pi / Real(4L));
  const Complex q24 = exp_tau(Real::ratio(1, 24), pt.tau());
  return zeta8 * q24 * pt.euler_product() * sqrt(ldexp(pi, 1));
}

EisensteinPair eisenstein(const ModularPoint& pt) {
  WorkingPrecision guard(pt.context().bits());
  // The sigma weights grow like n^5, so run past M until the weighted term is negligible.
  const double log_q = -2.0 * M_PI * pt.tau().imag().to_double();
  const double target = std::log(pt.context().eps()) - 16.0 * std::log(2.0);
  Complex s3(Real(0L)), s5(Real(0L));
  Complex qn = pt.q();
  for (long n = 1;; ++n) {
    s3 += qn * sigma_power(n, 3);
    s5 += qn * sigma_power(n, 5);
    const double bound = std::log(504.0) + 6.0 * std::log(static_cast<double>(n)) + n * log_q;
    if (n >= pt.terms() && bound < target) break;
    qn *= pt.q();
  }
  const Real two_pi = ldexp(Real::pi(), 1);
  const Real c2 = pow(two_pi, 4L) / Real(12L);
  const Real c3 = pow(two_pi, 6L) / Real(216L);
  return {(one() + s3 * Real(240L)) * c2, (one() - s5 * Real(504L)) * c3};
}

Complex delta(const ModularPoint& pt) {
  WorkingPrecision guard(pt.context().bits());
  return pt.q() * pow(pt.euler_product(), 24) * pow(ldexp(Real::pi(), 1), 12L);
}

Complex j_invariant(const ModularPoint& pt) {
  WorkingPrecision guard(pt.context().bits());
  const EisensteinPair g = eisenstein(pt);
  return divide(pow(g.g2, 3) * Real(1728L), delta(pt), pt.context());
}

Complex siegel(const FractionPair& r, const ModularPoint& pt) {
  WorkingPrecision guard(pt.context().bits());
  const Fraction r1 = r.first();
  const Fraction r2 = r.second();
  const Real pi = Real::pi();
  const Complex& tau = pt.tau();

  const Complex lead = exp_tau(to_real(bernoulli2(r1) / std::int64_t{2}), tau);
  const Complex phase = expi(pi * to_real(r2 * (r1 - std::int64_t{1})));

  const Real x1 = to_real(r1);
  const Real theta = ldexp(pi, 1) * (x1 * tau.real() + to_real(r2));
  const Real radial = ldexp(pi, 1) * x1 * tau.imag();
  const Complex qz = expi(theta) * exp(-radial);
  const Complex qz_inv = expi(-theta) * exp(radial);

  Complex prod = one() - qz;
  Complex qn = pt.q();
  const std::int64_t terms = pt.terms() + ceil_abs(r1) + 1;
  for (std::int64_t n = 1; n <= terms; ++n) {
    prod *= (one() - qn * qz) * (one() - qn * qz_inv);
    qn *= pt.q();
  }
  return -(lead * phase * prod);
}

Fraction siegel_order(const FractionPair& r) { return bernoulli2(frac_part(r.first())) / std::int64_t{2}; }

Fraction y_cusp_order(const FractionPair& r, const CuspData& cusp) {
  const Fraction second = frac_part(r.second());
  if (frac_part(r.first()).numerator() != 0 || second.numerator() != 1) {
    throw Error(ErrorKind::InvalidArgument, "cusp order formula needs r = (0, 1/N)");
  }
  const std::int64_t n = second.denominator();
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "cusp order formula needs N >= 3");
  const Fraction f = frac_part(Fraction(cusp.transporter.c, n));
  const Fraction w(cusp.width);
  if (f < Fraction(1, 2)) return w * (f - Fraction(1, 4));
  return w * (Fraction(3, 4) - f);
}

Complex weierstrass_p(const Complex& z, const ModularPoint& pt) {
  WorkingPrecision guard(pt.context().bits());
  const Complex& tau = pt.tau();
  const long shift = std::lround(std::floor((z.imag() / tau.imag()).to_double() + 0.5));
  const Complex zr = z - tau * Real(shift);

  const Real tol = sqrt(pt.context().eps_real());
  for (long k = -1; k <= 1; ++k) {
    const Complex w = zr - tau * Real(k);
    const Complex nearest(round(w.real()));
    if (abs(w - nearest) < tol) throw Error(ErrorKind::OnLattice, "argument lies on the period lattice");
  }

  const Complex u = exp_tau(Real(1L), zr);
  const Complex u_inv = exp_tau(Real(-1L), zr);
  auto term = [](const Complex& t) { return t / sqr(one() - t); };

  Complex sum = Complex(Real::ratio(1, 12)) + term(u);
  Complex qn = pt.q();
  for (int n = 1; n <= pt.terms() + 1; ++n) {
    sum += term(qn * u) + term(qn * u_inv) - ldexp(Real(1L), 1) * term(qn);
    qn *= pt.q();
  }
  const Real two_pi = ldexp(Real::pi(), 1);
  return -(sum * (two_pi * two_pi));
}

Complex weierstrass_p(const FractionPair& r, const ModularPoint& pt) {
  WorkingPrecision guard(pt.context().bits());
  const FractionPair red = r.reduced();
  const Complex z = pt.tau() * to_real(red.first()) + Complex(to_real(red.second()));
  return weierstrass_p(z, pt);
}

Complex weierstrass_p_prime(const FractionPair& r, const ModularPoint& pt) {
  WorkingPrecision guard(pt.context().bits());
  if (r.is_two_torsion()) return Complex(Real(0L));
  const Complex g = siegel(r, pt);
  return -divide(siegel(r.doubled(), pt) * pow(eta(pt), 6), pow(g, 4), pt.context());
}

Complex u_function(const ModularPoint& pt) {
  WorkingPrecision guard(pt.context().bits());
  return divide(pow(eisenstein(pt).g2, 3), pow(eta(pt), 24), pt.context());
}

Complex v_function(const ModularPoint& pt) {
  WorkingPrecision guard(pt.context().bits());
  return divide(eisenstein(pt).g3, pow(eta(pt), 12), pt.context());
}

Complex x_function(const FractionPair& r, const ModularPoint& pt) {
  WorkingPrecision guard(pt.context().bits());
  const EisensteinPair g = eisenstein(pt);
  return divide(g.g2 * g.g3 * weierstrass_p(r, pt), delta(pt), pt.context());
}

Complex y_function(const FractionPair& r, const ModularPoint& pt) {
  WorkingPrecision guard(pt.context().bits());
  if (r.is_two_torsion()) {
    throw Error(ErrorKind::DegenerateIndex, "y is undefined at the 2-torsion index " + r.to_string());
  }
  return -divide(siegel(r.doubled(), pt), pow(siegel(r, pt), 4), pt.context());
}

NormalizedValues normalized(const ModularPoint& pt, const FractionPair& r) {
  WorkingPrecision guard(pt.context().bits());
  const EisensteinPair g = eisenstein(pt);
  const Complex e = eta(pt);
  const Complex e12 = pow(e, 12);
  const Complex d = delta(pt);
  const PrecisionContext& ctx = pt.context();
  return {divide(pow(g.g2, 3), sqr(e12), ctx), divide(g.g3, e12, ctx),
          divide(g.g2 * g.g3 * weierstrass_p(r, pt), d, ctx), y_function(r, pt)};
}

}  // namespace rayclass
