#include "oracles.hpp"

namespace oracle {

using rayclass::Complex;
using rayclass::Real;

namespace {

Complex cexp_i_pi(const Complex& w) {
  // exp(i pi w)
  const Real pi = Real::pi();
  return rayclass::exp(rayclass::mul_i(w * pi));
}

Complex csin(const Complex& w) {
  const Complex e1 = rayclass::exp(rayclass::mul_i(w));
  const Complex e2 = rayclass::exp(-rayclass::mul_i(w));
  const Complex diff = e1 - e2;
  // (e1 - e2) / (2i) = -i (e1 - e2) / 2
  return -rayclass::mul_i(diff) / Real(2L);
}

bool negligible(const Complex& term, int bits) { return rayclass::abs(term) < rayclass::ldexp(Real(1L), -bits - 20); }

}  // namespace

Complex dedekind_eta_series(const Complex& tau, int bits) {
  rayclass::WorkingPrecision guard(bits);
  Complex sum(Real(0L));
  for (long n = 0;; ++n) {
    bool small = true;
    for (long sgn : {1L, -1L}) {
      if (n == 0 && sgn == -1) continue;
      const long k = sgn * n;
      const long e = (6 * k - 1) * (6 * k - 1);
      // q^(e/24) = exp(i pi tau e / 12)
      Complex term = cexp_i_pi(tau * Real::ratio(e, 12));
      if (k % 2 != 0) term = -term;
      sum += term;
      if (!negligible(term, bits)) small = false;
    }
    if (small && n > 2) break;
  }
  return sum;
}

Complex siegel_from_sigma(std::int64_t n1, std::int64_t n2, std::int64_t den, const Complex& tau, int bits) {
  rayclass::WorkingPrecision guard(bits + 64);
  const Real pi = Real::pi();
  const Complex two_pi_i = rayclass::mul_i(Complex(rayclass::ldexp(pi, 1)));

  // E2 through its Lambert series.
  const Complex q = rayclass::exp(two_pi_i * tau);
  Complex lambert(Real(0L));
  Complex qn = q;
  for (long n = 1;; ++n) {
    const Complex term = qn * Real(n) / (Complex(1) - qn);
    lambert += term;
    if (negligible(term, bits + 64) && n > 2) break;
    qn *= q;
  }
  const Complex e2 = Complex(1) - lambert * Real(24L);
  const Complex eta2 = e2 * (pi * pi / Real(3L));
  const Complex eta1 = tau * eta2 - two_pi_i;

  const Real a1 = Real::ratio(n1, den);
  const Real a2 = Real::ratio(n2, den);
  const Complex z = tau * a1 + Complex(a2);

  Complex theta(Real(0L));
  Complex theta_prime(Real(0L));
  for (long n = 0;; ++n) {
    const Real h = Real::ratio(2 * n + 1, 2);
    Complex nome = cexp_i_pi(tau * (h * h));
    if (n % 2 != 0) nome = -nome;
    const Complex t1 = nome * csin(z * (pi * Real(2 * n + 1)));
    theta += t1;
    theta_prime += nome * Real(2 * n + 1);
    if (negligible(nome, bits + 64) && n > 2) break;
  }
  theta = theta * Real(2L);
  theta_prime = theta_prime * rayclass::ldexp(pi, 1);

  const Complex sigma = rayclass::exp(eta2 * z * z / Real(2L)) * theta / theta_prime;
  const Complex klein = rayclass::exp(-((eta1 * a1 + eta2 * a2) * z) / Real(2L)) * sigma;
  const Complex eta = dedekind_eta_series(tau, bits + 64);
  const Complex g = klein * two_pi_i * eta * eta;
  return g;
}

}  // namespace oracle
