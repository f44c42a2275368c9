#include "rayclass/classfield.hpp"

#include <numeric>
#include <sstream>

namespace rayclass {

namespace {

bool squarefree(std::int64_t n) {
  n = n < 0 ? -n : n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

std::int64_t powmod(std::int64_t base, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  base = mod_floor(base, m);
  while (e > 0) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return r;
}

// x = r1 mod m1, x = r2 mod m2 with gcd(m1, m2) = 1.
std::int64_t crt_pair(std::int64_t r1, std::int64_t m1, std::int64_t r2, std::int64_t m2) {
  const std::int64_t inv = *inverse_mod(m1, m2);
  const std::int64_t k = mod_floor((r2 - r1) % m2 * inv, m2);
  return mod_floor(r1 + m1 * k, m1 * m2);
}

}  // namespace

std::string QuadIrrational::to_string() const {
  std::ostringstream out;
  out << "(" << p << "+sqrt(" << d << "))/" << q;
  return out.str();
}

Complex QuadIrrational::to_complex() const {
  const Real den(static_cast<long>(q));
  return {Real(static_cast<long>(p)) / den, sqrt(Real(static_cast<long>(-d))) / den};
}

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  const std::int64_t r = mod_floor(d, 4);
  if (r == 1) return squarefree(d);
  if (r != 0) return false;
  const std::int64_t m = mod_floor(d / 4, 4);
  return (m == 2 || m == 3) && squarefree(d / 4);
}

std::vector<ReducedForm> reduced_forms(std::int64_t d) {
  std::vector<ReducedForm> out;
  for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (mod_floor(b - d, 2) != 0) continue;
      const std::int64_t num = b * b - d;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

Field make_field(std::int64_t d) {
  if (d >= 0) throw Error(ErrorKind::NotImaginary, "discriminant must be negative");
  if (!is_fundamental_discriminant(d)) {
    throw Error(ErrorKind::NotFundamental, std::to_string(d) + " is not a fundamental discriminant");
  }
  Field f;
  f.d = d;
  if (mod_floor(d, 4) == 0) {
    f.B = 0;
    f.C = -d / 4;
    f.theta = {0, d, 2};
  } else {
    f.B = 1;
    f.C = (1 - d) / 4;
    f.theta = {-1, d, 2};
  }
  f.forms = reduced_forms(d);
  f.h = static_cast<std::int64_t>(f.forms.size());
  return f;
}

QuadIrrational cm_point(const ReducedForm& form, std::int64_t d) { return {-form.b, d, 2 * form.a}; }

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

int valuation(std::int64_t n, std::int64_t p) {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Matrix2 beta_prime(const ReducedForm& form, std::int64_t d, std::int64_t p) {
  const std::int64_t a = form.a, b = form.b, c = form.c;
  const bool p_divides_a = a % p == 0;
  const bool p_divides_c = c % p == 0;
  if (mod_floor(d, 4) == 0) {
    if (!p_divides_a) return {a, b / 2, 0, 1};
    if (!p_divides_c) return {-b / 2, -c, 1, 0};
    return {-b / 2 - a, -b / 2 - c, 1, -1};
  }
  if (!p_divides_a) return {a, (b - 1) / 2, 0, 1};
  if (!p_divides_c) return {(-b - 1) / 2, -c, 1, 0};
  return {(-b - 1) / 2 - a, (1 - b) / 2 - c, 1, -1};
}

std::map<std::int64_t, Matrix2> beta_matrices(const ReducedForm& form, std::int64_t d,
                                              const std::vector<std::int64_t>& primes) {
  std::map<std::int64_t, Matrix2> out;
  for (std::int64_t p : primes) out[p] = beta_prime(form, d, p);
  return out;
}

Matrix2 beta_lift(const ReducedForm& form, std::int64_t d, std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  Matrix2 acc{0, 0, 0, 0};
  std::int64_t modulus = 1;
  for (std::int64_t p : prime_factors(n)) {
    const std::int64_t pe = ipow(p, valuation(n, p));
    const Matrix2 local = reduce_mod(beta_prime(form, d, p), pe);
    acc = {crt_pair(acc.a, modulus, local.a, pe), crt_pair(acc.b, modulus, local.b, pe),
           crt_pair(acc.c, modulus, local.c, pe), crt_pair(acc.d, modulus, local.d, pe)};
    modulus *= pe;
  }
  acc = reduce_mod(acc, n);
  if (!inverse_mod(acc.det(), n)) {
    throw Error(ErrorKind::NonInvertible, "lifted matrix " + to_string(acc) + " is not invertible mod " + std::to_string(n));
  }
  return acc;
}

const char* to_string(Splitting s) {
  switch (s) {
    case Splitting::Split: return "split";
    case Splitting::Inert: return "inert";
    case Splitting::Ramified: return "ramified";
  }
  return "unknown";
}

int kronecker(std::int64_t d, std::int64_t p) {
  if (p == 2) {
    if (d % 2 == 0) return 0;
    const std::int64_t r = mod_floor(d, 8);
    return (r == 1 || r == 7) ? 1 : -1;
  }
  const std::int64_t r = mod_floor(d, p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

Splitting splitting(std::int64_t p, std::int64_t d) {
  const int k = kronecker(d, p);
  if (k == 0) return Splitting::Ramified;
  return k == 1 ? Splitting::Split : Splitting::Inert;
}

std::vector<IdealFactor> factor_ideal(std::int64_t d, std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "level must be positive");
  std::vector<IdealFactor> out;
  for (std::int64_t p : prime_factors(n)) {
    const int k = valuation(n, p);
    switch (splitting(p, d)) {
      case Splitting::Split:
        out.push_back({p, Splitting::Split, k, p, 0});
        out.push_back({p, Splitting::Split, k, p, 1});
        break;
      case Splitting::Inert: out.push_back({p, Splitting::Inert, k, p * p, 0}); break;
      case Splitting::Ramified: out.push_back({p, Splitting::Ramified, 2 * k, p, 0}); break;
    }
  }
  return out;
}

std::int64_t ideal_phi(const IdealFactor& f) { return (f.norm - 1) * ipow(f.norm, f.e - 1); }

std::int64_t ray_class_degree(const Field& field, const std::vector<IdealFactor>& factors) {
  if (field.d > -7) throw Error(ErrorKind::UnsupportedDiscriminant, "degree formula needs d <= -7");
  std::int64_t phi = 1;
  // -1 = 1 mod f exactly when f divides 2 O_K.
  bool divides_two = true;
  for (const IdealFactor& f : factors) {
    phi *= ideal_phi(f);
    const int two_exponent = f.splitting == Splitting::Ramified ? 2 : 1;
    if (f.p != 2 || f.e > two_exponent) divides_two = false;
  }
  const std::int64_t w = divides_two ? 2 : 1;
  return field.h * phi * w / 2;
}

std::int64_t ray_class_degree(const Field& field, std::int64_t n) {
  if (field.d > -7) throw Error(ErrorKind::UnsupportedDiscriminant, "degree formula needs d <= -7");
  return ray_class_degree(field, factor_ideal(field.d, n));
}

HypothesisReport check_hypothesis(const Field& field, std::int64_t n) {
  HypothesisReport report;
  const std::vector<IdealFactor> factors = factor_ideal(field.d, n);
  report.degree = ray_class_degree(field, factors);
  if (factors.empty()) return report;  // f = O_K is excluded
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    std::vector<IdealFactor> rest;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (j != k) rest.push_back(factors[j]);
    }
    const std::int64_t deg = ray_class_degree(field, rest);
    const std::int64_t phi = ideal_phi(factors[k]);
    report.terms.push_back({factors[k], phi, deg});
    sum += deg;
    report.reciprocal_sum += Fraction(1, phi);
  }
  report.bound = 2 * sum;
  report.holds = report.degree > report.bound;
  if (factors.size() >= 2) report.reciprocal_test = Fraction(1, 2) > report.reciprocal_sum;
  return report;
}

}  // namespace rayclass
