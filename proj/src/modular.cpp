#include "rayclass/modular.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace rayclass {

Fraction frac_part(const Fraction& x) {
  const std::int64_t n = x.numerator();
  const std::int64_t d = x.denominator();
  return Fraction(mod_floor(n, d), d);
}

std::int64_t mod_floor(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t n) {
  if (n == 1) return 0;
  const ExtendedGcd e = extended_gcd(mod_floor(a, n), n);
  if (e.g != 1) return std::nullopt;
  return mod_floor(e.x, n);
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Matrix2 reduce_mod(const Matrix2& m, std::int64_t n) {
  return {mod_floor(m.a, n), mod_floor(m.b, n), mod_floor(m.c, n), mod_floor(m.d, n)};
}

Matrix2 mul_mod(const Matrix2& x, const Matrix2& y, std::int64_t n) {
  return reduce_mod(reduce_mod(x, n) * reduce_mod(y, n), n);
}

std::string to_string(const Matrix2& m) {
  std::ostringstream out;
  out << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
  return out.str();
}

Matrix2 lift_to_sl2(const Matrix2& m, std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  const Matrix2 r = reduce_mod(m, n);
  if (mod_floor(r.det(), n) != mod_floor(1, n)) {
    throw Error(ErrorKind::NonInvertible, "matrix " + to_string(m) + " has determinant != 1 mod n");
  }
  if (n == 1) return Matrix2::identity();
  std::int64_t c = r.c == 0 ? n : r.c;
  std::int64_t d = r.d;
  // gcd(c, d, n) = 1, so some shift of d by multiples of n is coprime to c.
  bool found = false;
  for (std::int64_t t = 0; t <= c; ++t) {
    if (std::gcd(c, d + t * n) == 1) {
      d += t * n;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorKind::NonInvertible, "no coprime lift of the bottom row");
  const ExtendedGcd e = extended_gcd(d, c);  // d*x + c*y = 1
  const std::int64_t a0 = e.x;
  const std::int64_t b0 = -e.y;
  for (std::int64_t k = 0; k < n; ++k) {
    const std::int64_t a = a0 + k * c;
    const std::int64_t b = b0 + k * d;
    if (mod_floor(a - r.a, n) == 0 && mod_floor(b - r.b, n) == 0) return {a, b, c, d};
  }
  throw Error(ErrorKind::NonInvertible, "no SL2(Z) lift found");
}

int siegel_multiplier_exponent(const Matrix2& gamma) {
  if (gamma.det() != 1) throw Error(ErrorKind::InvalidArgument, "multiplier needs a matrix in SL2(Z)");
  std::int64_t a = gamma.a, b = gamma.b, c = gamma.c, d = gamma.d;
  std::int64_t e = 0;
  while (c != 0) {
    // gamma = T^k S gamma' with |c'| < |c|.
    const std::int64_t ac = std::abs(c);
    const std::int64_t a_red = mod_floor(a, ac);
    const std::int64_t k = (a - a_red) / c;
    const std::int64_t b_red = b - k * d;
    e += k + 9;
    const std::int64_t na = c, nb = d, nc = -a_red, nd = -b_red;
    a = na;
    b = nb;
    c = nc;
    d = nd;
    e = mod_floor(e, 12);
  }
  e += (a == 1) ? b : 6 - b;
  return static_cast<int>(mod_floor(e, 12));
}

Complex mobius(const Matrix2& m, const Complex& tau) {
  const Complex num = tau * Real(static_cast<long>(m.a)) + Complex(Real(static_cast<long>(m.b)));
  const Complex den = tau * Real(static_cast<long>(m.c)) + Complex(Real(static_cast<long>(m.d)));
  return num / den;
}

bool CongruenceSubgroup::contains(const Matrix2& g) const {
  const std::int64_t n = level;
  const bool gamma1 = mod_floor(g.a - 1, n) == 0 && mod_floor(g.d - 1, n) == 0 && mod_floor(g.c, n) == 0;
  switch (kind) {
    case CongruenceKind::Gamma: return gamma1 && mod_floor(g.b, n) == 0;
    case CongruenceKind::Gamma1: return gamma1;
    case CongruenceKind::Gamma1Cap4:
      return gamma1 && mod_floor(g.a - 1, 4) == 0 && mod_floor(g.d - 1, 4) == 0 && mod_floor(g.b, 4) == 0 &&
             mod_floor(g.c, 4) == 0;
  }
  return false;
}

bool CongruenceSubgroup::contains_projective(const Matrix2& g) const {
  return contains(g) || contains(Matrix2{-g.a, -g.b, -g.c, -g.d});
}

std::int64_t cusp_width(const Matrix2& transporter, const CongruenceSubgroup& group) {
  const Matrix2& t = transporter;
  if (t.det() != 1) throw Error(ErrorKind::InvalidArgument, "transporter must lie in SL2(Z)");
  const Matrix2 inverse{t.d, -t.b, -t.c, t.a};
  const std::int64_t bound = std::lcm(group.level, std::int64_t{4});
  for (std::int64_t w = 1; w <= bound; ++w) {
    if (group.contains_projective(t * Matrix2{1, w, 0, 1} * inverse)) return w;
  }
  throw Error(ErrorKind::InvalidArgument, "cusp width search exceeded its bound");
}

CuspData CuspData::infinity(std::int64_t width) {
  if (width < 1) throw Error(ErrorKind::InvalidArgument, "cusp width must be positive");
  return {std::nullopt, width, Matrix2::identity()};
}

CuspData CuspData::at(const Fraction& s, std::int64_t width) {
  if (width < 1) throw Error(ErrorKind::InvalidArgument, "cusp width must be positive");
  const std::int64_t p = s.numerator();
  const std::int64_t q = s.denominator();
  const ExtendedGcd e = extended_gcd(p, q);  // p*x + q*y = 1
  return {s, width, Matrix2{p, -e.y, q, e.x}};
}

CuspData CuspData::for_group(std::optional<Fraction> s, const CongruenceSubgroup& group) {
  CuspData data = s ? at(*s, 1) : infinity(1);
  data.width = cusp_width(data.transporter, group);
  return data;
}

}  // namespace rayclass
