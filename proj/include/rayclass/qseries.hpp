#pragma once

#include <cstdint>
#include <string>

#include "rayclass/modular.hpp"
#include "rayclass/numerics.hpp"

namespace rayclass {

/// A point tau of the upper half plane together with q = e^(2 pi i tau),
/// the truncation length for the requested accuracy, and the Euler product
/// prod_{n=1..M} (1 - q^n). Immutable after construction.
class ModularPoint {
 public:
  /// Throws ImTooSmall when Im(tau) < 0.1 (including tau outside the upper half plane).
  ModularPoint(const Complex& tau, const PrecisionContext& ctx);

  const Complex& tau() const { return tau_; }
  const Complex& q() const { return q_; }
  int terms() const { return terms_; }
  const PrecisionContext& context() const { return ctx_; }
  const Complex& euler_product() const { return euler_; }

 private:
  PrecisionContext ctx_;
  Complex tau_;
  Complex q_;
  int terms_;
  Complex euler_;
};

/// Index pair r = (num1/den, num2/den) in Q^2 \ Z^2. Numerators are kept as
/// given (not reduced modulo den), since several quantities depend on the
/// exact representative.
class FractionPair {
 public:
  FractionPair(std::int64_t num1, std::int64_t num2, std::int64_t den);
  /// Parses "a/N,b/N" (denominators may differ; a common one is used).
  static FractionPair parse(const std::string& text);

  std::int64_t num1() const { return num1_; }
  std::int64_t num2() const { return num2_; }
  std::int64_t den() const { return den_; }
  Fraction first() const { return {num1_, den_}; }
  Fraction second() const { return {num2_, den_}; }

  /// Representative with both numerators in [0, den).
  FractionPair reduced() const;
  /// 2r with the numerators doubled exactly.
  FractionPair doubled() const;
  /// True when 2r lies in Z^2.
  bool is_two_torsion() const;
  std::string to_string() const;

  friend bool operator==(const FractionPair&, const FractionPair&) = default;

 private:
  std::int64_t num1_;
  std::int64_t num2_;
  std::int64_t den_;
};

/// Second Bernoulli polynomial x^2 - x + 1/6.
Fraction bernoulli2(const Fraction& x);

/// eta(tau) = sqrt(2 pi) zeta_8 q^(1/24) prod (1 - q^n); eta^24 = Delta.
Complex eta(const ModularPoint& pt);

struct EisensteinPair {
  Complex g2;
  Complex g3;
};
/// g2 = (2pi)^4/12 (1 + 240 sum sigma_3(n) q^n), g3 = (2pi)^6/216 (1 - 504 sum sigma_5(n) q^n).
EisensteinPair eisenstein(const ModularPoint& pt);

/// Delta = (2 pi)^12 q prod (1 - q^n)^24.
Complex delta(const ModularPoint& pt);
/// j = 1728 g2^3 / Delta.
Complex j_invariant(const ModularPoint& pt);

/// Siegel function g_r(tau) from its q-product.
Complex siegel(const FractionPair& r, const ModularPoint& pt);
/// Order of g_r at infinity in powers of q: B2(<r1>) / 2.
Fraction siegel_order(const FractionPair& r);
/// Order of y_{(0,1/N)} at a cusp of width w, in the local parameter q^(1/w).
/// Requires r = (0, 1/N) modulo Z^2 with N >= 3.
Fraction y_cusp_order(const FractionPair& r, const CuspData& cusp);

/// Weierstrass function of the lattice Z tau + Z evaluated at z.
/// Throws OnLattice when z lies within sqrt(eps) of a lattice point.
Complex weierstrass_p(const Complex& z, const ModularPoint& pt);
/// Weierstrass function at z = r1 tau + r2.
Complex weierstrass_p(const FractionPair& r, const ModularPoint& pt);
/// Derivative of the Weierstrass function at r1 tau + r2, as
/// -g_{2r} eta^6 / g_r^4 (exactly zero for 2-torsion r).
Complex weierstrass_p_prime(const FractionPair& r, const ModularPoint& pt);

/// u = g2^3 / eta^24
Complex u_function(const ModularPoint& pt);
/// v = g3 / eta^12
Complex v_function(const ModularPoint& pt);
/// x_r = g2 g3 wp(r1 tau + r2) / Delta
Complex x_function(const FractionPair& r, const ModularPoint& pt);
/// y_r = -g_{2r} / g_r^4. Throws DegenerateIndex for 2-torsion r.
Complex y_function(const FractionPair& r, const ModularPoint& pt);

struct NormalizedValues {
  Complex u;
  Complex v;
  Complex x;
  Complex y;
};
NormalizedValues normalized(const ModularPoint& pt, const FractionPair& r);

}  // namespace rayclass
