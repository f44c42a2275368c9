#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "rayclass/numerics.hpp"

namespace rayclass {

using Fraction = boost::rational<std::int64_t>;

/// Fractional part <x> in [0, 1).
Fraction frac_part(const Fraction& x);

/// Non-negative residue of v modulo n (n > 0).
std::int64_t mod_floor(std::int64_t v, std::int64_t n);

struct ExtendedGcd {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;
};
/// g = gcd(a, b) >= 0 with a*x + b*y = g.
ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

/// Inverse of a modulo n, if gcd(a, n) = 1.
std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t n);

/// 2x2 integer matrix (a b; c d). Row vectors act on the left: (r1, r2) * M.
struct Matrix2 {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 1;

  std::int64_t det() const { return a * d - b * c; }
  static Matrix2 identity() { return {}; }
  static Matrix2 scalar(std::int64_t k) { return {k, 0, 0, k}; }

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

Matrix2 operator*(const Matrix2& x, const Matrix2& y);
/// Entries reduced into [0, n).
Matrix2 reduce_mod(const Matrix2& m, std::int64_t n);
/// Product reduced mod n.
Matrix2 mul_mod(const Matrix2& x, const Matrix2& y, std::int64_t n);
std::string to_string(const Matrix2& m);

/// Lifts m in SL2(Z/nZ) to SL2(Z). Requires det(m) = 1 mod n.
Matrix2 lift_to_sl2(const Matrix2& m, std::int64_t n);

/// Exponent e (mod 12) of the Siegel-function multiplier:
/// g_r(gamma tau) = zeta_12^e * g_{r gamma}(tau) for gamma in SL2(Z).
/// Built from the S and T transformation rules (S -> 9, T -> 1).
int siegel_multiplier_exponent(const Matrix2& gamma);

/// Moebius action (a tau + b) / (c tau + d).
Complex mobius(const Matrix2& m, const Complex& tau);

enum class CongruenceKind { Gamma, Gamma1, Gamma1Cap4 };

/// Gamma(N), Gamma_1(N), or Gamma_1(N) intersected with Gamma(4).
struct CongruenceSubgroup {
  CongruenceKind kind;
  std::int64_t level;

  bool contains(const Matrix2& g) const;
  /// Membership of the image in PSL2, i.e. g or -g lies in the group.
  bool contains_projective(const Matrix2& g) const;
};

/// A cusp s of a modular curve with its width and a transporter alpha in
/// SL2(Z) sending infinity to s (c = 0 exactly when s is infinity).
struct CuspData {
  std::optional<Fraction> cusp;  // nullopt = infinity
  std::int64_t width = 1;
  Matrix2 transporter;

  static CuspData infinity(std::int64_t width);
  /// Cusp a/c with a transporter built by the extended Euclidean algorithm.
  static CuspData at(const Fraction& s, std::int64_t width);
  /// Cusp s with its width computed for the given group.
  static CuspData for_group(std::optional<Fraction> s, const CongruenceSubgroup& group);
};

/// Smallest w > 0 with alpha T^w alpha^-1 in +-group.
std::int64_t cusp_width(const Matrix2& transporter, const CongruenceSubgroup& group);

}  // namespace rayclass
