#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rayclass/reciprocity.hpp"

namespace rayclass {

/// One measured quantity of a check. `relation` is "<", "<=" or ">" and
/// states what must hold between value and tolerance for the check to pass.
struct Residual {
  std::string label;
  double value = 0;
  double tolerance = 0;
  std::string relation = "<";

  bool ok() const;
};

struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Residual> residuals;
  std::vector<std::string> notes;
  bool pass = false;
  double elapsed = 0;

  /// Sets pass from the residuals.
  void finish();
};

/// Coefficient written as (m + n theta) / den.
struct Recognized {
  mpz_class m;
  mpz_class n;
  std::int64_t den = 1;
};

/// Monic polynomial, coefficients in ascending degree.
struct Polynomial {
  std::vector<Complex> coeffs;
  /// Same length as coeffs; nullopt where recognition failed.
  std::vector<std::optional<Recognized>> recognized;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool fully_recognized() const;
};

/// |a - b| / max(1, |a|, |b|)
double scaled_distance(const Complex& a, const Complex& b);

/// prod (X - v_i) with each coefficient matched against (m + n theta) / den, den <= den_max.
/// Throws DuplicateValues if two inputs agree to 10^3 eps.
Polynomial minpoly(const std::vector<Complex>& values, const Field& field, const PrecisionContext& ctx,
                   int den_max = 48, double recog_tol = 1e-10);

Complex evaluate(const Polynomial& p, const Complex& z);
/// The polynomial rebuilt from its recognized coefficients (falls back to the
/// numerical coefficient where recognition failed).
Polynomial exact_part(const Polynomial& p, const Field& field);
/// Newton iteration from `start` until the step drops below eps.
Complex refine_root(const Polynomial& p, const Complex& start, const PrecisionContext& ctx, int max_steps = 100);

/// Minimal polynomial of j over the reduced forms' CM points.
Polynomial hilbert_class_poly(const Field& field, const PrecisionContext& ctx);

/// Largest |monomial| scaled residual of the Weierstrass model
/// (Z^2 + 27V^2) V^3 Y^2 = 4 X^3 Z^4 - (Z^2 + 27V^2) V^2 X Z^2 - (Z^2 + 27V^2) V^4 Z.
Real surface_residual(const Complex& v, const Complex& x, const Complex& y, const Complex& z);

/// Curve and u - 27 v^2 = 1 residuals at theta with r = (0, 1/N). Unless
/// `relaxed`, requires d <= -39, N >= 8 and 4 | N.
CheckReport check_curve_point(const Field& field, std::int64_t n, const PrecisionContext& ctx, bool relaxed = false);

/// Surface residual at [v : x : y : 1] * scale for r = (0, 1/N); requires 4 | N.
CheckReport check_surface_point(const Complex& tau, std::int64_t n, const PrecisionContext& ctx, long scale = 1);

/// 1 / (1 - A^(X/a)) < 1 + A^(X/(1.03 a)), A = exp(-pi sqrt(-d)), compared in logs.
CheckReport check_lemma51(std::int64_t d, double a, double x, const PrecisionContext& ctx);

/// |y_{(s/N, t/N)}(theta_Q)| < |y_{(0,1/N)}(theta)| for every Q with a >= 2 and
/// every (s, t) in [0, N)^2 with (2s, 2t) not in N Z^2.
CheckReport check_lemma52(const Field& field, std::int64_t n, const PrecisionContext& ctx, int threads = 0);

/// |(1 - zeta_N)^3 / (1 + zeta_N)| * |(1 + w) / (1 - w)^3|, w = exp(2 pi i (s theta_Q + t) / N).
Real t_factor(std::int64_t n, std::int64_t s, std::int64_t t, const Complex& theta_q);
/// 4 sin^3(pi/N) / cos(pi/N) * (1 + e^(-pi sqrt3 / N)) / (1 - e^(-pi sqrt3 / N))^3
Real t_majorant(std::int64_t n);
/// Upper end of the majorant sweep over N >= 8.
constexpr std::int64_t kMajorantSweepEnd = 200;

/// T <= 1 for s = 0 and T < 3.05 otherwise, over the forms with a >= 2,
/// plus the majorant sweep over N in [8, kMajorantSweepEnd].
CheckReport check_t_bound(std::int64_t n, const Field& field, const PrecisionContext& ctx);

/// Orbit size equals the degree and the conjugates are pairwise distinct at 10^3 eps.
CheckReport check_generation(const Field& field, std::int64_t n, const Descriptor& desc, const PrecisionContext& ctx,
                             int threads = 0);

/// y_{(0,1/N)}(theta)^(12N) = g(C') / g(C0)^4 compared in logarithms, where
/// g(C0) is the Siegel-Ramachandra unit and C' the class of alpha = 2. Needs odd N.
CheckReport check_unit_identity(const Field& field, std::int64_t n, const PrecisionContext& ctx);

/// A point gamma(zeta_3) or gamma(zeta_4) with gamma in SL2(Z).
struct EllipticPoint {
  Matrix2 gamma;
  /// 3 or 4
  int order;
  std::string label;
};
/// The 20 points of X_{1,4}(4) above zeta_3 and zeta_4.
std::vector<EllipticPoint> elliptic_points_level4();

/// y_{(0,1/N)}(gamma(base)) = zeta_12^(-3 e(gamma)) y_{(0,1/N) gamma}(base).
Complex y_at_image(const Matrix2& gamma, int order, std::int64_t n, const PrecisionContext& ctx);

/// Pairwise distinctness of y_{(0,1/4)} at the 20 points.
CheckReport elliptic_point_distinctness(const PrecisionContext& ctx);

}  // namespace rayclass
