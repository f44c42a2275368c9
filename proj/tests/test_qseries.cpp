#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rayclass/qseries.hpp"

using namespace rayclass;

namespace {

Complex point(const char* re, const char* im, int bits) {
  WorkingPrecision guard(bits);
  return {Real::parse(re), Real::parse(im)};
}

double rel(const Complex& a, const Complex& b) { return (abs(a - b) / abs(b)).to_double(); }

oracle::cd to_cd(const Complex& z) { return {z.real().to_double(), z.imag().to_double()}; }

Complex zeta3(int bits) {
  WorkingPrecision guard(bits);
  return {Real::ratio(-1, 2), sqrt(Real(3L)) / Real(2L)};
}

}  // namespace

TEST_CASE("eta follows the sqrt(2 pi) zeta_8 normalization") {
  const PrecisionContext ctx(256, 1e-60);
  const ModularPoint pt(point("0", "1", 256), ctx);
  WorkingPrecision guard(256);
  const Complex e = eta(pt);
  const Complex classical = oracle::dedekind_eta_series(pt.tau(), 256);
  const Complex prefactor = expi(Real::pi() / Real(4L)) * sqrt(ldexp(Real::pi(), 1));
  CHECK(rel(e, classical * prefactor) < 1e-60);
  CHECK(classical.real().to_double() == doctest::Approx(0.768225422326057).epsilon(1e-14));

  // Cross-check eta^24 against Delta from lattice-summed g2, g3.
  const auto sums = oracle::lattice_sums({0.0, 1.0});
  const oracle::cd lattice_delta = std::pow(sums.g2, 3) - 27.0 * std::pow(sums.g3, 2);
  const oracle::cd e24 = to_cd(pow(e, 24));
  CHECK(std::abs(e24 - lattice_delta) / std::abs(lattice_delta) < 1e-7);
}

TEST_CASE("eta at large height tends to its leading term") {
  const PrecisionContext ctx(128, 1e-30);
  const ModularPoint pt(point("0.3", "40", 128), ctx);
  WorkingPrecision guard(128);
  CHECK(abs(pt.euler_product() - Complex(1)).to_double() < 1e-100);
}

TEST_CASE("eta^24 is Delta and is invariant under translation") {
  const PrecisionContext ctx(256, 1e-60);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.5, 2.0);
  for (int k = 0; k < 20; ++k) {
    WorkingPrecision guard(256);
    const Complex tau(Real(re(rng)), Real(im(rng)));
    const ModularPoint pt(tau, ctx);
    const ModularPoint shifted(tau + Complex(1), ctx);
    const Complex d = delta(pt);
    CHECK(rel(pow(eta(pt), 24), d) < 1e-58);
    CHECK(rel(pow(eta(shifted), 24), d) < 1e-58);
    CHECK(abs(d) > Real(0L));
    CHECK(abs(eta(pt)) > Real(0L));
  }
}

TEST_CASE("Eisenstein series: Delta identity and zeros at elliptic points") {
  const PrecisionContext ctx(256, 1e-60);
  WorkingPrecision guard(256);
  const ModularPoint rho(zeta3(256), ctx);
  const ModularPoint i(point("0", "1", 256), ctx);
  CHECK(abs(eisenstein(rho).g2).to_double() < 1e-55);
  CHECK(abs(eisenstein(i).g3).to_double() < 1e-55);
  CHECK(abs(j_invariant(rho)).to_double() < 1e-50);
  CHECK(abs(j_invariant(i) - Complex(1728)).to_double() < 1e-50);

  const ModularPoint pt(point("0.21", "0.83", 256), ctx);
  const EisensteinPair g = eisenstein(pt);
  CHECK(rel(pow(g.g2, 3) - pow(g.g3, 2) * Real(27L), delta(pt)) < 1e-55);

  // Against the lattice sums.
  const auto sums = oracle::lattice_sums(to_cd(pt.tau()));
  CHECK(std::abs(to_cd(g.g2) - sums.g2) / std::abs(sums.g2) < 1e-7);
  CHECK(std::abs(to_cd(g.g3) - sums.g3) / std::abs(sums.g3) < 1e-7);
}

TEST_CASE("q-expansion of j starts 1/q + 744 + 196884 q") {
  const PrecisionContext ctx(256, 1e-60);
  WorkingPrecision guard(256);
  const ModularPoint a(point("0", "6", 256), ctx);
  const ModularPoint b(point("0", "7", 256), ctx);
  const Complex ra = j_invariant(a) - Complex(1) / a.q();
  const Complex rb = j_invariant(b) - Complex(1) / b.q();
  // ra = c0 + c1 qa + O(qa^2)
  const Complex c1 = (ra - rb) / (a.q() - b.q());
  const Complex c0 = ra - c1 * a.q();
  CHECK(abs(c0 - Complex(744)).to_double() < 1e-15);
  CHECK(abs(c1 - Complex(196884)).to_double() < 1e-3);
}

TEST_CASE("bernoulli2 and siegel order") {
  CHECK(bernoulli2(Fraction(0)) == Fraction(1, 6));
  CHECK(bernoulli2(Fraction(1, 2)) == Fraction(-1, 12));
  for (int k = 0; k <= 12; ++k) CHECK(bernoulli2(Fraction(k, 12)) == bernoulli2(Fraction(12 - k, 12)));
  CHECK(siegel_order(FractionPair(0, 1, 7)) == Fraction(1, 12));
  CHECK(siegel_order(FractionPair(1, 3, 2)) == Fraction(-1, 24));
  CHECK(siegel_order(FractionPair(-3, 1, 2)) == Fraction(-1, 24));
}

TEST_CASE("fraction pairs") {
  CHECK_THROWS_AS(FractionPair(5, 10, 5), Error);
  const FractionPair r = FractionPair::parse("1/3,-1/2");
  CHECK(r.den() == 6);
  CHECK(r.num1() == 2);
  CHECK(r.num2() == -3);
  CHECK(r.reduced() == FractionPair(2, 3, 6));
  CHECK(FractionPair(1, 0, 2).is_two_torsion());
  CHECK_FALSE(FractionPair(1, 0, 3).is_two_torsion());
  CHECK_THROWS_AS(FractionPair::parse("1/2"), Error);
  CHECK_THROWS_AS(FractionPair::parse("x/2,1/2"), Error);
}

TEST_CASE("Siegel product agrees with the sigma-function oracle") {
  const PrecisionContext ctx(256, 1e-60);
  WorkingPrecision guard(256);
  struct Case {
    std::int64_t n1, n2, den;
    const char* re;
    const char* im;
  };
  for (const Case& c : {Case{0, 1, 2, "0", "1"}, Case{1, 2, 5, "0.1", "0.9"}, Case{-3, 7, 4, "-0.3", "1.4"},
                        Case{5, -2, 3, "0.45", "0.7"}}) {
    const ModularPoint pt(point(c.re, c.im, 256), ctx);
    const Complex fast = siegel(FractionPair(c.n1, c.n2, c.den), pt);
    const Complex slow = oracle::siegel_from_sigma(c.n1, c.n2, c.den, pt.tau(), 256);
    CHECK(rel(fast, slow) < 1e-55);
  }
}

TEST_CASE("Siegel functions: shifts, S and T transformations") {
  const PrecisionContext ctx(256, 1e-60);
  WorkingPrecision guard(256);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(1.0, 3.0);
  for (int k = 0; k < 15; ++k) {
    const int den = 2 + k % 7;
    int a = num(rng), b = num(rng);
    if (a % den == 0 && b % den == 0) b += 1;
    const FractionPair r(a, b, den);
    const Complex tau(Real(re(rng)), Real(im(rng)));
    const ModularPoint pt(tau, ctx);
    const Complex g = siegel(r, pt);
    CHECK(abs(g) > Real(0L));
    CHECK(rel(Complex(abs(g)), Complex(abs(siegel(r.reduced(), pt)))) < 1e-55);

    // S: g_r(-1/tau) = zeta_12^9 g_{(r2,-r1)}(tau)
    const ModularPoint st(Complex(-1) / tau, ctx);
    const Complex zeta12_9 = expi(Real::pi() * Real::ratio(9, 6));
    CHECK(rel(siegel(r, st), zeta12_9 * siegel(FractionPair(b, -a, den), pt)) < 1e-55);

    // T: g_r(tau + 1) = zeta_12 g_{(r1, r1 + r2)}(tau)
    const ModularPoint tt(tau + Complex(1), ctx);
    const Complex zeta12 = expi(Real::pi() / Real(6L));
    CHECK(rel(siegel(r, tt), zeta12 * siegel(FractionPair(a, a + b, den), pt)) < 1e-55);
  }
}

TEST_CASE("general multiplier matches direct evaluation") {
  const PrecisionContext ctx(256, 1e-60);
  WorkingPrecision guard(256);
  const Complex tau = point("0.17", "1.9", 256);
  const ModularPoint pt(tau, ctx);
  for (const Matrix2& gamma : {Matrix2{2, 1, 1, 1}, Matrix2{1, 0, 2, 1}, Matrix2{1, -1, 1, 0}, Matrix2{5, 2, 2, 1}}) {
    const ModularPoint moved(mobius(gamma, tau), ctx);
    const FractionPair r(1, 3, 7);
    const FractionPair rg(r.num1() * gamma.a + r.num2() * gamma.c, r.num1() * gamma.b + r.num2() * gamma.d, 7);
    const int e = siegel_multiplier_exponent(gamma);
    const Complex mult = expi(Real::pi() * Real::ratio(e, 6));
    CHECK(rel(siegel(r, moved), mult * siegel(rg, pt)) < 1e-55);
  }
}

TEST_CASE("siegel order matches the fitted decay") {
  const PrecisionContext ctx(256, 1e-60);
  WorkingPrecision guard(256);
  auto slope = [&](const FractionPair& r, const char* t1, const char* t2) {
    const ModularPoint a(point("0", t1, 256), ctx);
    const ModularPoint b(point("0", t2, 256), ctx);
    const double la = abs(siegel(r, a)).log_abs_double();
    const double lb = abs(siegel(r, b)).log_abs_double();
    return (lb - la) / (-2.0 * M_PI * (std::stod(t2) - std::stod(t1)));
  };
  CHECK(slope(FractionPair(0, 1, 5), "5", "10") == doctest::Approx(1.0 / 12.0).epsilon(1e-3));
  CHECK(slope(FractionPair(0, 1, 5), "19", "20") == doctest::Approx(1.0 / 12.0).epsilon(1e-3));
  CHECK(slope(FractionPair(1, 1, 2), "19", "20") == doctest::Approx(-1.0 / 24.0).epsilon(1e-3));
  CHECK(slope(FractionPair(2, 3, 7), "19", "20") ==
        doctest::Approx(boost::rational_cast<double>(siegel_order(FractionPair(2, 3, 7)))).epsilon(1e-3));
}

TEST_CASE("y cusp orders") {
  const FractionPair r(0, 1, 8);
  const CongruenceSubgroup g{CongruenceKind::Gamma1, 8};
  for (std::int64_t c = 0; c < 8; ++c) {
    const CuspData cusp{Fraction(1, 1), 3, Matrix2{1, 0, c, 1}};
    const Fraction o = y_cusp_order(r, cusp);
    CHECK(o >= Fraction(-3, 4));
    CHECK(o <= Fraction(3, 4));
  }
  CHECK(y_cusp_order(r, CuspData::infinity(2)) == Fraction(-1, 2));
  CHECK(y_cusp_order(r, CuspData{Fraction(1, 4), 5, Matrix2{1, 0, 4, 1}}) == Fraction(5, 4));
  CHECK_THROWS_AS(y_cusp_order(FractionPair(0, 1, 2), CuspData::infinity(1)), Error);
  CHECK_THROWS_AS(y_cusp_order(FractionPair(1, 1, 5), CuspData::infinity(1)), Error);
  (void)g;

  // Direct slope of log|y(alpha(it))| for transporters with c <= 1, where
  // alpha(it) stays high enough in the upper half plane.
  const PrecisionContext ctx(256, 1e-60);
  WorkingPrecision guard(256);
  for (const Matrix2& alpha : {Matrix2{0, -1, 1, 0}, Matrix2{1, 0, 1, 1}, Matrix2::identity()}) {
    for (std::int64_t n : {4, 5}) {
      const FractionPair rn(0, 1, n);
      auto log_y = [&](double t) {
        const ModularPoint pt(mobius(alpha, Complex(Real(0L), Real(t))), ctx);
        return abs(y_function(rn, pt)).log_abs_double();
      };
      const double s = (log_y(9.0) - log_y(8.0)) / (-2.0 * M_PI);
      const CuspData cusp{std::nullopt, 1, alpha};
      CHECK(s == doctest::Approx(boost::rational_cast<double>(y_cusp_order(rn, cusp))).epsilon(1e-3));
    }
  }
  // Larger c through the transformed index: |y_r(alpha tau)| = |y_{r alpha}(tau)|.
  for (const Matrix2& alpha : {Matrix2{1, 0, 2, 1}, Matrix2{1, 1, 3, 4}, Matrix2{2, 1, 7, 4}}) {
    for (std::int64_t n : {5, 8, 9}) {
      const FractionPair ra(alpha.c, alpha.d, n);
      if (ra.is_two_torsion()) continue;
      auto log_y = [&](double t) {
        const ModularPoint pt(Complex(Real(0L), Real(t)), ctx);
        return abs(y_function(ra, pt)).log_abs_double();
      };
      const double s = (log_y(21.0) - log_y(20.0)) / (-2.0 * M_PI);
      const CuspData cusp{std::nullopt, 1, alpha};
      CHECK(s == doctest::Approx(boost::rational_cast<double>(y_cusp_order(FractionPair(0, 1, n), cusp))).epsilon(1e-6));
    }
  }
}

TEST_CASE("Weierstrass function against the lattice sum") {
  const PrecisionContext ctx(256, 1e-60);
  WorkingPrecision guard(256);
  const ModularPoint pt(point("0.2", "1.1", 256), ctx);
  for (const auto& zc : {std::pair{"0.31", "0.12"}, std::pair{"-0.2", "0.5"}, std::pair{"0.45", "-0.3"}}) {
    const Complex z = point(zc.first, zc.second, 256);
    const oracle::cd expected = oracle::wp_lattice(to_cd(z), to_cd(pt.tau()));
    const oracle::cd got = to_cd(weierstrass_p(z, pt));
    CHECK(std::abs(got - expected) / std::abs(expected) < 1e-6);
  }
}

TEST_CASE("Weierstrass function symmetries and lattice rejection") {
  const PrecisionContext ctx(256, 1e-60);
  WorkingPrecision guard(256);
  const ModularPoint pt(point("-0.1", "1.3", 256), ctx);
  const Complex z = point("0.27", "0.41", 256);
  const Complex w = weierstrass_p(z, pt);
  CHECK(rel(weierstrass_p(-z, pt), w) < 1e-55);
  CHECK(rel(weierstrass_p(z + Complex(1), pt), w) < 1e-55);
  CHECK(rel(weierstrass_p(z + pt.tau(), pt), w) < 1e-55);
  CHECK(rel(weierstrass_p(z - pt.tau() * Real(3L), pt), w) < 1e-55);
  try {
    weierstrass_p(pt.tau() + Complex(2), pt);
    FAIL("expected OnLattice");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OnLattice);
  }
}

TEST_CASE("Weierstrass derivative") {
  const PrecisionContext ctx(256, 1e-60);
  WorkingPrecision guard(256);
  const ModularPoint pt(point("0", "2", 256), ctx);

  CHECK(weierstrass_p_prime(FractionPair(1, 0, 2), pt).is_zero());
  CHECK(weierstrass_p_prime(FractionPair(1, 1, 2), pt).is_zero());

  // Differential equation at z = 0.3 tau + 0.2.
  const FractionPair r(3, 2, 10);
  const Complex p = weierstrass_p(r, pt);
  const Complex dp = weierstrass_p_prime(r, pt);
  const EisensteinPair g = eisenstein(pt);
  const Complex rhs = pow(p, 3) * Real(4L) - g.g2 * p - g.g3;
  CHECK((abs(sqr(dp) - rhs) / abs(rhs)).to_double() < 1e-55);

  // Oddness.
  CHECK(rel(weierstrass_p_prime(FractionPair(-3, -2, 10), pt), -dp) < 1e-55);

  // Centered finite difference at r = (0, 1/5).
  const FractionPair r5(0, 1, 5);
  const Complex z = Complex(Real::ratio(1, 5));
  const Complex h(Real::parse("1e-10"));
  const Complex fd = (weierstrass_p(z + h, pt) - weierstrass_p(z - h, pt)) / (h * Real(2L));
  const Complex exact = weierstrass_p_prime(r5, pt);
  CHECK(rel(fd, exact) < 1e-17);
}

TEST_CASE("normalized functions satisfy their relations") {
  const PrecisionContext ctx(256, 1e-60);
  WorkingPrecision guard(256);
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.9, 1.6);
  for (int k = 0; k < 8; ++k) {
    const Complex tau(Real(re(rng)), Real(im(rng)));
    const ModularPoint pt(tau, ctx);
    const FractionPair r(1 + k, 2 * k + 1, 11);
    const NormalizedValues nv = normalized(pt, r);
    CHECK(abs(nv.u - sqr(nv.v) * Real(27L) - Complex(1)).to_double() < 1e-50);
    const Complex lhs = nv.u * pow(nv.v, 3) * sqr(nv.y);
    const Complex rhs = pow(nv.x, 3) * Real(4L) - nv.u * sqr(nv.v) * nv.x - nv.u * pow(nv.v, 4);
    CHECK((abs(lhs - rhs) / abs(lhs)).to_double() < 1e-50);
    CHECK(rel(nv.y * pow(eta(pt), 6), weierstrass_p_prime(r, pt)) < 1e-55);
    CHECK(rel(nv.u, u_function(pt)) < 1e-58);
    CHECK(rel(nv.v, v_function(pt)) < 1e-58);
    CHECK(rel(nv.x, x_function(r, pt)) < 1e-58);
  }
  const ModularPoint pt(point("0", "1.5", 256), ctx);
  CHECK_THROWS_AS(y_function(FractionPair(1, 0, 2), pt), Error);
}

TEST_CASE("precision doubling leaves values unchanged") {
  const PrecisionContext lo(256, 1e-40);
  const PrecisionContext hi(512, 1e-40);
  const Complex theta = point("-0.5", "3.1224989991991992", 512);  // about sqrt(39)/2
  const ModularPoint a(theta, lo);
  const ModularPoint b(theta, hi);
  WorkingPrecision guard(512);
  CHECK(abs(eta(a) - eta(b)).to_double() < 1e-40);
  const FractionPair r(1, 2, 3);
  CHECK(rel(y_function(r, a), y_function(r, b)) < 1e-38);

  // A longer truncation changes nothing either.
  const PrecisionContext tighter(512, 1e-100);
  const ModularPoint c(theta, tighter);
  CHECK(c.terms() >= 2 * a.terms());
  CHECK(abs(eta(a) - eta(c)).to_double() < 1e-40);
}
