#include <doctest.h>

#include <random>

#include "rayclass/modular.hpp"

using namespace rayclass;

TEST_CASE("fractional parts and residues") {
  CHECK(frac_part(Fraction(-1, 3)) == Fraction(2, 3));
  CHECK(frac_part(Fraction(7, 2)) == Fraction(1, 2));
  CHECK(frac_part(Fraction(4)) == Fraction(0));
  CHECK(mod_floor(-7, 5) == 3);
  CHECK(*inverse_mod(3, 8) == 3);
  CHECK_FALSE(inverse_mod(4, 8).has_value());
  const ExtendedGcd e = extended_gcd(240, 46);
  CHECK(e.g == 2);
  CHECK(240 * e.x + 46 * e.y == 2);
}

TEST_CASE("SL2 lifts reduce to the input") {
  std::mt19937 rng(7);
  for (std::int64_t n : {2, 3, 4, 8, 12, 35, 39}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::uniform_int_distribution<std::int64_t> dist(0, n - 1);
      Matrix2 m{dist(rng), dist(rng), dist(rng), dist(rng)};
      if (mod_floor(m.det(), n) != 1 % n) continue;
      const Matrix2 lift = lift_to_sl2(m, n);
      CHECK(lift.det() == 1);
      CHECK(reduce_mod(lift, n) == reduce_mod(m, n));
    }
  }
  CHECK_THROWS_AS(lift_to_sl2(Matrix2{2, 0, 0, 1}, 5), Error);
}

TEST_CASE("multiplier exponent is a character on generators") {
  const Matrix2 s{0, -1, 1, 0};
  const Matrix2 t{1, 1, 0, 1};
  CHECK(siegel_multiplier_exponent(s) == 9);
  CHECK(siegel_multiplier_exponent(t) == 1);
  CHECK(siegel_multiplier_exponent(Matrix2::scalar(-1)) == 6);
  CHECK(siegel_multiplier_exponent(Matrix2::identity()) == 0);
  // Homomorphism on random products of generators.
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix2 g = Matrix2::identity();
    int expected = 0;
    const int len = 1 + static_cast<int>(rng() % 8);
    for (int k = 0; k < len; ++k) {
      const auto pick = rng() % 3;
      if (pick == 0) {
        g = g * s;
        expected += 9;
      } else if (pick == 1) {
        g = g * t;
        expected += 1;
      } else {
        g = g * Matrix2{1, -1, 0, 1};
        expected -= 1;
      }
    }
    CHECK(siegel_multiplier_exponent(g) == mod_floor(expected, 12));
  }
}

TEST_CASE("cusp widths by brute force") {
  const CongruenceSubgroup g5{CongruenceKind::Gamma, 5};
  CHECK(CuspData::for_group(std::nullopt, g5).width == 5);
  CHECK(CuspData::for_group(Fraction(0), g5).width == 5);
  CHECK(CuspData::for_group(Fraction(2, 5), g5).width == 5);

  const CongruenceSubgroup g1{CongruenceKind::Gamma1, 5};
  CHECK(CuspData::for_group(std::nullopt, g1).width == 1);
  CHECK(CuspData::for_group(Fraction(0), g1).width == 5);
  CHECK(CuspData::for_group(Fraction(1, 2), g1).width == 5);

  // Gamma_1(4): cusps infinity, 0, 1/2 with widths 1, 4, 1.
  const CongruenceSubgroup g14{CongruenceKind::Gamma1, 4};
  CHECK(CuspData::for_group(std::nullopt, g14).width == 1);
  CHECK(CuspData::for_group(Fraction(0), g14).width == 4);
  CHECK(CuspData::for_group(Fraction(1, 2), g14).width == 1);

  // Intersecting with Gamma(4) forces width divisible by 4 at every cusp.
  const CongruenceSubgroup g134{CongruenceKind::Gamma1Cap4, 6};
  for (auto s : {std::optional<Fraction>{}, std::optional<Fraction>{Fraction(0)}, std::optional<Fraction>{Fraction(1, 3)}}) {
    CHECK(CuspData::for_group(s, g134).width % 4 == 0);
  }

  const CuspData c = CuspData::at(Fraction(3, 7), 1);
  CHECK(c.transporter.det() == 1);
  CHECK(c.transporter.a == 3);
  CHECK(c.transporter.c == 7);
}
