#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rayclass/modular.hpp"
#include "rayclass/numerics.hpp"

namespace rayclass {

/// (p + sqrt(d)) / q with integers p, d < 0, q > 0.
struct QuadIrrational {
  std::int64_t p;
  std::int64_t d;
  std::int64_t q;

  /// "(p+sqrt(d))/q", e.g. "(-1+sqrt(-39))/2".
  std::string to_string() const;
  /// Value in the upper half plane at the calling thread's working precision.
  Complex to_complex() const;
};

/// Positive definite form aX^2 + bXY + cY^2.
struct ReducedForm {
  std::int64_t a;
  std::int64_t b;
  std::int64_t c;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

/// Imaginary quadratic field of fundamental discriminant d, with
/// O_K = [theta, 1] and theta^2 + B theta + C = 0.
struct Field {
  std::int64_t d;
  std::int64_t B;
  std::int64_t C;
  std::int64_t h;
  QuadIrrational theta;
  std::vector<ReducedForm> forms;
};

bool is_fundamental_discriminant(std::int64_t d);

/// Throws NotImaginary for d >= 0 and NotFundamental otherwise.
Field make_field(std::int64_t d);

/// Reduced primitive forms of discriminant d, ordered by a, then b.
std::vector<ReducedForm> reduced_forms(std::int64_t d);

/// (-b + sqrt(d)) / (2a)
QuadIrrational cm_point(const ReducedForm& form, std::int64_t d);

/// Prime factors of n in increasing order.
std::vector<std::int64_t> prime_factors(std::int64_t n);
/// Exponent of p in n.
int valuation(std::int64_t n, std::int64_t p);

/// One local matrix from the three-case definition; no validation of Q.
Matrix2 beta_prime(const ReducedForm& form, std::int64_t d, std::int64_t p);
std::map<std::int64_t, Matrix2> beta_matrices(const ReducedForm& form, std::int64_t d,
                                              const std::vector<std::int64_t>& primes);
/// CRT combination of the local matrices for every p | n, entries in [0, n).
/// Throws NonInvertible if the result is not invertible mod n.
Matrix2 beta_lift(const ReducedForm& form, std::int64_t d, std::int64_t n);

enum class Splitting { Split, Inert, Ramified };
const char* to_string(Splitting s);

/// Kronecker symbol (d / p) for a prime p.
int kronecker(std::int64_t d, std::int64_t p);
Splitting splitting(std::int64_t p, std::int64_t d);

/// A prime-ideal power dividing N O_K. Split primes give two factors,
/// distinguished by `conjugate` (0 or 1).
struct IdealFactor {
  std::int64_t p;
  Splitting splitting;
  int e;
  std::int64_t norm;
  int conjugate = 0;
};

/// Factorization of N O_K, ordered by p then conjugate index.
std::vector<IdealFactor> factor_ideal(std::int64_t d, std::int64_t n);

/// (Np - 1) Np^(e-1)
std::int64_t ideal_phi(const IdealFactor& f);

/// Degree of the ray class field of the ideal product over K (d <= -7).
std::int64_t ray_class_degree(const Field& field, const std::vector<IdealFactor>& factors);
/// Degree of the ray class field modulo N O_K over K. Throws UnsupportedDiscriminant for d > -7.
std::int64_t ray_class_degree(const Field& field, std::int64_t n);

struct HypothesisTerm {
  IdealFactor factor;
  std::int64_t phi;
  /// Degree of the ray class field for the conductor with this factor removed.
  std::int64_t complement_degree;
};

struct HypothesisReport {
  bool holds = false;
  std::int64_t degree = 0;
  /// 2 * sum of complement degrees
  std::int64_t bound = 0;
  std::vector<HypothesisTerm> terms;
  /// 1/2 > sum 1/phi, reported when there are at least two factors.
  std::optional<bool> reciprocal_test;
  Fraction reciprocal_sum{0};
};

HypothesisReport check_hypothesis(const Field& field, std::int64_t n);

}  // namespace rayclass
