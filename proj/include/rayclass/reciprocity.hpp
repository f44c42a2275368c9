#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rayclass/classfield.hpp"
#include "rayclass/qseries.hpp"

namespace rayclass {

/// Element (t - B s, -C s; s, t) mod N of the unit group of O_K / N O_K,
/// stored by the lexicographically smaller of (t, s) and (-t, -s).
struct WElement {
  std::int64_t t;
  std::int64_t s;
  Matrix2 matrix;
};

/// (t - B s, -C s; s, t) reduced mod n, without membership checks.
Matrix2 w_matrix(const Field& field, std::int64_t n, std::int64_t t, std::int64_t s);

/// Number of pairs (t, s) mod n whose matrix is invertible (before the +-1 quotient).
std::int64_t count_invertible_pairs(const Field& field, std::int64_t n);

/// One representative per +-1 pair, sorted by (t, s).
/// Throws UnsupportedDiscriminant for d > -7 and InvalidArgument for n < 2.
std::vector<WElement> w_group(const Field& field, std::int64_t n);

/// Row action r * m with m taken mod n; the result has numerators in [0, den).
/// Requires den(r) | n.
FractionPair act_index(const FractionPair& r, const Matrix2& m, std::int64_t n);

struct GaloisLabel {
  WElement alpha;
  ReducedForm form;
  Matrix2 beta;
  /// alpha * beta mod N
  Matrix2 composite;
};

/// All labels (alpha, Q), ordered by form, then (t, s).
std::vector<GaloisLabel> galois_labels(const Field& field, std::int64_t n);

struct Descriptor {
  enum class Kind { Y12N, YPow, X, Pair, G12N };
  Kind kind = Kind::Y12N;
  /// Exponent of y for YPow.
  int exponent = 0;

  static Descriptor y12n() { return {Kind::Y12N, 0}; }
  static Descriptor y_pow(int k) { return {Kind::YPow, k}; }
  static Descriptor x() { return {Kind::X, 0}; }
  static Descriptor pair() { return {Kind::Pair, 0}; }
  static Descriptor g12n() { return {Kind::G12N, 0}; }
  /// "y12N", "x", "pair", "g12N" or "y<k>" such as "y4".
  static Descriptor parse(const std::string& text);
  std::string to_string() const;
};

/// Smallest exponent p for which y_{(0,1/N)}^p is invariant under Gamma(N): 4 / gcd(4, N).
int y_exponent_unit(std::int64_t n);

struct ConjugateValue {
  GaloisLabel label;
  /// (0, 1/N) * composite
  FractionPair index;
  Complex value;
  /// The y-component for Kind::Pair.
  std::optional<Complex> second;
};

/// Images of the descriptor's value at theta under the whole Galois group of
/// K_(N) / K, one per label. Evaluation is spread over `threads` workers.
std::vector<ConjugateValue> conjugate_values(const Field& field, std::int64_t n, const Descriptor& desc,
                                             const PrecisionContext& ctx, int threads = 0);

/// g_{(0,1/N)}(theta)^(12N)
Complex siegel_ramachandra_unit(const Field& field, std::int64_t n, const PrecisionContext& ctx);

}  // namespace rayclass
