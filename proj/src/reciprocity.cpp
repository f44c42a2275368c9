#include "rayclass/reciprocity.hpp"

#include <numeric>

#include "rayclass/parallel.hpp"

namespace rayclass {

namespace {

void require_supported(const Field& field, std::int64_t n) {
  if (field.d > -7) throw Error(ErrorKind::UnsupportedDiscriminant, "the unit group quotient needs d <= -7");
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "level must be at least 2");
}

// zeta_12^k
Complex zeta12(int k) { return expi(Real::pi() * Real::ratio(mod_floor(k, 12), 6)); }

// Multiplier exponent k with h^m = zeta_12^k * y_{r m}^p, for m = diag(1, det m) * gamma.
int y_power_twist(const Matrix2& m, std::int64_t n, int p) {
  const std::int64_t dinv = *inverse_mod(mod_floor(m.det(), n), n);
  const Matrix2 gamma = reduce_mod({m.a, m.b, dinv * m.c, dinv * m.d}, n);
  const int e = siegel_multiplier_exponent(lift_to_sl2(gamma, n));
  return static_cast<int>(mod_floor(-3L * p * e, 12));
}

}  // namespace

Matrix2 w_matrix(const Field& field, std::int64_t n, std::int64_t t, std::int64_t s) {
  return reduce_mod({t - field.B * s, -field.C * s, s, t}, n);
}

std::int64_t count_invertible_pairs(const Field& field, std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t t = 0; t < n; ++t) {
    for (std::int64_t s = 0; s < n; ++s) {
      if (std::gcd(w_matrix(field, n, t, s).det(), n) == 1) ++count;
    }
  }
  return count;
}

std::vector<WElement> w_group(const Field& field, std::int64_t n) {
  require_supported(field, n);
  std::vector<WElement> out;
  for (std::int64_t t = 0; t < n; ++t) {
    for (std::int64_t s = 0; s < n; ++s) {
      const Matrix2 m = w_matrix(field, n, t, s);
      if (std::gcd(m.det(), n) != 1) continue;
      const std::int64_t nt = mod_floor(-t, n), ns = mod_floor(-s, n);
      if (nt < t || (nt == t && ns < s)) continue;
      out.push_back({t, s, m});
    }
  }
  return out;
}

FractionPair act_index(const FractionPair& r, const Matrix2& m, std::int64_t n) {
  if (n % r.den() != 0) {
    throw Error(ErrorKind::InvalidArgument, "index " + r.to_string() + " is not N-torsion for N = " + std::to_string(n));
  }
  const Matrix2 mm = reduce_mod(m, n);
  const std::int64_t den = r.den();
  const std::int64_t a = mod_floor(r.num1(), den), b = mod_floor(r.num2(), den);
  return {mod_floor(a * mm.a + b * mm.c, den), mod_floor(a * mm.b + b * mm.d, den), den};
}

std::vector<GaloisLabel> galois_labels(const Field& field, std::int64_t n) {
  const std::vector<WElement> group = w_group(field, n);
  std::vector<GaloisLabel> out;
  out.reserve(group.size() * field.forms.size());
  for (const ReducedForm& q : field.forms) {
    const Matrix2 beta = beta_lift(q, field.d, n);
    for (const WElement& alpha : group) {
      const Matrix2 composite = mul_mod(alpha.matrix, beta, n);
      if (std::gcd(composite.det(), n) != 1) {
        throw Error(ErrorKind::NonInvertible, "composite " + to_string(composite) + " is not invertible");
      }
      out.push_back({alpha, q, beta, composite});
    }
  }
  return out;
}

Descriptor Descriptor::parse(const std::string& text) {
  if (text == "y12N") return y12n();
  if (text == "x") return x();
  if (text == "pair") return pair();
  if (text == "g12N") return g12n();
  if (text.size() > 1 && text[0] == 'y') {
    try {
      std::size_t used = 0;
      const int k = std::stoi(text.substr(1), &used);
      if (used == text.size() - 1 && k > 0) return y_pow(k);
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown descriptor '" + text + "'");
}

std::string Descriptor::to_string() const {
  switch (kind) {
    case Kind::Y12N: return "y12N";
    case Kind::YPow: return "y" + std::to_string(exponent);
    case Kind::X: return "x";
    case Kind::Pair: return "pair";
    case Kind::G12N: return "g12N";
  }
  return "unknown";
}

int y_exponent_unit(std::int64_t n) { return static_cast<int>(4 / std::gcd<std::int64_t>(4, n)); }

std::vector<ConjugateValue> conjugate_values(const Field& field, std::int64_t n, const Descriptor& desc,
                                             const PrecisionContext& ctx, int threads) {
  require_supported(field, n);
  const int unit = y_exponent_unit(n);
  if (desc.kind == Descriptor::Kind::YPow && (desc.exponent <= 0 || desc.exponent % unit != 0)) {
    throw Error(ErrorKind::InvalidArgument, "y exponent must be a positive multiple of " + std::to_string(unit) +
                                                " for N = " + std::to_string(n));
  }

  const std::vector<GaloisLabel> labels = galois_labels(field, n);
  std::vector<ModularPoint> points;
  {
    WorkingPrecision guard(ctx.bits());
    for (const ReducedForm& q : field.forms) points.emplace_back(cm_point(q, field.d).to_complex(), ctx);
  }
  auto point_of = [&](const ReducedForm& q) -> const ModularPoint& {
    for (std::size_t k = 0; k < field.forms.size(); ++k) {
      if (field.forms[k] == q) return points[k];
    }
    throw Error(ErrorKind::InvalidArgument, "form outside the field's reduced set");
  };

  const FractionPair base(0, 1, n);
  auto evaluate = [&](std::size_t i) {
    WorkingPrecision guard(ctx.bits());
    const GaloisLabel& label = labels[i];
    const ModularPoint& pt = point_of(label.form);
    const FractionPair index = act_index(base, label.composite, n);
    ConjugateValue out{label, index, Complex(Real(0L)), std::nullopt};
    switch (desc.kind) {
      case Descriptor::Kind::Y12N: out.value = pow(y_function(index, pt), 12 * n); break;
      case Descriptor::Kind::G12N: out.value = pow(siegel(index, pt), 12 * n); break;
      case Descriptor::Kind::X: out.value = x_function(index, pt); break;
      case Descriptor::Kind::YPow: {
        const int p = desc.exponent;
        out.value = zeta12(y_power_twist(label.composite, n, p)) * pow(y_function(index, pt), p);
        break;
      }
      case Descriptor::Kind::Pair:
        out.value = x_function(index, pt);
        out.second = zeta12(y_power_twist(label.composite, n, unit)) * pow(y_function(index, pt), unit);
        break;
    }
    return out;
  };
  return parallel_map(labels.size(), evaluate, threads);
}

Complex siegel_ramachandra_unit(const Field& field, std::int64_t n, const PrecisionContext& ctx) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "level must be at least 2");
  WorkingPrecision guard(ctx.bits());
  const ModularPoint pt(field.theta.to_complex(), ctx);
  return pow(siegel(FractionPair(0, 1, n), pt), 12 * n);
}

}  // namespace rayclass
