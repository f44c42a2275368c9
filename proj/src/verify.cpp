#include "rayclass/verify.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "rayclass/parallel.hpp"

namespace rayclass {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

std::vector<std::pair<std::string, std::string>> config_inputs(std::int64_t d, std::int64_t n,
                                                               const PrecisionContext& ctx) {
  return {{"dk", std::to_string(d)},
          {"level", std::to_string(n)},
          {"precision_bits", std::to_string(ctx.bits())},
          {"eps", fmt(ctx.eps())}};
}

Real max_abs(std::initializer_list<Complex> terms) {
  Real m(1L);
  for (const Complex& t : terms) m = max(m, abs(t));
  return m;
}

Complex zeta12(int k) { return expi(Real::pi() * Real::ratio(mod_floor(k, 12), 6)); }

Complex to_complex(const Recognized& r, const Complex& theta) {
  Real m = make_real_with_precision(working_precision());
  Real n = make_real_with_precision(working_precision());
  mpfr_set_z(m.get(), r.m.get_mpz_t(), MPFR_RNDN);
  mpfr_set_z(n.get(), r.n.get_mpz_t(), MPFR_RNDN);
  const Real den(static_cast<long>(r.den));
  return (Complex(m) + theta * n) / den;
}

mpz_class round_to_z(const Real& x) {
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), x.get(), MPFR_RNDN);
  return out;
}

std::string form_string(const ReducedForm& q) {
  return "(" + std::to_string(q.a) + "," + std::to_string(q.b) + "," + std::to_string(q.c) + ")";
}

double log_abs(const Complex& z) { return log(abs(z)).to_double(); }

}  // namespace

bool Residual::ok() const {
  if (relation == "<") return value < tolerance;
  if (relation == "<=") return value <= tolerance;
  if (relation == ">") return value > tolerance;
  return false;
}

void CheckReport::finish() {
  pass = !residuals.empty();
  for (const Residual& r : residuals) pass = pass && r.ok();
}

bool Polynomial::fully_recognized() const {
  for (const auto& r : recognized) {
    if (!r) return false;
  }
  return true;
}

double scaled_distance(const Complex& a, const Complex& b) {
  const Real scale = max(Real(1L), max(abs(a), abs(b)));
  return (abs(a - b) / scale).to_double();
}

Polynomial minpoly(const std::vector<Complex>& values, const Field& field, const PrecisionContext& ctx, int den_max,
                   double recog_tol) {
  WorkingPrecision guard(ctx.bits());
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (scaled_distance(values[i], values[j]) < 1e3 * ctx.eps()) {
        throw Error(ErrorKind::DuplicateValues,
                    "values " + std::to_string(i) + " and " + std::to_string(j) + " coincide at tolerance");
      }
    }
  }

  Polynomial p;
  p.coeffs.push_back(Complex(Real(1L)));
  for (const Complex& v : values) {
    std::vector<Complex> next(p.coeffs.size() + 1, Complex(Real(0L)));
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
      next[k + 1] += p.coeffs[k];
      next[k] -= p.coeffs[k] * v;
    }
    p.coeffs = std::move(next);
  }

  const Complex theta = field.theta.to_complex();
  for (const Complex& c : p.coeffs) {
    const Real n = c.imag() / theta.imag();
    const Real m = c.real() - n * theta.real();
    std::optional<Recognized> found;
    for (int den = 1; den <= den_max && !found; ++den) {
      const Real scale(static_cast<long>(den));
      Recognized r{round_to_z(m * scale), round_to_z(n * scale), den};
      if (abs(to_complex(r, theta) - c).to_double() < recog_tol) found = r;
    }
    p.recognized.push_back(found);
  }
  // Monic by construction.
  p.coeffs.back() = Complex(Real(1L));
  p.recognized.back() = Recognized{1, 0, 1};
  return p;
}

Complex evaluate(const Polynomial& p, const Complex& z) {
  Complex acc(Real(0L));
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial exact_part(const Polynomial& p, const Field& field) {
  Polynomial out = p;
  const Complex theta = field.theta.to_complex();
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    if (p.recognized[k]) out.coeffs[k] = to_complex(*p.recognized[k], theta);
  }
  return out;
}

Complex refine_root(const Polynomial& p, const Complex& start, const PrecisionContext& ctx, int max_steps) {
  WorkingPrecision guard(ctx.bits());
  Complex z = start;
  const Real stop = ctx.eps_real() * Real(1e-3);
  for (int step = 0; step < max_steps; ++step) {
    Complex value(Real(0L)), slope(Real(0L));
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
      slope = slope * z + value;
      value = value * z + *it;
    }
    const Complex delta = divide(value, slope, ctx);
    z -= delta;
    if (abs(delta) < stop * max(Real(1L), abs(z))) break;
  }
  return z;
}

Polynomial hilbert_class_poly(const Field& field, const PrecisionContext& ctx) {
  WorkingPrecision guard(ctx.bits());
  std::vector<Complex> values;
  for (const ReducedForm& q : field.forms) {
    values.push_back(j_invariant(ModularPoint(cm_point(q, field.d).to_complex(), ctx)));
  }
  return minpoly(values, field, ctx, 1);
}

Real surface_residual(const Complex& v, const Complex& x, const Complex& y, const Complex& z) {
  const Complex w = sqr(z) + sqr(v) * Real(27L);
  const Complex v2 = sqr(v);
  const Complex t1 = w * v2 * v * sqr(y);
  const Complex t2 = pow(x, 3) * pow(z, 4) * Real(4L);
  const Complex t3 = w * v2 * x * sqr(z);
  const Complex t4 = w * sqr(v2) * z;
  return abs(t1 - t2 + t3 + t4) / max_abs({t1, t2, t3, t4});
}

CheckReport check_curve_point(const Field& field, std::int64_t n, const PrecisionContext& ctx, bool relaxed) {
  const auto start = Clock::now();
  if (relaxed) {
    if (field.d > -7 || n < 3) throw Error(ErrorKind::InvalidArgument, "relaxed curve check needs d <= -7 and N >= 3");
  } else if (field.d > -39 || n < 8 || n % 4 != 0) {
    throw Error(ErrorKind::InvalidArgument, "curve check needs d <= -39, N >= 8 and 4 | N");
  }
  WorkingPrecision guard(ctx.bits());
  const ModularPoint pt(field.theta.to_complex(), ctx);
  const NormalizedValues nv = normalized(pt, FractionPair(0, 1, n));
  const Complex uv2 = nv.u * sqr(nv.v);
  const Complex lhs = uv2 * nv.v * sqr(nv.y);
  const Complex c1 = pow(nv.x, 3) * Real(4L), c2 = uv2 * nv.x, c3 = uv2 * sqr(nv.v);
  const Real curve = abs(lhs - (c1 - c2 - c3)) / max_abs({lhs, c1, c2, c3});
  const Complex v27 = sqr(nv.v) * Real(27L);
  const Real modular = abs(nv.u - v27 - Complex(Real(1L))) / max_abs({nv.u, v27});

  CheckReport r;
  r.name = "curve";
  r.inputs = config_inputs(field.d, n, ctx);
  r.inputs.emplace_back("mode", relaxed ? "relaxed" : "strict");
  r.residuals.push_back({"u v^3 y^2 - (4x^3 - u v^2 x - u v^4)", curve.to_double(), ctx.eps(), "<"});
  r.residuals.push_back({"u - 27 v^2 - 1", modular.to_double(), ctx.eps(), "<"});
  r.notes.push_back("residuals scaled by the largest monomial magnitude (at least 1)");
  r.finish();
  r.elapsed = seconds_since(start);
  return r;
}

CheckReport check_surface_point(const Complex& tau, std::int64_t n, const PrecisionContext& ctx, long scale) {
  const auto start = Clock::now();
  if (n < 4 || n % 4 != 0) throw Error(ErrorKind::InvalidArgument, "surface check needs 4 | N");
  WorkingPrecision guard(ctx.bits());
  const ModularPoint pt(tau, ctx);
  const FractionPair r(0, 1, n);
  const Real lambda(scale);
  const Complex v = v_function(pt) * lambda;
  const Complex x = x_function(r, pt) * lambda;
  const Complex y = y_function(r, pt) * lambda;
  const Complex z = Complex(lambda);

  CheckReport rep;
  rep.name = "surface";
  const auto [re, im] = to_strings(pt.tau(), 30);
  rep.inputs = {{"tau", re + "," + im},
                {"level", std::to_string(n)},
                {"precision_bits", std::to_string(ctx.bits())},
                {"eps", fmt(ctx.eps())},
                {"scale", std::to_string(scale)}};
  rep.residuals.push_back({"surface equation at [v:x:y:1]", surface_residual(v, x, y, z).to_double(), ctx.eps(), "<"});
  rep.notes.push_back("residual scaled by the largest monomial magnitude (at least 1)");
  rep.finish();
  rep.elapsed = seconds_since(start);
  return rep;
}

CheckReport check_lemma51(std::int64_t d, double a, double x, const PrecisionContext& ctx) {
  const auto start = Clock::now();
  const double big_d = std::sqrt(static_cast<double>(-d) / 3.0);
  if (d > -7) throw Error(ErrorKind::InvalidArgument, "check needs d <= -7");
  if (a < 1.0 || a > big_d * (1 + 1e-12)) throw Error(ErrorKind::InvalidArgument, "check needs 1 <= a <= sqrt(-d/3)");
  if (x < 0.5) throw Error(ErrorKind::InvalidArgument, "check needs X >= 1/2");

  WorkingPrecision guard(ctx.bits());
  const Real log_a = -(Real::pi() * sqrt(Real(static_cast<long>(-d))));
  const Real ratio = Real(x) / Real(a);
  const Real p = exp(ratio * log_a);
  // Compare 1/(1 - p) - 1 = p / (1 - p) against A^(X / (1.03 a)) in logs.
  const Real log_left = ratio * log_a - log(Real(1L) - p);
  const Real log_right = ratio * log_a / Real::ratio(103, 100);
  const Real margin = log_right - log_left;
  const Real left = Real(1L) / (Real(1L) - p);
  const Real right = Real(1L) + exp(log_right);

  CheckReport r;
  r.name = "lemma51";
  r.inputs = {{"dk", std::to_string(d)},
              {"a", fmt(a)},
              {"X", fmt(x)},
              {"precision_bits", std::to_string(ctx.bits())},
              {"eps", fmt(ctx.eps())}};
  r.residuals.push_back({"log(rhs - 1) - log(lhs - 1)", margin.to_double(), 0.0, ">"});
  r.notes.push_back("lhs = " + left.to_string(25));
  r.notes.push_back("rhs = " + right.to_string(25));
  r.notes.push_back("rhs - lhs = " + (right - left).to_string(10));
  r.finish();
  r.elapsed = seconds_since(start);
  return r;
}

CheckReport check_lemma52(const Field& field, std::int64_t n, const PrecisionContext& ctx, int threads) {
  const auto start = Clock::now();
  if (field.d > -39 || n < 8) throw Error(ErrorKind::InvalidArgument, "check needs d <= -39 and N >= 8");
  WorkingPrecision guard(ctx.bits());
  const double reference = log_abs(y_function(FractionPair(0, 1, n), ModularPoint(field.theta.to_complex(), ctx)));

  struct Task {
    const ReducedForm* form;
    std::int64_t s, t;
  };
  std::vector<Task> tasks;
  std::vector<ModularPoint> points;
  std::vector<const ReducedForm*> forms;
  for (const ReducedForm& q : field.forms) {
    if (q.a < 2) continue;
    forms.push_back(&q);
    points.emplace_back(cm_point(q, field.d).to_complex(), ctx);
  }
  for (std::size_t k = 0; k < forms.size(); ++k) {
    for (std::int64_t s = 0; s < n; ++s) {
      for (std::int64_t t = 0; t < n; ++t) {
        if ((2 * s) % n == 0 && (2 * t) % n == 0) continue;
        tasks.push_back({forms[k], s, t});
      }
    }
  }
  const std::size_t per_form = forms.empty() ? 1 : tasks.size() / forms.size();
  const auto margins = parallel_map(
      tasks.size(),
      [&](std::size_t i) {
        WorkingPrecision inner(ctx.bits());
        const Task& task = tasks[i];
        return reference - log_abs(y_function(FractionPair(task.s, task.t, n), points[i / per_form]));
      },
      threads);

  CheckReport r;
  r.name = "lemma52";
  r.inputs = config_inputs(field.d, n, ctx);
  std::size_t worst = 0;
  for (std::size_t i = 1; i < margins.size(); ++i) {
    if (margins[i] < margins[worst]) worst = i;
  }
  if (tasks.empty()) {
    r.residuals.push_back({"worst log margin", std::numeric_limits<double>::infinity(), 0.0, ">"});
    r.notes.push_back("no reduced form with a >= 2; the statement is vacuous");
  } else {
    r.residuals.push_back({"worst log margin", margins[worst], 0.0, ">"});
    const Task& w = tasks[worst];
    r.notes.push_back("worst at Q=" + form_string(*w.form) + " s=" + std::to_string(w.s) + " t=" + std::to_string(w.t));
    r.notes.push_back("pairs checked: " + std::to_string(tasks.size()));
  }
  r.finish();
  r.elapsed = seconds_since(start);
  return r;
}

Real t_factor(std::int64_t n, std::int64_t s, std::int64_t t, const Complex& theta_q) {
  const Complex zeta = expi(ldexp(Real::pi(), 1) / Real(static_cast<long>(n)));
  const Complex one(Real(1L));
  const Real lead = abs(pow(one - zeta, 3)) / abs(one + zeta);
  const Complex arg = (theta_q * Real(static_cast<long>(s)) + Complex(Real(static_cast<long>(t)))) /
                      Real(static_cast<long>(n));
  const Complex w = expi(ldexp(Real::pi(), 1) * arg.real()) * exp(-ldexp(Real::pi(), 1) * arg.imag());
  return lead * abs(one + w) / abs(pow(one - w, 3));
}

Real t_majorant(std::int64_t n) {
  const Real x = Real::pi() / Real(static_cast<long>(n));
  const Real e = exp(-(x * sqrt(Real(3L))));
  const Real one(1L);
  return Real(4L) * pow(sin(x), 3L) / cos(x) * (one + e) / pow(one - e, 3L);
}

CheckReport check_t_bound(std::int64_t n, const Field& field, const PrecisionContext& ctx) {
  const auto start = Clock::now();
  if (n < 8) throw Error(ErrorKind::InvalidArgument, "T bound needs N >= 8");
  WorkingPrecision guard(ctx.bits());
  // s = 0 does not involve theta_Q.
  Real max_zero(0L);
  for (std::int64_t t = 1; t < n; ++t) {
    if ((2 * t) % n == 0) continue;
    max_zero = max(max_zero, t_factor(n, 0, t, field.theta.to_complex()));
  }
  Real max_other(0L);
  std::string where = "none";
  for (const ReducedForm& q : field.forms) {
    if (q.a < 2) continue;
    const Complex theta_q = cm_point(q, field.d).to_complex();
    for (std::int64_t s = 1; s < n; ++s) {
      for (std::int64_t t = 0; t < n; ++t) {
        if ((2 * s) % n == 0 && (2 * t) % n == 0) continue;
        const Real v = t_factor(n, s, t, theta_q);
        if (v > max_other) {
          max_other = v;
          where = "Q=" + form_string(q) + " s=" + std::to_string(s) + " t=" + std::to_string(t);
        }
      }
    }
  }
  Real sweep(0L);
  std::int64_t sweep_at = 8;
  for (std::int64_t m = 8; m <= kMajorantSweepEnd; ++m) {
    const Real v = t_majorant(m);
    if (v > sweep) {
      sweep = v;
      sweep_at = m;
    }
  }

  CheckReport r;
  r.name = "tbound";
  r.inputs = config_inputs(field.d, n, ctx);
  r.residuals.push_back({"max T (s = 0)", max_zero.to_double(), 1.0 + ctx.eps(), "<="});
  r.residuals.push_back({"max T (s != 0)", max_other.to_double(), 3.05, "<"});
  r.residuals.push_back({"max T (s != 0) against majorant(N)", max_other.to_double(), t_majorant(n).to_double(), "<="});
  r.residuals.push_back({"max majorant over N in [8, " + std::to_string(kMajorantSweepEnd) + "]", sweep.to_double(),
                         3.05, "<"});
  r.notes.push_back("s != 0 maximum at " + where);
  r.notes.push_back("majorant maximum at N=" + std::to_string(sweep_at));
  r.notes.push_back("majorant sweep stops at N=" + std::to_string(kMajorantSweepEnd));
  r.notes.push_back("T = 1 is attained at s = 0, t = N - 1; the s = 0 bound allows eps of rounding");
  r.finish();
  r.elapsed = seconds_since(start);
  return r;
}

CheckReport check_generation(const Field& field, std::int64_t n, const Descriptor& desc, const PrecisionContext& ctx,
                             int threads) {
  const auto start = Clock::now();
  const auto values = conjugate_values(field, n, desc, ctx, threads);
  const std::int64_t degree = ray_class_degree(field, n);

  WorkingPrecision guard(ctx.bits());
  double closest = std::numeric_limits<double>::infinity();
  std::size_t ci = 0, cj = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      double dist = scaled_distance(values[i].value, values[j].value);
      if (values[i].second) dist = std::max(dist, scaled_distance(*values[i].second, *values[j].second));
      if (dist < closest) {
        closest = dist;
        ci = i;
        cj = j;
      }
    }
  }

  CheckReport r;
  r.name = "generation";
  r.inputs = config_inputs(field.d, n, ctx);
  r.inputs.emplace_back("descriptor", desc.to_string());
  r.residuals.push_back({"|orbit| - degree", std::abs(static_cast<double>(values.size()) - static_cast<double>(degree)),
                         0.5, "<"});
  r.residuals.push_back({"closest pair distance", closest, 1e3 * ctx.eps(), ">"});
  r.notes.push_back("orbit size " + std::to_string(values.size()) + ", degree " + std::to_string(degree));
  if (values.size() > 1) {
    auto describe = [&](const ConjugateValue& v) {
      return "(t=" + std::to_string(v.label.alpha.t) + ",s=" + std::to_string(v.label.alpha.s) +
             ",Q=" + form_string(v.label.form) + ")";
    };
    r.notes.push_back("closest pair " + describe(values[ci]) + " " + describe(values[cj]));
  }
  r.notes.push_back("distinct conjugates are a numerical witness of generation, not a proof");
  r.finish();
  r.elapsed = seconds_since(start);
  return r;
}

CheckReport check_unit_identity(const Field& field, std::int64_t n, const PrecisionContext& ctx) {
  const auto start = Clock::now();
  if (n % 2 == 0) throw Error(ErrorKind::InvalidArgument, "alpha = 2 lies in the unit group only for odd N");
  WorkingPrecision guard(ctx.bits());
  const Complex unit = siegel_ramachandra_unit(field, n, ctx);
  const auto g = conjugate_values(field, n, Descriptor::g12n(), ctx, 1);
  const std::int64_t t2 = std::min(mod_floor(2, n), mod_floor(-2, n));
  const Complex* doubled = nullptr;
  for (const ConjugateValue& c : g) {
    if (c.label.form == field.forms.front() && c.label.alpha.s == 0 && c.label.alpha.t == t2) doubled = &c.value;
  }
  if (doubled == nullptr) throw Error(ErrorKind::InvalidArgument, "class of alpha = 2 not found");

  const ModularPoint pt(field.theta.to_complex(), ctx);
  const Complex y = y_function(FractionPair(0, 1, n), pt);
  const Complex diff = log(*doubled) - log(unit) * Real(4L) - log(y) * Real(12L * n);
  const Real two_pi = ldexp(Real::pi(), 1);
  const Real turns = round(diff.imag() / two_pi);
  const Real phase = diff.imag() - turns * two_pi;

  CheckReport r;
  r.name = "unit-identity";
  r.inputs = config_inputs(field.d, n, ctx);
  r.residuals.push_back({"|log|y^12N| - log|g(C')/g(C0)^4||", abs(diff.real()).to_double(), 1e-20, "<"});
  r.residuals.push_back({"argument difference mod 2pi", abs(phase).to_double(), 1e-20, "<"});
  r.finish();
  r.elapsed = seconds_since(start);
  return r;
}

std::vector<EllipticPoint> elliptic_points_level4() {
  return {
      {{1, 0, 0, 1}, 3, "zeta3"},
      {{1, 1, 0, 1}, 3, "zeta3+1"},
      {{1, 2, 0, 1}, 3, "zeta3+2"},
      {{1, 3, 0, 1}, 3, "zeta3+3"},
      {{0, 1, -1, 1}, 3, "1/(-zeta3+1)"},
      {{0, 1, -1, 2}, 3, "1/(-zeta3+2)"},
      {{1, -1, -1, 2}, 3, "(zeta3-1)/(-zeta3+2)"},
      {{1, -2, 1, -1}, 3, "(zeta3-2)/(zeta3-1)"},
      {{1, 0, 0, 1}, 4, "zeta4"},
      {{1, 1, 0, 1}, 4, "zeta4+1"},
      {{1, 2, 0, 1}, 4, "zeta4+2"},
      {{1, 3, 0, 1}, 4, "zeta4+3"},
      {{0, 1, -1, 1}, 4, "1/(-zeta4+1)"},
      {{0, 1, -1, 2}, 4, "1/(-zeta4+2)"},
      {{0, 1, -1, 3}, 4, "1/(-zeta4+3)"},
      {{1, 1, 1, 2}, 4, "(zeta4+1)/(zeta4+2)"},
      {{1, -1, -1, 2}, 4, "(zeta4-1)/(-zeta4+2)"},
      {{1, -2, 1, -1}, 4, "(zeta4-2)/(zeta4-1)"},
      {{1, 2, -1, -1}, 4, "(zeta4+2)/(-zeta4-1)"},
      {{2, 1, 3, 2}, 4, "(2zeta4+1)/(3zeta4+2)"},
  };
}

Complex y_at_image(const Matrix2& gamma, int order, std::int64_t n, const PrecisionContext& ctx) {
  if (gamma.det() != 1) throw Error(ErrorKind::InvalidArgument, "matrix must lie in SL2(Z)");
  WorkingPrecision guard(ctx.bits());
  const Complex base = order == 3 ? Complex(Real::ratio(-1, 2), sqrt(Real(3L)) / Real(2L))
                                  : Complex(Real(0L), Real(1L));
  const ModularPoint pt(base, ctx);
  const FractionPair index = FractionPair(gamma.c, gamma.d, n).reduced();
  return zeta12(-3 * siegel_multiplier_exponent(gamma)) * y_function(index, pt);
}

CheckReport elliptic_point_distinctness(const PrecisionContext& ctx) {
  const auto start = Clock::now();
  WorkingPrecision guard(ctx.bits());
  const auto points = elliptic_points_level4();
  std::vector<Complex> values;
  for (const EllipticPoint& p : points) values.push_back(y_at_image(p.gamma, p.order, 4, ctx));
  double closest = std::numeric_limits<double>::infinity();
  std::size_t ci = 0, cj = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const double dist = scaled_distance(values[i], values[j]);
      if (dist < closest) {
        closest = dist;
        ci = i;
        cj = j;
      }
    }
  }
  CheckReport r;
  r.name = "elliptic4";
  r.inputs = {{"level", "4"}, {"precision_bits", std::to_string(ctx.bits())}, {"eps", fmt(ctx.eps())}};
  r.residuals.push_back({"|points| - 20", std::abs(static_cast<double>(points.size()) - 20.0), 0.5, "<"});
  r.residuals.push_back({"closest pair distance", closest, 1e3 * ctx.eps(), ">"});
  r.notes.push_back("closest pair " + points[ci].label + " and " + points[cj].label);
  r.notes.push_back("values obtained at zeta3 or zeta4 through the SL2(Z) transformation of y");
  r.finish();
  r.elapsed = seconds_since(start);
  return r;
}

}  // namespace rayclass
