#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "rayclass/verify.hpp"

namespace rayclass::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<std::int64_t> dk;
  std::optional<std::int64_t> level;
  int precision_bits = 256;
  double eps = 1e-40;
  std::string threads = "auto";
  std::string output = "json";
  bool timing = false;
  int den_max = 48;
  double recog_tol = 1e-10;

  std::string fn;
  std::string tau;
  std::string r;
  std::string descriptor;
  std::string a = "1";
  double x = 1;
  long scale = 1;
  bool relaxed = false;
};

struct Outcome {
  json result;
  int code = 0;
};

int thread_count(const RunConfig& cfg) {
  if (cfg.threads == "auto") return 0;
  try {
    std::size_t used = 0;
    const int n = std::stoi(cfg.threads, &used);
    if (used == cfg.threads.size() && n >= 1) return n;
  } catch (const std::logic_error&) {
  }
  throw UsageError("--threads expects a positive integer or 'auto'");
}

std::int64_t need(const std::optional<std::int64_t>& v, const char* name) {
  if (!v) throw UsageError(std::string("missing ") + name);
  return *v;
}

std::int64_t need_level(const RunConfig& cfg) {
  const std::int64_t n = need(cfg.level, "--level");
  if (n < 2) throw UsageError("--level must be at least 2");
  return n;
}

json complex_json(const Complex& z) {
  const auto [re, im] = to_strings(z);
  return json::array({re, im});
}

std::string fraction_string(const Fraction& f) {
  if (f.denominator() == 1) return std::to_string(f.numerator());
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

json form_json(const ReducedForm& q) { return json::array({q.a, q.b, q.c}); }

Complex parse_tau(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--tau expects re,im");
  try {
    return {Real::parse(text.substr(0, comma)), Real::parse(text.substr(comma + 1))};
  } catch (const std::invalid_argument&) {
    throw UsageError("cannot parse --tau '" + text + "'");
  }
}

json report_json(const CheckReport& r, bool timing) {
  json out;
  out["name"] = r.name;
  out["pass"] = r.pass;
  json inputs = json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  out["inputs"] = inputs;
  json residuals = json::array();
  for (const Residual& x : r.residuals) {
    residuals.push_back(
        {{"label", x.label}, {"value", x.value}, {"relation", x.relation}, {"tolerance", x.tolerance}, {"ok", x.ok()}});
  }
  out["residuals"] = residuals;
  out["notes"] = r.notes;
  if (timing) out["elapsed"] = r.elapsed;
  return out;
}

Outcome report_outcome(const CheckReport& r, bool timing) { return {report_json(r, timing), r.pass ? 0 : 1}; }

json polynomial_json(const Polynomial& p) {
  json coeffs = json::array();
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    json c;
    c["power"] = k;
    c["value"] = complex_json(p.coeffs[k]);
    if (p.recognized[k]) {
      const Recognized& e = *p.recognized[k];
      c["exact"] = {{"m", e.m.get_str()}, {"n", e.n.get_str()}, {"den", e.den}};
    } else {
      c["exact"] = nullptr;
    }
    coeffs.push_back(c);
  }
  return {{"degree", p.degree()}, {"fully_recognized", p.fully_recognized()}, {"coefficients", coeffs}};
}

json label_json(const GaloisLabel& l) { return {{"t", l.alpha.t}, {"s", l.alpha.s}, {"form", form_json(l.form)}}; }

Outcome run_eval(const RunConfig& cfg, const PrecisionContext& ctx) {
  static const std::vector<std::string> with_index = {"siegel", "wp", "wp-prime", "x", "y"};
  const bool indexed = std::find(with_index.begin(), with_index.end(), cfg.fn) != with_index.end();
  if (indexed && cfg.r.empty()) throw UsageError(cfg.fn + " needs --r");
  if (!indexed && !cfg.r.empty()) throw UsageError(cfg.fn + " takes no --r");

  WorkingPrecision guard(ctx.bits());
  const ModularPoint pt(parse_tau(cfg.tau), ctx);
  std::optional<FractionPair> r;
  if (indexed) r = FractionPair::parse(cfg.r);

  Complex value;
  if (cfg.fn == "eta") value = eta(pt);
  else if (cfg.fn == "g2") value = eisenstein(pt).g2;
  else if (cfg.fn == "g3") value = eisenstein(pt).g3;
  else if (cfg.fn == "delta") value = delta(pt);
  else if (cfg.fn == "j") value = j_invariant(pt);
  else if (cfg.fn == "u") value = u_function(pt);
  else if (cfg.fn == "v") value = v_function(pt);
  else if (cfg.fn == "siegel") value = siegel(*r, pt);
  else if (cfg.fn == "wp") value = weierstrass_p(*r, pt);
  else if (cfg.fn == "wp-prime") value = weierstrass_p_prime(*r, pt);
  else if (cfg.fn == "x") value = x_function(*r, pt);
  else value = y_function(*r, pt);

  json out;
  out["function"] = cfg.fn;
  out["tau"] = complex_json(pt.tau());
  if (r) out["r"] = r->to_string();
  out["value"] = complex_json(value);
  out["precision_bits"] = ctx.bits();
  out["terms"] = pt.terms();
  return {out};
}

Outcome run_forms(const RunConfig& cfg) {
  const Field f = make_field(need(cfg.dk, "--dk"));
  json list = json::array();
  for (const ReducedForm& q : f.forms) {
    list.push_back({{"a", q.a}, {"b", q.b}, {"c", q.c}, {"theta_Q", cm_point(q, f.d).to_string()}});
  }
  return {{{"forms", list}}};
}

Outcome run_field(const RunConfig& cfg) {
  const Field f = make_field(need(cfg.dk, "--dk"));
  return {{{"theta", f.theta.to_string()}, {"h", f.h}, {"B", f.B}, {"C", f.C}}};
}

Outcome run_degree(const RunConfig& cfg) {
  const Field f = make_field(need(cfg.dk, "--dk"));
  const std::int64_t n = need_level(cfg);
  const std::vector<IdealFactor> factors = factor_ideal(f.d, n);
  json fac = json::array();
  for (const IdealFactor& p : factors) {
    fac.push_back({{"p", p.p},
                   {"splitting", to_string(p.splitting)},
                   {"e", p.e},
                   {"norm", p.norm},
                   {"conjugate", p.conjugate},
                   {"phi", ideal_phi(p)}});
  }
  const HypothesisReport hyp = check_hypothesis(f, n);
  json h;
  h["holds"] = hyp.holds;
  h["bound"] = hyp.bound;
  h["reciprocal_sum"] = fraction_string(hyp.reciprocal_sum);
  h["reciprocal_test"] = hyp.reciprocal_test ? json(*hyp.reciprocal_test) : json(nullptr);
  return {{{"degree", ray_class_degree(f, factors)}, {"factorization", fac}, {"hypothesis", h}}};
}

Outcome run_conjugates(const RunConfig& cfg, const PrecisionContext& ctx) {
  const Field f = make_field(need(cfg.dk, "--dk"));
  const std::int64_t n = need_level(cfg);
  const Descriptor desc = Descriptor::parse(cfg.descriptor);
  const auto values = conjugate_values(f, n, desc, ctx, thread_count(cfg));
  json list = json::array();
  for (const ConjugateValue& c : values) {
    json item;
    item["label"] = label_json(c.label);
    item["index"] = c.index.to_string();
    item["value"] = complex_json(c.value);
    if (c.second) item["second"] = complex_json(*c.second);
    list.push_back(item);
  }
  return {{{"descriptor", desc.to_string()}, {"count", values.size()}, {"conjugates", list}}};
}

Outcome run_minpoly(const RunConfig& cfg, const PrecisionContext& ctx) {
  const Field f = make_field(need(cfg.dk, "--dk"));
  const std::int64_t n = need_level(cfg);
  const Descriptor desc = Descriptor::parse(cfg.descriptor);
  if (desc.kind == Descriptor::Kind::Pair) throw UsageError("minpoly takes a single-valued descriptor");
  std::vector<Complex> values;
  for (const ConjugateValue& c : conjugate_values(f, n, desc, ctx, thread_count(cfg))) values.push_back(c.value);
  WorkingPrecision guard(ctx.bits());
  json out = polynomial_json(minpoly(values, f, ctx, cfg.den_max, cfg.recog_tol));
  out["descriptor"] = desc.to_string();
  return {out};
}

Outcome run_hcp(const RunConfig& cfg, const PrecisionContext& ctx) {
  const Field f = make_field(need(cfg.dk, "--dk"));
  WorkingPrecision guard(ctx.bits());
  return {polynomial_json(hilbert_class_poly(f, ctx))};
}

double lemma51_a(const RunConfig& cfg, std::int64_t d) {
  if (cfg.a == "D") return std::sqrt(static_cast<double>(-d) / 3.0);
  try {
    std::size_t used = 0;
    const double a = std::stod(cfg.a, &used);
    if (used == cfg.a.size()) return a;
  } catch (const std::logic_error&) {
  }
  throw UsageError("--a expects a number or 'D'");
}

Outcome run_check(const std::string& which, const RunConfig& cfg, const PrecisionContext& ctx) {
  const int threads = thread_count(cfg);
  if (which == "curve") {
    return report_outcome(check_curve_point(make_field(need(cfg.dk, "--dk")), need_level(cfg), ctx, cfg.relaxed),
                          cfg.timing);
  }
  if (which == "surface") {
    WorkingPrecision guard(ctx.bits());
    return report_outcome(check_surface_point(parse_tau(cfg.tau), need_level(cfg), ctx, cfg.scale), cfg.timing);
  }
  if (which == "lemma51") {
    const std::int64_t d = need(cfg.dk, "--dk");
    return report_outcome(check_lemma51(d, lemma51_a(cfg, d), cfg.x, ctx), cfg.timing);
  }
  if (which == "lemma52") {
    return report_outcome(check_lemma52(make_field(need(cfg.dk, "--dk")), need_level(cfg), ctx, threads), cfg.timing);
  }
  if (which == "tbound") {
    return report_outcome(check_t_bound(need_level(cfg), make_field(need(cfg.dk, "--dk")), ctx), cfg.timing);
  }
  if (which == "generation") {
    return report_outcome(check_generation(make_field(need(cfg.dk, "--dk")), need_level(cfg),
                                           Descriptor::parse(cfg.descriptor), ctx, threads),
                          cfg.timing);
  }
  if (which == "unit") {
    return report_outcome(check_unit_identity(make_field(need(cfg.dk, "--dk")), need_level(cfg), ctx), cfg.timing);
  }
  return report_outcome(elliptic_point_distinctness(ctx), cfg.timing);
}

json header(const RunConfig& cfg, const std::string& command) {
  json h;
  h["command"] = command;
  h["dk"] = cfg.dk ? json(*cfg.dk) : json(nullptr);
  h["level"] = cfg.level ? json(*cfg.level) : json(nullptr);
  h["precision_bits"] = cfg.precision_bits;
  h["eps"] = cfg.eps;
  h["tool_version"] = RAYCLASS_VERSION;
  return h;
}

bool is_scalar_list(const json& j) {
  if (!j.is_array()) return false;
  for (const json& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s;
    for (const json& e : j) s += (s.empty() ? "" : " ") + scalar_text(e);
    return s;
  }
  return j.dump();
}

void print_text(const json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (!v.is_structured() || is_scalar_list(v)) {
        out << pad << k << ": " << scalar_text(v) << '\n';
      } else {
        out << pad << k << ":\n";
        print_text(v, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const json& e : j) {
      if (!e.is_structured() || is_scalar_list(e)) {
        out << pad << "- " << scalar_text(e) << '\n';
      } else {
        out << pad << "-\n";
        print_text(e, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

void emit(const json& payload, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output == "text") {
    print_text(payload, out, 0);
  } else {
    out << payload.dump(2) << '\n';
  }
}

int fail(const RunConfig& cfg, const std::string& command, const std::string& kind, const std::string& message,
         int code, std::ostream& out, std::ostream& err) {
  json payload = header(cfg, command);
  payload["error"] = {{"kind", kind}, {"message", message}, {"exit_code", code}};
  emit(payload, cfg, out);
  err << "error: " << message << '\n';
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Ray class field invariants from modular functions"};
  app.set_version_flag("--version", RAYCLASS_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--precision", cfg.precision_bits, "working precision in bits")->capture_default_str();
  app.add_option("--eps", cfg.eps, "absolute error target")->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads or 'auto'")->capture_default_str();
  app.add_option("--output", cfg.output, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--timing", cfg.timing, "include elapsed seconds");
  app.add_option("--den-max", cfg.den_max, "largest denominator for coefficient recognition")->capture_default_str();
  app.add_option("--recog-tol", cfg.recog_tol, "recognition tolerance")->capture_default_str();

  auto add_dk = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--dk", cfg.dk, "fundamental discriminant");
    if (required) opt->required();
  };
  auto add_level = [&](CLI::App* sub) { sub->add_option("--level", cfg.level, "level N")->required(); };
  auto add_descriptor = [&](CLI::App* sub) {
    sub->add_option("--descriptor", cfg.descriptor, "y12N, y<k>, x, pair or g12N")->required();
  };

  auto* eval = app.add_subcommand("eval", "evaluate a modular function at tau");
  eval->add_option("fn", cfg.fn, "function")
      ->required()
      ->check(CLI::IsMember({"eta", "g2", "g3", "delta", "j", "siegel", "wp", "wp-prime", "u", "v", "x", "y"}));
  eval->add_option("--tau", cfg.tau, "re,im")->required();
  eval->add_option("--r", cfg.r, "index a/N,b/N");

  auto* forms = app.add_subcommand("forms", "reduced forms of a discriminant");
  add_dk(forms, true);
  auto* field = app.add_subcommand("field", "field data");
  add_dk(field, true);
  auto* degree = app.add_subcommand("degree", "ray class field degree");
  add_dk(degree, true);
  add_level(degree);
  auto* conjugates = app.add_subcommand("conjugates", "Galois conjugates of an invariant");
  add_dk(conjugates, true);
  add_level(conjugates);
  add_descriptor(conjugates);
  auto* minpoly_cmd = app.add_subcommand("minpoly", "minimal polynomial of an invariant over K");
  add_dk(minpoly_cmd, true);
  add_level(minpoly_cmd);
  add_descriptor(minpoly_cmd);
  auto* hcp = app.add_subcommand("hcp", "Hilbert class polynomial");
  add_dk(hcp, true);

  auto* check = app.add_subcommand("check", "numerical verification");
  check->require_subcommand(1);
  auto* curve = check->add_subcommand("curve", "curve identities at theta");
  add_dk(curve, true);
  add_level(curve);
  curve->add_flag("--relaxed", cfg.relaxed, "skip the d <= -39, N >= 8, 4 | N requirement");
  auto* surface = check->add_subcommand("surface", "surface identity at tau");
  surface->add_option("--tau", cfg.tau, "re,im")->required();
  add_level(surface);
  surface->add_option("--scale", cfg.scale, "projective scale")->capture_default_str();
  auto* lemma51 = check->add_subcommand("lemma51", "exponential inequality in logs");
  add_dk(lemma51, true);
  lemma51->add_option("--a", cfg.a, "form coefficient a, or D for sqrt(-d/3)")->capture_default_str();
  lemma51->add_option("--x", cfg.x, "exponent X")->required();
  auto* lemma52 = check->add_subcommand("lemma52", "|y| at non-principal forms");
  add_dk(lemma52, true);
  add_level(lemma52);
  auto* tbound = check->add_subcommand("tbound", "T factor bounds");
  add_dk(tbound, true);
  add_level(tbound);
  auto* generation = check->add_subcommand("generation", "orbit size and distinctness");
  add_dk(generation, true);
  add_level(generation);
  add_descriptor(generation);
  auto* unit = check->add_subcommand("unit", "y^(12N) against Siegel-Ramachandra units");
  add_dk(unit, true);
  add_level(unit);
  check->add_subcommand("elliptic4", "distinct y values at the level 4 elliptic points");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
  for (CLI::App* sub : check->get_subcommands({})) sub->fallthrough();

  std::string command = "unknown";
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(cfg, command, "Usage", e.what(), 2, out, err);
  }

  CLI::App* chosen = app.get_subcommands().front();
  command = chosen->get_name();
  std::string sub_name;
  if (chosen == check) {
    sub_name = check->get_subcommands().front()->get_name();
    command += " " + sub_name;
    if (sub_name == "elliptic4") cfg.level = 4;
  }

  try {
    const PrecisionContext ctx(cfg.precision_bits, cfg.eps);
    thread_count(cfg);
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    if (chosen == eval) result = run_eval(cfg, ctx);
    else if (chosen == forms) result = run_forms(cfg);
    else if (chosen == field) result = run_field(cfg);
    else if (chosen == degree) result = run_degree(cfg);
    else if (chosen == conjugates) result = run_conjugates(cfg, ctx);
    else if (chosen == minpoly_cmd) result = run_minpoly(cfg, ctx);
    else if (chosen == hcp) result = run_hcp(cfg, ctx);
    else result = run_check(sub_name, cfg, ctx);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    json payload = header(cfg, command);
    payload["result"] = result.result;
    if (cfg.timing) payload["elapsed_seconds"] = elapsed.count();
    emit(payload, cfg, out);
    return result.code;
  } catch (const UsageError& e) {
    return fail(cfg, command, "Usage", e.what(), 2, out, err);
  } catch (const Error& e) {
    return fail(cfg, command, to_string(e.kind()), e.what(), is_numerical(e.kind()) ? 3 : 2, out, err);
  } catch (const std::invalid_argument& e) {
    return fail(cfg, command, "InvalidArgument", e.what(), 2, out, err);
  }
}

}  // namespace rayclass::cli
