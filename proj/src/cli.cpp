#include "kahler/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "kahler/acceptance.hpp"
#include "kahler/contour.hpp"
#include "kahler/errors.hpp"
#include "kahler/expr.hpp"
#include "kahler/meromorphic.hpp"
#include "kahler/one_form.hpp"
#include "kahler/oracle.hpp"
#include "kahler/residue.hpp"

namespace kahler::cli {

namespace {

using json = nlohmann::ordered_json;

// Tolerances that are fixed in the library, echoed so that structured output
// records what the numbers were computed under.
constexpr double kAxisTolerance = 1e-9;
constexpr double kTwoFormTolerance = 1e-10;

json pair(EvenElement e) { return json::array({e.u, e.v}); }

json pole_json(const Pole& p) { return {{"location", pair(p.location)}, {"order", p.order}}; }

struct Options {
  std::string expression;
  std::vector<std::string> bind;
  bool as_json = false;
  // geometry
  std::string center = "0,0";
  double radius = 1.0;
  bool clockwise = false;
  double clearance = 1e-6;
  // laurent
  int from = -4;
  int to = 4;
  // cauchy
  std::string at;
  std::optional<int> n;
  // integrate-line
  std::string half_plane = "auto";
  double tail_cutoff = 0.0;
  // residues
  int window = kDefaultWindow;
  // verification
  bool verify = false;
  double tol = 1e-8;
  // classify
  std::string k_expr;
  std::string g_expr;
  std::string w_expr;
  int samples = 24;
};

std::map<std::string, double> parse_bindings(const std::vector<std::string>& binds) {
  std::map<std::string, double> out;
  for (const auto& b : binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--bind expects name=value, got '" + b + "'");
    const std::string name = b.substr(0, eq);
    const Expr value = parse(b.substr(eq + 1), {ParseMode::contour, out});
    if (value.depends_on("z")) throw UsageError("--bind value for '" + name + "' must be a constant");
    const EvenElement v = evaluate(value, {});
    if (v.v != 0.0) throw UsageError("--bind value for '" + name + "' must be real (use I in the expression instead)");
    out[name] = v.u;
  }
  return out;
}

// "u,v" or a constant expression such as "I" or "pi/2 + I".
EvenElement parse_point(const std::string& text, const std::map<std::string, double>& bindings,
                        const std::string& what) {
  const auto comma = text.find(',');
  if (comma != std::string::npos) {
    try {
      std::size_t used_u = 0;
      std::size_t used_v = 0;
      const std::string us = text.substr(0, comma);
      const std::string vs = text.substr(comma + 1);
      const double u = std::stod(us, &used_u);
      const double v = std::stod(vs, &used_v);
      if (used_u == us.size() && used_v == vs.size()) return {u, v};
    } catch (const std::exception&) {
    }
    throw UsageError(what + " must be 'u,v' or a constant expression, got '" + text + "'");
  }
  const Expr e = parse(text, {ParseMode::contour, bindings});
  if (e.depends_on("z")) throw UsageError(what + " must be a constant, got '" + text + "'");
  return evaluate(e, {});
}

MeromorphicFunction build_function(const std::string& text, ParseMode mode,
                                   const std::map<std::string, double>& bindings) {
  if (text.empty()) throw UsageError("expression must not be empty");
  return to_meromorphic(parse(text, {mode, bindings}));
}

// The document skeleton: schema version, verb, and the echoed inputs. Verbs
// add their own fields under "input".
json make_document(const std::string& verb, const Options& o, const std::map<std::string, double>& bindings) {
  json doc;
  doc["schema_version"] = "1";
  doc["command"] = verb;
  json in = json::object();
  if (!o.expression.empty()) in["expression"] = o.expression;
  json b = json::object();
  for (const auto& [k, v] : bindings) b[k] = v;
  in["bindings"] = b;
  doc["input"] = in;
  return doc;
}

void add_inputs(json& doc, const json& fields) {
  for (const auto& [k, v] : fields.items()) doc["input"][k] = v;
}

void print_warnings(std::ostream& out, const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) out << "warning: " << w << "\n";
}

// --- verbs ------------------------------------------------------------------

int cmd_residues(const Options& o, std::ostream& out) {
  const auto bindings = parse_bindings(o.bind);
  const auto f = build_function(o.expression, ParseMode::contour, bindings);
  const auto poles = find_poles(f);

  json doc = make_document("residues", o, bindings);
  add_inputs(doc, json{{"window", o.window}, {"verify", o.verify}});
  doc["function"] = f.describe();
  json jp = json::array();
  json jr = json::array();
  json details = json::array();
  std::vector<std::string> warnings;

  std::ostringstream text;
  text << "function: " << f.describe() << "\n";
  text << "poles: " << poles.size() << "\n";
  for (const auto& p : poles) {
    const auto report = residue_by_order_reduction(f, p, o.window);
    const EvenElement a = residue(f, p, o.window);
    json entry = pole_json(p);
    entry["residue"] = pair(a);
    entry["leading"] = pair(report.leading);
    json steps = json::array();
    for (const auto& e : report.extractions) steps.push_back({{"power", e.power}, {"coefficient", pair(e.coefficient)}});
    entry["order_reduction"] = steps;

    text << "  pole " << to_string(p.location) << "  order " << p.order << "\n";
    text << "    residue a_-1 = " << to_string(a) << "\n";
    text << "    leading a_-" << p.order << " = " << to_string(report.leading) << "\n";
    for (const auto& e : report.extractions) {
      text << "    order reduction: z'^" << e.power << " coefficient " << to_string(e.coefficient) << "\n";
    }

    if (o.verify) {
      const EvenElement d = residue_by_derivative_formula(f, p).a_minus_1;
      const double rel = abs(d - a) / std::max(abs(a), 1e-300);
      entry["derivative_formula"] = pair(d);
      entry["derivative_formula_relative_difference"] = rel;
      text << "    derivative formula = " << to_string(d) << "  (relative difference " << format_real(rel) << ")\n";
      if (!(rel <= 1e-6)) {
        warnings.push_back("derivative formula disagrees with the series residue at " + to_string(p.location));
      }
    }
    jp.push_back(pole_json(p));
    jr.push_back(pair(a));
    details.push_back(entry);
  }
  doc["poles"] = jp;
  doc["residues"] = jr;
  doc["details"] = details;
  doc["warnings"] = warnings;
  doc["tolerances"] = {{"cluster_tolerance", RootFinderOptions{}.cluster_tolerance},
                       {"cancel_tolerance", NormalizeOptions{}.cancel_tolerance},
                       {"series_snap", kDefaultSnap},
                       {"derivative_formula_agreement", 1e-6}};
  if (o.as_json) {
    out << doc.dump(2) << "\n";
  } else {
    out << text.str();
    print_warnings(out, warnings);
  }
  return kOk;
}

int cmd_laurent(const Options& o, std::ostream& out) {
  const auto bindings = parse_bindings(o.bind);
  const auto f = build_function(o.expression, ParseMode::contour, bindings);
  const EvenElement z0 = parse_point(o.center, bindings, "--center");
  const auto series = laurent_expand(f, z0, o.from, o.to);

  json doc = make_document("laurent", o, bindings);
  add_inputs(doc, json{{"center", pair(z0)}, {"from", o.from}, {"to", o.to}});
  doc["function"] = f.describe();
  json coeffs = json::array();
  for (int n = o.from; n <= o.to; ++n) coeffs.push_back({{"n", n}, {"value", pair(series.coefficient(n))}});
  doc["valuation"] = series.is_zero() ? json(nullptr) : json(series.valuation());
  doc["coefficients"] = coeffs;
  doc["warnings"] = json::array();
  doc["tolerances"] = {{"series_snap", kDefaultSnap}, {"max_window", kMaxLaurentWindow}};
  if (o.as_json) {
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "function: " << f.describe() << "\n";
  out << "center: " << to_string(z0) << "\n";
  for (int n = o.from; n <= o.to; ++n) out << "a_" << n << " = " << to_string(series.coefficient(n)) << "\n";
  return kOk;
}

json integral_json(const IntegralResult& r) {
  json enclosed = json::array();
  for (const auto& p : r.enclosed) enclosed.push_back(pole_json(p));
  json residues = json::array();
  for (const auto& a : r.residues) residues.push_back(pair(a));
  return {{"value", r.real_value}, {"imaginary_defect", r.imaginary_defect}, {"poles", enclosed}, {"residues", residues}};
}

void print_integral(std::ostream& out, const IntegralResult& r) {
  out << "value: " << format_real(r.real_value) << "\n";
  out << "imaginary_defect: " << format_real(r.imaginary_defect) << "\n";
  out << "enclosed poles: " << r.enclosed.size() << "\n";
  for (std::size_t i = 0; i < r.enclosed.size(); ++i) {
    out << "  " << to_string(r.enclosed[i].location) << "  order " << r.enclosed[i].order << "  residue "
        << to_string(r.residues[i]) << "\n";
  }
}

int cmd_integrate_contour(const Options& o, std::ostream& out) {
  const auto bindings = parse_bindings(o.bind);
  const auto f = build_function(o.expression, ParseMode::contour, bindings);
  const EvenElement center = parse_point(o.center, bindings, "--center");
  if (!(o.radius > 0.0)) throw UsageError("--radius must be positive");
  const CircleContour c{center, o.radius, o.clockwise ? Orientation::clockwise : Orientation::counterclockwise,
                        o.clearance};
  auto result = integrate_closed(f, c);

  json doc = make_document("integrate-contour", o, bindings);
  add_inputs(doc, json{{"center", pair(center)},
                  {"radius", o.radius},
                  {"orientation", o.clockwise ? "clockwise" : "counterclockwise"},
                  {"verify", o.verify}});
  doc["function"] = f.describe();

  std::optional<DifferentialReport> check;
  if (o.verify) {
    QuadratureSpec spec;
    spec.tol = std::min(spec.tol, 1e-3 * o.tol);
    check = differential_check(f, c, o.tol, spec);
    if (!check->passed) result.warnings.push_back("oracle disagreement: " + check->detail);
  }

  const json body = integral_json(result);
  for (const auto& [k, v] : body.items()) doc[k] = v;
  doc["warnings"] = result.warnings;
  if (check) {
    doc["verification"] = {{"passed", check->passed},
                           {"oracle_value", check->numeric},
                           {"oracle_imaginary_defect", check->numeric_defect},
                           {"nodes", check->n_points},
                           {"detail", check->detail}};
  }
  doc["tolerances"] = {{"pole_clearance", c.clearance()}, {"oracle_agreement", o.tol}};
  if (o.as_json) {
    out << doc.dump(2) << "\n";
  } else {
    out << "function: " << f.describe() << "\n";
    print_integral(out, result);
    if (check) {
      out << "oracle: " << (check->passed ? "PASS" : "FAIL") << "  value " << format_real(check->numeric)
          << "  imaginary_defect " << format_real(check->numeric_defect) << "  (" << check->n_points << " nodes)\n";
    }
    print_warnings(out, result.warnings);
  }
  return kOk;
}

HalfPlane parse_half_plane(const std::string& s) {
  if (s == "auto") return HalfPlane::automatic;
  if (s == "upper") return HalfPlane::upper;
  if (s == "lower") return HalfPlane::lower;
  throw UsageError("--half-plane must be auto, upper or lower");
}

int cmd_integrate_line(const Options& o, std::ostream& out) {
  const auto bindings = parse_bindings(o.bind);
  const auto h = build_function(o.expression, ParseMode::real_line, bindings);
  const HalfPlane requested = parse_half_plane(o.half_plane);
  auto result = integrate_real_line(h, requested);
  const bool upper = result.enclosed.empty() ? requested != HalfPlane::lower
                                             : result.enclosed.front().location.v > 0.0;

  json doc = make_document("integrate-line", o, bindings);
  add_inputs(doc, json{{"half_plane", o.half_plane}, {"verify", o.verify}});
  doc["function"] = h.describe();

  std::optional<LineQuadrature> q;
  QuadratureSpec spec;
  if (o.verify) {
    const auto tail = tail_model(h);
    spec.tol = o.tol;
    spec.tail_cutoff = o.tail_cutoff > 0.0 ? o.tail_cutoff : suggest_tail_cutoff(tail, 0.5 * o.tol);
    q = quad_real_line([&h](double x) { return h({x, 0.0}).u; }, tail, spec);
    if (!(std::abs(q->value - result.real_value) <= o.tol)) {
      result.warnings.push_back("oracle disagreement: quadrature gives " + format_real(q->value));
    }
  }

  const json body = integral_json(result);
  for (const auto& [k, v] : body.items()) doc[k] = v;
  doc["half_plane"] = upper ? "upper" : "lower";
  doc["warnings"] = result.warnings;
  if (q) {
    doc["verification"] = {{"passed", std::abs(q->value - result.real_value) <= o.tol},
                           {"oracle_value", q->value},
                           {"tail_bound", q->tail_bound},
                           {"tail_cutoff", spec.tail_cutoff},
                           {"panels", q->panels}};
  }
  doc["tolerances"] = {{"real_axis_pole", kAxisTolerance}, {"oracle_agreement", o.tol}};
  if (o.as_json) {
    out << doc.dump(2) << "\n";
  } else {
    out << "function: " << h.describe() << "\n";
    out << "half_plane: " << (upper ? "upper" : "lower") << "\n";
    print_integral(out, result);
    if (q) {
      out << "oracle: " << (std::abs(q->value - result.real_value) <= o.tol ? "PASS" : "FAIL") << "  value "
          << format_real(q->value) << "  (tail bound " << format_real(q->tail_bound) << ", cutoff "
          << format_real(spec.tail_cutoff) << ", " << q->panels << " panels)\n";
    }
    print_warnings(out, result.warnings);
  }
  return kOk;
}

int cmd_cauchy(const Options& o, std::ostream& out) {
  const auto bindings = parse_bindings(o.bind);
  const auto f = build_function(o.expression, ParseMode::contour, bindings);
  if (o.at.empty()) throw UsageError("cauchy requires --at");
  const EvenElement z0 = parse_point(o.at, bindings, "--at");

  json doc = make_document("cauchy", o, bindings);
  add_inputs(doc, json{{"at", pair(z0)}});
  doc["function"] = f.describe();
  std::vector<std::string> warnings;
  EvenElement value;
  EvenElement integral;
  bool applicable = false;
  if (o.n && *o.n != 0) {
    if (*o.n < 0) throw UsageError("--n must be non-negative");
    const auto d = cauchy_derivative(f, z0, *o.n);
    value = d.derivative;
    integral = d.integral;
    applicable = d.applicable;
    doc["input"]["n"] = *o.n;
    doc["derivative"] = pair(value);
  } else {
    const auto c = cauchy_evaluate(f, z0);
    value = c.value;
    integral = c.integral;
    applicable = c.applicable;
    doc["value"] = pair(value);
  }
  if (!applicable) {
    warnings.push_back("the evaluated term is not a pure 2-form (u-part nonzero); the integral " +
                       to_string(integral) + " is not the value of a real 1-form integral");
  }
  doc["applicable"] = applicable;
  doc["integral"] = pair(integral);
  doc["warnings"] = warnings;
  doc["tolerances"] = {{"two_form", kTwoFormTolerance}};
  if (o.as_json) {
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "function: " << f.describe() << "\n";
  out << "at: " << to_string(z0) << "\n";
  if (o.n && *o.n != 0) {
    out << "derivative (n = " << *o.n << "): " << to_string(value) << "\n";
  } else {
    out << "value: " << to_string(value) << "\n";
  }
  out << "applicable: " << (applicable ? "yes" : "no") << "\n";
  out << "integral: " << to_string(integral) << "\n";
  print_warnings(out, warnings);
  return kOk;
}

PlaneFunction plane_component(const std::string& text, const std::map<std::string, double>& bindings,
                              const std::string& what) {
  const Expr e = parse(text, {ParseMode::plane, bindings});
  return [e, what](double x, double y) {
    const EvenElement v = evaluate(e, {{x, y}, x, y});
    if (v.v != 0.0) throw UsageError(what + " must be real-valued; got " + to_string(v));
    return v.u;
  };
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto bindings = parse_bindings(o.bind);
  OneForm form;
  json in;
  if (!o.w_expr.empty()) {
    if (!o.k_expr.empty() || !o.g_expr.empty()) throw UsageError("give either --w or --k/--g, not both");
    form = OneForm::from_w(build_function(o.w_expr, ParseMode::contour, bindings));
    in["w"] = o.w_expr;
  } else {
    if (o.k_expr.empty() || o.g_expr.empty()) throw UsageError("classify requires --w, or both --k and --g");
    form.k = plane_component(o.k_expr, bindings, "--k");
    form.g = plane_component(o.g_expr, bindings, "--g");
    in["k"] = o.k_expr;
    in["g"] = o.g_expr;
  }
  if (o.samples < 1) throw UsageError("--samples must be positive");
  const EvenElement center = parse_point(o.center, bindings, "--center");
  if (!(o.radius > 0.0)) throw UsageError("--radius must be positive");

  // Points on the circle and on the circle of half the radius.
  std::vector<EvenElement> samples;
  for (int i = 0; i < o.samples; ++i) {
    const double t = 2.0 * std::numbers::pi * (i + 0.5) / o.samples;
    const double r = i % 2 == 0 ? o.radius : 0.5 * o.radius;
    samples.push_back(center + EvenElement{r * std::cos(t), r * std::sin(t)});
  }
  const ClassifyOptions opts;
  const FormClass verdict = classify_one_form(form, samples, opts);

  json doc = make_document("classify", o, bindings);
  add_inputs(doc, in);
  doc["input"]["center"] = pair(center);
  doc["input"]["radius"] = o.radius;
  doc["input"]["samples"] = o.samples;
  doc["class"] = to_string(verdict);
  doc["warnings"] = json::array();
  doc["tolerances"] = {{"step", opts.step}, {"tolerance", opts.tolerance}, {"clearance", opts.clearance}};
  if (o.as_json) {
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "class: " << to_string(verdict) << "\n";
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto results = acceptance::run_all();
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& c) { return c.passed; });
  if (o.as_json) {
    json doc;
    doc["schema_version"] = "1";
    doc["command"] = "check";
    json list = json::array();
    for (const auto& c : results) {
      list.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    doc["criteria"] = list;
    doc["passed"] = all;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& c : results) out << acceptance::format_line(c) << "\n";
    out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  }
  return all ? kOk : kComputationError;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--bind", o.bind, "Bind a real parameter, name=value (repeatable)")->type_name("NAME=VALUE");
  sub->add_flag("--json", o.as_json, "Emit the structured JSON document instead of text");
}

// ParseError carries a position; show it under the expression.
void report_parse_error(const ParseError& e, const Options& o, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  const std::string& text = !o.expression.empty() ? o.expression : !o.w_expr.empty() ? o.w_expr : std::string{};
  if (!text.empty() && e.position() <= text.size()) {
    err << "  " << text << "\n  " << std::string(e.position(), ' ') << "^\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Residue calculus in the Kähler algebra of the plane: z = x + y·dxdy, dxdy playing the imaginary unit.",
               "kahler"};
  app.require_subcommand(1);
  app.footer(
      "Expressions use z, I (= dxdy), pi, + - * / ^ with integer exponents, and exp/sin/cos of c·z.\n"
      "Points are given as 'u,v' or as a constant expression such as 'I' or '1+2*I'.\n"
      "Exit status: 0 success, 1 computation error, 2 usage or parse error.");
  Options o;

  auto* residues = app.add_subcommand("residues", "Poles of f and their residues (series and order reduction)");
  residues->add_option("expression", o.expression, "f(z)")->required();
  residues->add_option("--window", o.window, "Series window")->capture_default_str()->check(CLI::Range(1, 64));
  residues->add_flag("--verify", o.verify, "Cross-check with the finite-difference derivative formula");
  add_common(residues, o);

  auto* laurent = app.add_subcommand("laurent", "Laurent coefficients a_from .. a_to about a point");
  laurent->add_option("expression", o.expression, "f(z)")->required();
  laurent->add_option("--center", o.center, "Expansion point")->capture_default_str();
  laurent->add_option("--from", o.from, "Lowest exponent")->capture_default_str();
  laurent->add_option("--to", o.to, "Highest exponent")->capture_default_str();
  add_common(laurent, o);

  auto* contour = app.add_subcommand("integrate-contour", "Integral of f dx around a circle by residues");
  contour->add_option("expression", o.expression, "f(z)")->required();
  contour->add_option("--center", o.center, "Circle center")->capture_default_str();
  contour->add_option("--radius", o.radius, "Circle radius")->capture_default_str();
  contour->add_flag("--clockwise", o.clockwise, "Traverse clockwise");
  contour->add_option("--clearance", o.clearance, "Pole-free band around the circle, relative to the radius")
      ->capture_default_str();
  contour->add_flag("--verify", o.verify, "Compare with direct quadrature on the circle");
  contour->add_option("--tol", o.tol, "Agreement tolerance for --verify")->capture_default_str();
  add_common(contour, o);

  auto* line = app.add_subcommand("integrate-line", "Integral of H(x) over the real line by half-plane closure");
  line->add_option("expression", o.expression, "H(x)")->required();
  line->add_option("--half-plane", o.half_plane, "auto, upper or lower")->capture_default_str();
  line->add_flag("--verify", o.verify, "Compare with truncated adaptive quadrature");
  line->add_option("--tol", o.tol, "Absolute agreement tolerance for --verify")->capture_default_str();
  line->add_option("--tail-cutoff", o.tail_cutoff, "Quadrature truncation radius (default: from the tail bound)");
  add_common(line, o);

  auto* cauchy = app.add_subcommand("cauchy", "Cauchy's integral formula for f/(z-z0)^(n+1)");
  cauchy->add_option("expression", o.expression, "f(z), regular at z0")->required();
  cauchy->add_option("--at", o.at, "The point z0")->required();
  cauchy->add_option("--n", o.n, "Derivative order (default 0)");
  add_common(cauchy, o);

  auto* classify = app.add_subcommand("classify", "Closedness and Cauchy–Riemann test of k dx + g dy");
  classify->add_option("--k", o.k_expr, "k(x, y)");
  classify->add_option("--g", o.g_expr, "g(x, y)");
  classify->add_option("--w", o.w_expr, "w(z); then k = u(w), g = -v(w)");
  classify->add_option("--center", o.center, "Center of the sample circles")->capture_default_str();
  classify->add_option("--radius", o.radius, "Radius of the outer sample circle")->capture_default_str();
  classify->add_option("--samples", o.samples, "Number of sample points")->capture_default_str();
  add_common(classify, o);

  auto* check = app.add_subcommand("check", "Run the built-in reference-value suite");
  check->add_flag("--json", o.as_json, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    const auto* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();
    if (verb == "residues") return cmd_residues(o, out);
    if (verb == "laurent") return cmd_laurent(o, out);
    if (verb == "integrate-contour") return cmd_integrate_contour(o, out);
    if (verb == "integrate-line") return cmd_integrate_line(o, out);
    if (verb == "cauchy") return cmd_cauchy(o, out);
    if (verb == "classify") return cmd_classify(o, out);
    return cmd_check(o, out);
  } catch (const ParseError& e) {
    report_parse_error(e, o, err);
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kComputationError;
  }
}

}  // namespace kahler::cli
