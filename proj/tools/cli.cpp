#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "format.hpp"
#include "norm_spec.hpp"
#include "normplane/checks.hpp"
#include "normplane/error.hpp"
#include "report_document.hpp"
#include "svg_plot.hpp"

namespace normplane::cli {

namespace {

using exact::Rational;
using exact::RationalVec2;
using nlohmann::json;

// Float and exact paths must agree to this absolute tolerance in --exact mode.
constexpr double kCrossCheckTol = 1e-9;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Mismatch : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string norm;
  std::optional<std::string> point;
  std::optional<double> lambda;
  std::optional<double> epsilon;
  std::optional<double> radius;
  std::optional<double> tol;
  std::optional<int> grid;
  bool exact = false;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::string overlay = "partners,arcs,attainment";
};

struct Point {
  Vec2 value;
  std::optional<RationalVec2> rational;
};

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::pair<double, std::optional<Rational>> parse_component(const std::string& text) {
  try {
    Rational q = exact::parse_rational(text);
    return {q.get_d(), std::move(q)};
  } catch (const Error&) {
  }
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(v)) {
    throw UsageError("invalid coordinate '" + text + "'");
  }
  return {v, std::nullopt};
}

Point parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw UsageError("--point expects 'x,y', got '" + text + "'");
  }
  auto [x, qx] = parse_component(trim(std::string_view(text).substr(0, comma)));
  auto [y, qy] = parse_component(trim(std::string_view(text).substr(comma + 1)));
  Point p{{x, y}, std::nullopt};
  if (qx && qy) p.rational = RationalVec2{*qx, *qy};
  return p;
}

class Command {
 public:
  Command(Options opt, LoadedNorm norm) : opt_(std::move(opt)), norm_(std::move(norm)) {
    if (opt_.grid) {
      if (*opt_.grid < 8) throw UsageError("--grid must be at least 8");
      sweep_.directions = *opt_.grid;
    }
    if (opt_.tol && !(*opt_.tol > 0.0)) throw UsageError("--tol must be positive");
    if (opt_.exact && !norm_.exact) throw UsageError("--exact needs a polygon with rational vertices");
  }

  std::string execute(int& status) {
    const std::string& c = opt_.command;
    std::ostringstream body;
    if (c == "gauge") gauge(body);
    if (c == "partner") partner(body);
    if (c == "beta") beta_cmd(body);
    if (c == "james") james_cmd(body);
    if (c == "schaffer") schaffer_cmd(body);
    if (c == "modulus") modulus(body);
    if (c == "aset") aset(body);
    if (c == "attain") attain(body);
    if (c == "check") status = check(body);
    if (c == "report") report(body);
    if (c == "plot") plot(body);
    return body.str();
  }

 private:
  std::string format(std::string_view fallback = "text") const { return opt_.format.value_or(std::string(fallback)); }

  void no_exact() const {
    if (opt_.exact) throw UsageError("--exact is not available for '" + opt_.command + "'");
  }

  Point point() const {
    if (!opt_.point) throw UsageError("'" + opt_.command + "' needs --point");
    return parse_point(*opt_.point);
  }

  double epsilon() const {
    if (!opt_.epsilon) throw UsageError("'" + opt_.command + "' needs --epsilon");
    return *opt_.epsilon;
  }

  const exact::RationalPolygon& poly() const { return *norm_.exact; }

  RationalVec2 exact_point(const Point& p) const {
    if (!p.rational) throw UsageError("--exact needs a rational --point");
    return *p.rational;
  }

  RationalVec2 exact_unit(const Point& p) const {
    const RationalVec2 q = exact_point(p);
    const Rational g = exact::exact_gauge(poly(), q);
    if (g == 0) throw Error(ErrorCode::kZeroVector, "--point must be nonzero");
    return q / g;
  }

  SolverConfig solver() const {
    SolverConfig s = sweep_.solver;
    if (opt_.tol) s.angle_tol = *opt_.tol;
    return s;
  }

  ReportOptions report_options() const {
    ReportOptions o;
    o.sweep = sweep_;
    if (opt_.tol) o.attainment_tol = *opt_.tol;
    return o;
  }

  static void cross_check(const std::string& what, double exact_value, double float_value) {
    if (!(std::abs(exact_value - float_value) <= kCrossCheckTol)) {
      throw Mismatch(what + ": exact " + format_double(exact_value) + " and float " + format_double(float_value) +
                     " differ by more than " + format_double(kCrossCheckTol));
    }
  }

  json header() const {
    return {{"command", opt_.command}, {"norm", norm_.spec}, {"mode", opt_.exact ? "both" : "float"}};
  }

  void scalar(std::ostream& body, const std::string& name, double value, const std::optional<Rational>& exact) {
    const std::string shown = exact ? exact::to_string(*exact) : format_double(value);
    const std::string f = format();
    if (f == "json") {
      json j = header();
      j["quantity"] = name;
      j["value"] = value;
      if (exact) j["exact"] = exact::to_string(*exact);
      body << j.dump(2) << "\n";
    } else if (f == "csv") {
      body << "quantity,value\n" << name << "," << shown << "\n";
    } else {
      body << shown << "\n";
    }
  }

  void gauge(std::ostream& body) {
    const Point p = point();
    const double value = norm_.model.gauge(p.value);
    std::optional<Rational> q;
    if (opt_.exact) {
      q = exact::exact_gauge(poly(), exact_point(p));
      cross_check("gauge", q->get_d(), value);
    }
    scalar(body, "gauge", value, q);
  }

  void partner(std::ostream& body) {
    const Point p = point();
    if (opt_.exact && opt_.radius) throw UsageError("--radius is not available with --exact");
    const double r = opt_.radius.value_or(norm_.model.gauge(p.value));
    const PartnerResult res = iso_partner(norm_.model, p.value, r, solver());

    std::optional<RationalVec2> y;
    if (opt_.exact) {
      const RationalVec2 q = exact_point(p);
      const Rational g = exact::exact_gauge(poly(), q);
      y = g * exact::exact_iso_partner(poly(), exact_unit(p));
      cross_check("partner x", y->x.get_d(), res.primary.x);
      cross_check("partner y", y->y.get_d(), res.primary.y);
    }
    const std::string shown = y ? exact::to_string(*y) : format_vec(res.primary);
    const std::string f = format();
    if (f == "json") {
      json j = header();
      j["radius"] = r;
      j["partner"] = {res.primary.x, res.primary.y};
      if (y) j["exact"] = exact::to_string(*y);
      j["plateau"] = res.plateau ? json{res.plateau->lo, res.plateau->hi} : json(nullptr);
      body << j.dump(2) << "\n";
    } else if (f == "csv") {
      body << "x,y\n";
      body << (y ? exact::to_string(y->x) : format_double(res.primary.x)) << ","
           << (y ? exact::to_string(y->y) : format_double(res.primary.y)) << "\n";
    } else {
      body << shown << "\n";
      if (res.plateau) {
        body << "plateau [" << format_double(res.plateau->lo) << ", " << format_double(res.plateau->hi) << "]\n";
      }
    }
  }

  void beta_cmd(std::ostream& body) {
    const Point p = point();
    const Vec2 x = normalize(norm_.model, p.value);
    if (opt_.lambda) {
      no_exact();
      scalar(body, "beta_lambda", beta_lambda(norm_.model, x, *opt_.lambda, solver()), std::nullopt);
      return;
    }
    const double value = beta(norm_.model, x, solver());
    std::optional<Rational> q;
    if (opt_.exact) {
      q = exact::exact_beta(poly(), exact_unit(p));
      cross_check("beta", q->get_d(), value);
    }
    scalar(body, "beta", value, q);
  }

  void james_cmd(std::ostream& body) {
    if (opt_.lambda) {
      no_exact();
      scalar(body, "james_generalized", james_generalized(norm_.model, *opt_.lambda, sweep_), std::nullopt);
      return;
    }
    const double value = james(norm_.model, sweep_);
    std::optional<Rational> q;
    if (opt_.exact) {
      q = exact::exact_james(poly());
      cross_check("james", q->get_d(), value);
    }
    scalar(body, "james", value, q);
  }

  void schaffer_cmd(std::ostream& body) {
    no_exact();
    scalar(body, "schaffer", schaffer(norm_.model, sweep_), std::nullopt);
  }

  void modulus(std::ostream& body) {
    no_exact();
    const std::vector<double> eps = opt_.epsilon ? std::vector<double>{*opt_.epsilon} : ReportOptions{}.epsilons;
    std::vector<std::array<double, 4>> rows;
    for (double e : eps) {
      rows.push_back({e, delta(norm_.model, e, sweep_), rho(norm_.model, e, sweep_), rho_prime(norm_.model, e, sweep_)});
    }
    const std::string f = format();
    if (f == "json") {
      json j = header();
      for (const char* key : {"epsilon", "delta", "rho", "rho_prime"}) j[key] = json::array();
      for (const auto& r : rows) {
        j["epsilon"].push_back(r[0]);
        j["delta"].push_back(r[1]);
        j["rho"].push_back(r[2]);
        j["rho_prime"].push_back(r[3]);
      }
      body << j.dump(2) << "\n";
    } else if (f == "csv") {
      body << "epsilon,delta,rho,rho_prime\n";
      for (const auto& r : rows) {
        body << format_double(r[0]) << "," << format_double(r[1]) << "," << format_double(r[2]) << ","
             << format_double(r[3]) << "\n";
      }
    } else if (rows.size() == 1) {
      const auto& r = rows.front();
      body << "epsilon " << format_double(r[0]) << "\n"
           << "delta " << format_double(r[1]) << "\n"
           << "rho " << format_double(r[2]) << "\n"
           << "rho_prime " << format_double(r[3]) << "\n";
    } else {
      body << "epsilon delta rho rho_prime\n";
      for (const auto& r : rows) {
        body << format_double(r[0]) << " " << format_double(r[1]) << " " << format_double(r[2]) << " "
             << format_double(r[3]) << "\n";
      }
    }
  }

  void aset(std::ostream& body) {
    no_exact();
    const Vec2 x = normalize(norm_.model, point().value);
    const auto arc = aset_arc(norm_.model, x, epsilon(), solver());
    const std::string f = format();
    if (f == "json") {
      json j = header();
      j["x"] = {x.x, x.y};
      j["epsilon"] = arc.epsilon();
      j["anchor"] = {arc.anchor().x, arc.anchor().y};
      j["endpoint_right"] = {arc.endpoint_right().x, arc.endpoint_right().y};
      j["endpoint_left"] = {arc.endpoint_left().x, arc.endpoint_left().y};
      j["t_right"] = arc.t_right();
      j["t_left"] = arc.t_left();
      j["start_angle"] = arc.start_angle();
      j["angular_width"] = arc.angular_width();
      body << j.dump(2) << "\n";
      return;
    }
    const std::vector<std::pair<std::string, std::string>> rows{
        {"anchor", format_vec(arc.anchor())},
        {"endpoint_right", format_vec(arc.endpoint_right())},
        {"endpoint_left", format_vec(arc.endpoint_left())},
        {"t_right", format_double(arc.t_right())},
        {"t_left", format_double(arc.t_left())},
        {"start_angle", format_double(arc.start_angle())},
        {"angular_width", format_double(arc.angular_width())}};
    if (f == "csv") {
      body << "quantity,value\n";
      for (const auto& [k, v] : rows) body << k << ",\"" << v << "\"\n";
    } else {
      for (const auto& [k, v] : rows) body << k << " " << v << "\n";
    }
  }

  void attain(std::ostream& body) {
    const double tol = opt_.tol.value_or(1e-9);
    std::vector<AttainmentPair> pairs;
    if (opt_.epsilon) {
      no_exact();
      pairs = delta_attainment(norm_.model, *opt_.epsilon, tol, sweep_);
    } else {
      pairs = james_attainment(norm_.model, tol, sweep_);
    }

    std::vector<exact::ExactAttainmentPair> exact_pairs;
    if (opt_.exact) {
      exact_pairs = exact::exact_james_attainment(poly());
      if (exact_pairs.size() != pairs.size()) {
        throw Mismatch("attainment: exact path found " + std::to_string(exact_pairs.size()) + " pairs, float path " +
                       std::to_string(pairs.size()));
      }
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const Vec2 ex = exact::to_float(exact_pairs[i].x), ey = exact::to_float(exact_pairs[i].y);
        cross_check("attainment x", ex.x, pairs[i].x.x);
        cross_check("attainment x", ex.y, pairs[i].x.y);
        cross_check("attainment y", ey.x, pairs[i].y.x);
        cross_check("attainment y", ey.y, pairs[i].y.y);
      }
    }

    const std::string f = format();
    if (f == "json") {
      json j = header();
      j["pairs"] = json::array();
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        json e = {{"x", {p.x.x, p.x.y}},  {"y", {p.y.x, p.y.y}},
                  {"value", p.value},     {"iso_defect", p.iso_defect},
                  {"verified", p.verified}, {"epsilon0", p.approx_epsilon ? json(*p.approx_epsilon) : json(nullptr)}};
        if (!exact_pairs.empty()) {
          e["exact"] = {{"x", exact::to_string(exact_pairs[i].x)},
                        {"y", exact::to_string(exact_pairs[i].y)},
                        {"value", exact::to_string(exact_pairs[i].value)},
                        {"iso_defect", exact::to_string(exact_pairs[i].iso_defect)}};
        }
        j["pairs"].push_back(std::move(e));
      }
      body << j.dump(2) << "\n";
    } else if (f == "csv") {
      body << "x1,x2,y1,y2,value,iso_defect,epsilon0,verified\n";
      for (const auto& p : pairs) {
        body << format_double(p.x.x) << "," << format_double(p.x.y) << "," << format_double(p.y.x) << ","
             << format_double(p.y.y) << "," << format_double(p.value) << "," << format_double(p.iso_defect) << ","
             << (p.approx_epsilon ? format_double(*p.approx_epsilon) : "") << "," << (p.verified ? "true" : "false")
             << "\n";
      }
    } else {
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        if (!exact_pairs.empty()) {
          const auto& e = exact_pairs[i];
          body << "x=" << exact::to_string(e.x) << " y=" << exact::to_string(e.y) << " value=" << exact::to_string(e.value)
               << " iso_defect=" << exact::to_string(e.iso_defect) << "\n";
          continue;
        }
        body << "x=" << format_vec(p.x) << " y=" << format_vec(p.y) << " value=" << format_double(p.value)
             << " iso_defect=" << format_double(p.iso_defect);
        if (p.approx_epsilon) body << " epsilon0=" << format_double(*p.approx_epsilon);
        body << " verified=" << (p.verified ? "yes" : "no") << "\n";
      }
    }
  }

  int check(std::ostream& body) {
    const auto results =
        run_invariant_checks(norm_.model, report_options(), norm_.exact ? &*norm_.exact : nullptr);
    const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    const std::string f = format();
    if (f == "json") {
      json j = header();
      j["checks"] = json::array();
      for (const auto& r : results) j["checks"].push_back(
            {{"name", r.name}, {"passed", r.passed}, {"residual", r.residual}, {"tolerance", r.tolerance}});
      j["passed"] = passed;
      j["total"] = results.size();
      body << j.dump(2) << "\n";
    } else if (f == "csv") {
      body << "name,passed,residual,tolerance\n";
      for (const auto& r : results) {
        body << r.name << "," << (r.passed ? "true" : "false") << "," << format_double(r.residual) << ","
             << format_double(r.tolerance) << "\n";
      }
    } else {
      for (const auto& r : results) {
        body << (r.passed ? "PASS " : "FAIL ") << r.name << " residual=" << format_double(r.residual)
             << " tolerance=" << format_double(r.tolerance) << "\n";
      }
      body << passed << " of " << results.size() << " checks passed\n";
    }
    return passed == static_cast<std::ptrdiff_t>(results.size()) ? kExitOk : kExitFailure;
  }

  void report(std::ostream& body) {
    const ReportOptions options = report_options();
    const ConstantsReport rep = build_report(norm_.model, options, norm_.exact ? &*norm_.exact : nullptr);
    std::optional<std::string> exact_james;
    if (opt_.exact) {
      const Rational j = exact::exact_james(poly());
      cross_check("james", j.get_d(), rep.james);
      exact_james = exact::to_string(j);
    }
    const ReportDocument doc = make_document(rep, options, norm_.spec, exact_james);
    const std::string f = format("json");
    if (f == "json") {
      body << json(doc).dump(2) << "\n";
    } else if (f == "csv") {
      body << "epsilon,delta,rho,rho_prime\n";
      for (std::size_t i = 0; i < doc.curves.epsilon.size(); ++i) {
        body << format_double(doc.curves.epsilon[i]) << "," << format_double(doc.curves.delta[i]) << ","
             << format_double(doc.curves.rho[i]) << "," << format_double(doc.curves.rho_prime[i]) << "\n";
      }
    } else {
      body << "norm " << norm_.model.description() << "\n";
      body << "james " << (exact_james ? *exact_james : format_double(doc.james.value)) << "\n";
      body << "schaffer " << format_double(doc.schaffer.value) << "\n";
      for (const auto& e : doc.james_generalized) {
        body << "james(" << format_double(e.lambda) << ") " << format_double(e.value.value) << "\n";
      }
      body << "attainment_pairs " << doc.attainment.size() << "\n";
      const auto ok = std::count_if(doc.checks.begin(), doc.checks.end(), [](const auto& c) { return c.passed; });
      body << "checks " << ok << "/" << doc.checks.size() << "\n";
    }
  }

  void plot(std::ostream& body) {
    no_exact();
    PlotRequest request;
    if (opt_.point) request.point = point().value;
    request.epsilon = opt_.epsilon;
    request.partners = request.arcs = request.attainment = false;
    std::istringstream items(opt_.overlay);
    for (std::string item; std::getline(items, item, ',');) {
      item = trim(item);
      if (item == "partners") {
        request.partners = true;
      } else if (item == "arcs") {
        request.arcs = true;
      } else if (item == "attainment") {
        request.attainment = true;
      } else if (item != "none" && !item.empty()) {
        throw UsageError("unknown overlay '" + item + "'");
      }
    }
    body << render_svg(norm_.model, request, sweep_);
  }

  Options opt_;
  LoadedNorm norm_;
  SweepConfig sweep_;
};

bool is_input_error(ErrorCode code) { return code != ErrorCode::kNoSignChange; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric constants of normed planes"};
  app.name("normplane");
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options opt;
  app.add_option("--norm", opt.norm, "preset (octagon-max, hexagon-paper, square, euclidean) or norm file")
      ->required();
  app.add_option("--point", opt.point, "point x,y; coordinates may be rationals such as 1/2");
  app.add_option("--lambda", opt.lambda, "weight of the generalized constants");
  app.add_option("--epsilon", opt.epsilon, "epsilon of the moduli, A(x, eps) and modulus attainment");
  app.add_option("--radius", opt.radius, "partner radius (default: the norm of the point)");
  app.add_option("--grid", opt.grid, "direction samples of smooth-norm sweeps");
  app.add_option("--tol", opt.tol, "solver angle tolerance, or attainment tolerance for attain/check/report");
  app.add_flag("--exact", opt.exact, "use the rational kernel and cross-check the float path");
  app.add_option("--out", opt.out, "write output to this file");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--overlay", opt.overlay, "plot overlays: partners,arcs,attainment or none");

  const std::pair<const char*, const char*> commands[] = {
      {"gauge", "norm of --point"},
      {"partner", "isosceles orthogonality partner of --point"},
      {"beta", "local James constant at --point (with --lambda: generalized)"},
      {"james", "James constant (with --lambda: generalized)"},
      {"schaffer", "Schaffer constant"},
      {"modulus", "moduli of convexity and smoothness"},
      {"aset", "arc of approximate isosceles partners of --point"},
      {"attain", "attainment pairs of J, or of the modulus of convexity with --epsilon"},
      {"check", "invariant suite; exits 1 on any failure"},
      {"report", "full report document"},
      {"plot", "SVG of the unit sphere"}};
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->callback([&opt, name = std::string(name)] { opt.command = name; });
  }

  std::vector<const char*> argv{"normplane"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Command command(opt, load_norm(opt.norm));
    int status = kExitOk;
    const std::string body = command.execute(status);
    if (opt.out) {
      std::ofstream file(*opt.out, std::ios::binary);
      if (!file || !(file << body)) throw UsageError("cannot write '" + *opt.out + "'");
    } else {
      out << body;
    }
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Mismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace normplane::cli
