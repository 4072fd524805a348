#include "report_document.hpp"

namespace normplane::cli {

using nlohmann::json;

void to_json(json& j, const Quantity& q) {
  j = {{"value", q.value}, {"provenance", q.exact ? "both" : "float"}, {"tolerance", q.tolerance}};
  if (q.exact) j["exact"] = *q.exact;
}

void from_json(const json& j, Quantity& q) {
  j.at("value").get_to(q.value);
  j.at("tolerance").get_to(q.tolerance);
  q.exact = j.contains("exact") ? std::optional(j.at("exact").get<std::string>()) : std::nullopt;
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LambdaEntry, lambda, value)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Curves, tolerance, epsilon, delta, rho, rho_prime)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CheckEntry, name, passed, residual, tolerance)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ConfigEcho, directions, edge_samples, rho_prime_grid, refine_tol, angle_tol,
                                   value_tol, attainment_tol, oracle_directions, modulus_grid, random_samples, seed)

void to_json(json& j, const PairEntry& p) {
  j = {{"x", p.x}, {"y", p.y}, {"value", p.value}, {"iso_defect", p.iso_defect}, {"verified", p.verified}};
  j["epsilon0"] = p.epsilon0 ? json(*p.epsilon0) : json(nullptr);
}

void from_json(const json& j, PairEntry& p) {
  j.at("x").get_to(p.x);
  j.at("y").get_to(p.y);
  j.at("value").get_to(p.value);
  j.at("iso_defect").get_to(p.iso_defect);
  j.at("verified").get_to(p.verified);
  const json& e = j.at("epsilon0");
  p.epsilon0 = e.is_null() ? std::nullopt : std::optional(e.get<double>());
}

ReportDocument make_document(const ConstantsReport& report, const ReportOptions& options, const json& norm,
                             const std::optional<std::string>& exact_james) {
  const SweepConfig& s = options.sweep;
  // Sweep results are refined to refine_tol in the argument; the values
  // inherit the solver's value tolerance.
  const double value_tol = s.solver.value_tol;

  ReportDocument doc;
  doc.mode = exact_james ? "both" : "float";
  doc.norm = norm;
  doc.james = {report.james, value_tol, exact_james};
  doc.schaffer = {report.schaffer, value_tol, std::nullopt};
  for (const auto& [lambda, value] : report.james_generalized) {
    doc.james_generalized.push_back({lambda, {value, value_tol, std::nullopt}});
  }
  doc.curves.tolerance = value_tol;
  for (std::size_t i = 0; i < report.delta_curve.size(); ++i) {
    doc.curves.epsilon.push_back(report.delta_curve[i].epsilon);
    doc.curves.delta.push_back(report.delta_curve[i].value);
    doc.curves.rho.push_back(report.rho_curve[i].value);
    doc.curves.rho_prime.push_back(report.rho_prime_curve[i].value);
  }
  for (const auto& p : report.james_attainment) {
    doc.attainment.push_back({{p.x.x, p.x.y}, {p.y.x, p.y.y}, p.value, p.iso_defect, p.approx_epsilon, p.verified});
  }
  for (const auto& c : report.checks) doc.checks.push_back({c.name, c.passed, c.residual, c.tolerance});
  doc.config = {s.directions,         s.edge_samples,  s.rho_prime_grid,         s.refine_tol,
                s.solver.angle_tol,   s.solver.value_tol, options.attainment_tol, options.oracle_directions,
                options.modulus_grid, options.random_samples, options.seed};
  return doc;
}

void to_json(json& j, const ReportDocument& doc) {
  json lambdas = json::array();
  for (const auto& e : doc.james_generalized) lambdas.push_back(e);
  j = {{"mode", doc.mode},
       {"norm", doc.norm},
       {"constants", {{"james", doc.james}, {"schaffer", doc.schaffer}, {"james_generalized", lambdas}}},
       {"curves", doc.curves},
       {"attainment", doc.attainment},
       {"checks", doc.checks},
       {"config", doc.config}};
}

void from_json(const json& j, ReportDocument& doc) {
  j.at("mode").get_to(doc.mode);
  doc.norm = j.at("norm");
  const json& c = j.at("constants");
  c.at("james").get_to(doc.james);
  c.at("schaffer").get_to(doc.schaffer);
  c.at("james_generalized").get_to(doc.james_generalized);
  j.at("curves").get_to(doc.curves);
  j.at("attainment").get_to(doc.attainment);
  j.at("checks").get_to(doc.checks);
  j.at("config").get_to(doc.config);
}

}  // namespace normplane::cli
