#pragma once

#include <json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normplane/checks.hpp"

namespace normplane::cli {

// A number together with where it came from: the float path with a stated
// tolerance, optionally confirmed by an exact rational value.
struct Quantity {
  double value = 0.0;
  double tolerance = 0.0;
  std::optional<std::string> exact;

  bool operator==(const Quantity&) const = default;
};

struct LambdaEntry {
  double lambda = 0.0;
  Quantity value;

  bool operator==(const LambdaEntry&) const = default;
};

struct Curves {
  double tolerance = 0.0;
  std::vector<double> epsilon;
  std::vector<double> delta;
  std::vector<double> rho;
  std::vector<double> rho_prime;

  bool operator==(const Curves&) const = default;
};

struct PairEntry {
  std::array<double, 2> x{};
  std::array<double, 2> y{};
  double value = 0.0;
  double iso_defect = 0.0;
  std::optional<double> epsilon0;
  bool verified = false;

  bool operator==(const PairEntry&) const = default;
};

struct CheckEntry {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;

  bool operator==(const CheckEntry&) const = default;
};

struct ConfigEcho {
  int directions = 0;
  int edge_samples = 0;
  int rho_prime_grid = 0;
  double refine_tol = 0.0;
  double angle_tol = 0.0;
  double value_tol = 0.0;
  double attainment_tol = 0.0;
  int oracle_directions = 0;
  int modulus_grid = 0;
  int random_samples = 0;
  std::uint64_t seed = 0;

  bool operator==(const ConfigEcho&) const = default;
};

struct ReportDocument {
  std::string mode;  // "float", "exact" or "both"
  nlohmann::json norm;
  Quantity james;
  Quantity schaffer;
  std::vector<LambdaEntry> james_generalized;
  Curves curves;
  std::vector<PairEntry> attainment;
  std::vector<CheckEntry> checks;
  ConfigEcho config;

  bool operator==(const ReportDocument&) const = default;
};

ReportDocument make_document(const ConstantsReport& report, const ReportOptions& options, const nlohmann::json& norm,
                             const std::optional<std::string>& exact_james);

void to_json(nlohmann::json& j, const ReportDocument& doc);
void from_json(const nlohmann::json& j, ReportDocument& doc);

}  // namespace normplane::cli
