#pragma once

#include "isoconst/estimators.hpp"
#include "isoconst/geometry.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isoconst {

/// A required estimate is missing from the map handed to a check.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class RelationKind { Inequality, Identity, Classification };

/// One proven relation instantiated on one norm.
///   Inequality "lhs <= rhs": slack = rhs - lhs, pass iff slack >= -tolerance.
///   Identity "lhs == rhs":   slack = |lhs - rhs|, pass iff slack <= tolerance.
///   Classification:          slack = 0 when both sides classify alike, 1 otherwise.
/// Informational reports (asserted == false) never fail a verify run.
struct RelationReport {
  std::string relation_id;
  std::string norm_label;
  RelationKind kind = RelationKind::Inequality;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool asserted = true;
  /// Estimator failure that prevented the check; empty on success.
  std::string error;
};

using EstimateMap = std::map<ConstantKind, Estimate>;
using LabeledNorm = std::pair<std::string, NormSpec>;

inline constexpr double kRangeTolerance = 1e-9;
inline constexpr double kGridTolerance = 2e-3;
inline constexpr double kProductTolerance = 4e-3;
inline constexpr double kNonSquareMargin = 0.02;

RelationReport make_inequality(std::string id, std::string label, double lhs, double rhs,
                               double tolerance, bool asserted = true);
RelationReport make_identity(std::string id, std::string label, double lhs, double rhs,
                             double tolerance);

/// Omega <= 8/5 and 1 <= Omega' <= 8/5 (asserted) plus Omega >= 1 (informational).
std::vector<RelationReport> check_omega_range(const std::string& label, const EstimateMap& est);

/// 8/5 + 2/(5 J^2) - 8/(5 J) <= Omega <= 2/5 + J^2/10 + 2J/5.
std::vector<RelationReport> check_james_bounds(const std::string& label, const EstimateMap& est);

/// Omega' <= (2/5) C_NJ + 4/5.
RelationReport check_cnj_bound(const std::string& label, const EstimateMap& est);

/// Omega' == (9/10) gamma(1/3).
RelationReport check_gamma_identity(const std::string& label, const EstimateMap& est);

/// J >= 2 - tau exactly when Omega >= 8/5 - tau.
RelationReport check_nonsquare_equivalence(const std::string& label, const EstimateMap& est,
                                           double tau = kNonSquareMargin);

/// J * S == 2.
RelationReport check_js_product(const std::string& label, const EstimateMap& est);

/// Omega, Omega', J, S, C_NJ and gamma(1/3): everything the checks read.
std::vector<ConstantKind> battery_constants();

/// ell_1, ell_1.5, ell_2, ell_3, ell_inf, the hexagonal norm and three
/// random polyhedral norms drawn from kBatterySeeds.
std::vector<LabeledNorm> default_battery();
inline constexpr std::uint64_t kBatterySeeds[] = {20240611, 20240612, 20240613};
NormSpec battery_polygon(std::uint64_t seed);

/// Computes every battery constant once per norm and runs every check.
/// Estimator failures are attached to the affected reports. Output is
/// sorted by (norm_label, relation_id).
std::vector<RelationReport> run_battery(const std::vector<LabeledNorm>& norms,
                                        const GridConfig& cfg);

/// True iff every asserted report passes.
bool all_asserted_pass(const std::vector<RelationReport>& reports);

}  // namespace isoconst
