#include "isoconst/relations.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace isoconst {

namespace {

const Estimate& require(const EstimateMap& est, const ConstantKind& kind) {
  const auto it = est.find(kind);
  if (it == est.end()) throw InputError("missing estimate for constant '" + kind.name() + "'");
  return it->second;
}

RelationReport failed(std::string id, std::string label, const std::string& why) {
  RelationReport r;
  r.relation_id = std::move(id);
  r.norm_label = std::move(label);
  r.pass = false;
  r.error = why;
  return r;
}

}  // namespace

RelationReport make_inequality(std::string id, std::string label, double lhs, double rhs,
                               double tolerance, bool asserted) {
  RelationReport r;
  r.relation_id = std::move(id);
  r.norm_label = std::move(label);
  r.kind = RelationKind::Inequality;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tolerance = tolerance;
  r.pass = r.slack >= -tolerance;
  r.asserted = asserted;
  return r;
}

RelationReport make_identity(std::string id, std::string label, double lhs, double rhs,
                             double tolerance) {
  RelationReport r;
  r.relation_id = std::move(id);
  r.norm_label = std::move(label);
  r.kind = RelationKind::Identity;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = std::abs(lhs - rhs);
  r.tolerance = tolerance;
  r.pass = r.slack <= tolerance;
  return r;
}

std::vector<RelationReport> check_omega_range(const std::string& label, const EstimateMap& est) {
  const double omega = require(est, ConstantKind::omega()).value;
  const double omega_prime = require(est, ConstantKind::omega_prime()).value;
  return {
      make_inequality("omega_upper", label, omega, 1.6, kRangeTolerance),
      make_inequality("omega_prime_lower", label, 1.0, omega_prime, kRangeTolerance),
      make_inequality("omega_prime_upper", label, omega_prime, 1.6, kRangeTolerance),
      // Proven only for infinite-dimensional spaces; reported, not asserted.
      make_inequality("omega_lower_info", label, 1.0, omega, kRangeTolerance, false),
  };
}

std::vector<RelationReport> check_james_bounds(const std::string& label, const EstimateMap& est) {
  const double j = require(est, ConstantKind::james()).value;
  const double omega = require(est, ConstantKind::omega()).value;
  const double lower = 1.6 + 0.4 / (j * j) - 1.6 / j;
  const double upper = 0.4 + j * j / 10.0 + 0.4 * j;
  return {
      make_inequality("james_lower", label, lower, omega, kGridTolerance),
      make_inequality("james_upper", label, omega, upper, kGridTolerance),
  };
}

RelationReport check_cnj_bound(const std::string& label, const EstimateMap& est) {
  const double omega_prime = require(est, ConstantKind::omega_prime()).value;
  const double cnj = require(est, ConstantKind::cnj()).value;
  return make_inequality("cnj_bound", label, omega_prime, 0.4 * cnj + 0.8, kGridTolerance);
}

RelationReport check_gamma_identity(const std::string& label, const EstimateMap& est) {
  const double omega_prime = require(est, ConstantKind::omega_prime()).value;
  const double gamma = require(est, ConstantKind::gamma(1.0 / 3.0)).value;
  return make_identity("gamma_identity", label, omega_prime, 0.9 * gamma, kGridTolerance);
}

RelationReport check_nonsquare_equivalence(const std::string& label, const EstimateMap& est,
                                           double tau) {
  if (!(tau > 0.0 && tau <= 0.1)) throw InputError("classification margin tau must lie in (0, 0.1]");
  const double j = require(est, ConstantKind::james()).value;
  const double omega = require(est, ConstantKind::omega()).value;
  const bool by_james = j >= 2.0 - tau;
  const bool by_omega = omega >= 1.6 - tau;
  RelationReport r;
  r.relation_id = "nonsquare_equivalence";
  r.norm_label = label;
  r.kind = RelationKind::Classification;
  r.lhs = j;
  r.rhs = omega;
  r.slack = by_james == by_omega ? 0.0 : 1.0;
  r.tolerance = tau;
  r.pass = by_james == by_omega;
  return r;
}

RelationReport check_js_product(const std::string& label, const EstimateMap& est) {
  const double j = require(est, ConstantKind::james()).value;
  const double s = require(est, ConstantKind::schaffer()).value;
  return make_identity("js_product", label, j * s, 2.0, kProductTolerance);
}

std::vector<ConstantKind> battery_constants() {
  return {ConstantKind::omega(), ConstantKind::omega_prime(), ConstantKind::james(),
          ConstantKind::schaffer(), ConstantKind::cnj(), ConstantKind::gamma(1.0 / 3.0)};
}

NormSpec battery_polygon(std::uint64_t seed) {
  return polyhedral_from_vertices(random_symmetric_polygon(seed, 2 + static_cast<int>(seed % 4)));
}

std::vector<LabeledNorm> default_battery() {
  std::vector<LabeledNorm> norms = {
      {"l1", NormSpec::lp(1.0)},   {"l1.5", NormSpec::lp(1.5)},
      {"l2", NormSpec::lp(2.0)},   {"l3", NormSpec::lp(3.0)},
      {"linf", NormSpec::linf()},  {"hex", NormSpec::hexagonal_mixed()},
  };
  for (std::uint64_t seed : kBatterySeeds) {
    norms.emplace_back("poly-" + std::to_string(seed), battery_polygon(seed));
  }
  return norms;
}

std::vector<RelationReport> run_battery(const std::vector<LabeledNorm>& norms,
                                        const GridConfig& cfg) {
  if (norms.empty()) throw InputError("battery is empty");
  std::vector<RelationReport> reports;
  for (const auto& [label, spec] : norms) {
    EstimateMap est;
    std::string failure;
    for (const ConstantKind& kind : battery_constants()) {
      try {
        est.emplace(kind, estimate(spec, kind, cfg));
      } catch (const std::exception& e) {
        if (failure.empty()) failure = kind.name() + ": " + e.what();
      }
    }
    auto run = [&](const std::string& id, auto&& check) {
      try {
        auto r = check();
        if constexpr (std::is_same_v<decltype(r), RelationReport>) {
          reports.push_back(std::move(r));
        } else {
          for (auto& x : r) reports.push_back(std::move(x));
        }
      } catch (const InputError& e) {
        reports.push_back(failed(id, label, failure.empty() ? e.what() : failure));
      }
    };
    run("omega_range", [&] { return check_omega_range(label, est); });
    run("james_bounds", [&] { return check_james_bounds(label, est); });
    run("cnj_bound", [&] { return check_cnj_bound(label, est); });
    run("gamma_identity", [&] { return check_gamma_identity(label, est); });
    run("nonsquare_equivalence", [&] { return check_nonsquare_equivalence(label, est); });
    run("js_product", [&] { return check_js_product(label, est); });
  }
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return std::tie(a.norm_label, a.relation_id) < std::tie(b.norm_label, b.relation_id);
  });
  return reports;
}

bool all_asserted_pass(const std::vector<RelationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const RelationReport& r) { return !r.asserted || r.pass; });
}

}  // namespace isoconst
