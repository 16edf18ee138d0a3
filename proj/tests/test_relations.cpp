#include "isoconst/relations.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <tuple>

using namespace isoconst;

namespace {

Estimate value_of(ConstantKind k, double v) {
  Estimate e;
  e.constant = k;
  e.value = v;
  return e;
}

EstimateMap exact(double omega, double omega_prime, double j, double s, double cnj, double gamma) {
  EstimateMap m;
  for (auto [k, v] : {std::pair{ConstantKind::omega(), omega},
                      {ConstantKind::omega_prime(), omega_prime},
                      {ConstantKind::james(), j},
                      {ConstantKind::schaffer(), s},
                      {ConstantKind::cnj(), cnj},
                      {ConstantKind::gamma(1.0 / 3), gamma}}) {
    m.emplace(k, value_of(k, v));
  }
  return m;
}

const RelationReport& find(const std::vector<RelationReport>& rs, const std::string& id) {
  return *std::find_if(rs.begin(), rs.end(), [&](const auto& r) { return r.relation_id == id; });
}

}  // namespace

TEST_CASE("checks on known exact values") {
  const EstimateMap linf = exact(1.6, 1.6, 2.0, 1.0, 2.0, 16.0 / 9);
  const EstimateMap l2 = exact(1.0, 1.0, std::sqrt(2.0), std::sqrt(2.0), 1.0, 10.0 / 9);

  const auto range = check_omega_range("linf", linf);
  CHECK(find(range, "omega_upper").slack == doctest::Approx(0.0));
  CHECK(find(range, "omega_upper").pass);
  CHECK(find(check_omega_range("l2", l2), "omega_prime_lower").slack == doctest::Approx(0.0));
  CHECK_FALSE(find(range, "omega_lower_info").asserted);

  const auto jb = check_james_bounds("linf", linf);
  CHECK(find(jb, "james_lower").lhs == doctest::Approx(0.9));
  CHECK(find(jb, "james_upper").rhs == doctest::Approx(1.6));
  CHECK(std::abs(find(jb, "james_upper").slack) <= 1e-12);
  const auto jb2 = check_james_bounds("l2", l2);
  CHECK(find(jb2, "james_lower").lhs == doctest::Approx(0.6686).epsilon(1e-4));
  CHECK(find(jb2, "james_upper").rhs == doctest::Approx(1.1657).epsilon(1e-4));

  CHECK(check_cnj_bound("l2", l2).rhs == doctest::Approx(1.2));
  CHECK(std::abs(check_cnj_bound("linf", linf).slack) <= 1e-12);
  CHECK(check_gamma_identity("linf", linf).pass);
  CHECK(check_gamma_identity("l2", l2).slack <= 1e-12);
  CHECK(check_nonsquare_equivalence("linf", linf).pass);
  CHECK(check_nonsquare_equivalence("l2", l2).pass);
  CHECK(check_js_product("linf", linf).pass);
  CHECK(check_js_product("l2", l2).slack <= 1e-12);
}

TEST_CASE("violations are reported, not hidden") {
  const EstimateMap bad = exact(1.7, 0.9, 2.0, 1.2, 1.0, 1.5);
  const auto range = check_omega_range("bad", bad);
  CHECK_FALSE(find(range, "omega_upper").pass);
  CHECK_FALSE(find(range, "omega_prime_lower").pass);
  CHECK_FALSE(check_cnj_bound("bad", exact(1.6, 1.6, 2, 1, 1.0, 16.0 / 9)).pass);
  CHECK_FALSE(check_gamma_identity("bad", bad).pass);
  CHECK_FALSE(check_js_product("bad", bad).pass);
  const auto mixed = check_nonsquare_equivalence("bad", exact(1.2, 1.2, 2.0, 1.0, 1.5, 1.4));
  CHECK_FALSE(mixed.pass);
  CHECK(mixed.slack == 1.0);
  CHECK_FALSE(all_asserted_pass(range));
}

TEST_CASE("missing estimates are input errors") {
  CHECK_THROWS_AS(check_omega_range("x", {}), InputError);
  CHECK_THROWS_AS(check_js_product("x", {}), InputError);
  CHECK_THROWS_AS(run_battery({}, GridConfig{}), InputError);
  CHECK_THROWS_AS(check_nonsquare_equivalence("x", exact(1, 1, 1.5, 1.3, 1, 1), 0.0), InputError);
}

TEST_CASE("lp(1.1) classifies as uniformly non-square") {
  GridConfig cfg;
  cfg.theta_grid = 1024;
  EstimateMap m;
  const NormSpec s = NormSpec::lp(1.1);
  for (const ConstantKind& k : {ConstantKind::omega(), ConstantKind::james()}) m.emplace(k, estimate(s, k, cfg));
  const auto r = check_nonsquare_equivalence("lp1.1", m);
  CHECK(r.pass);
  CHECK(r.lhs < 1.98);
  CHECK(r.rhs < 1.58);
}

TEST_CASE("battery on an affine image of the Euclidean plane") {
  Mat2 shear;
  shear << 1, 0.8, 0, 1;
  GridConfig cfg;
  cfg.theta_grid = 512;
  const auto reports = run_battery({{"sheared-l2", NormSpec::affine_image(NormSpec::lp(2), shear)}}, cfg);
  CHECK(reports.size() == 10);
  CHECK(all_asserted_pass(reports));
  for (const auto& r : reports) CHECK(r.error.empty());
  CHECK(std::is_sorted(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return std::tie(a.norm_label, a.relation_id) < std::tie(b.norm_label, b.relation_id);
  }));
}

TEST_CASE("default battery is fixed") {
  const auto a = default_battery();
  const auto b = default_battery();
  REQUIRE(a.size() == 9);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].first == b[i].first);
    for (double th = 0.0; th < 6.3; th += 0.5) {
      const Vec2 v(std::cos(th), std::sin(th));
      CHECK(eval_norm(a[i].second, v) == eval_norm(b[i].second, v));
    }
  }
}
