#include "isoconst/orthogonality.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace isoconst;
using std::numbers::pi;

namespace {

bool has_partner(const std::vector<OrthoPair>& roots, const Vec2& target, double tol) {
  for (const auto& r : roots) {
    if ((r.y - target).cwiseAbs().maxCoeff() <= tol) return true;
  }
  return false;
}

bool has_direction(const std::vector<SpherePoint>& pts, const Vec2& target, double tol) {
  for (const auto& p : pts) {
    if ((p.coords - target).cwiseAbs().maxCoeff() <= tol) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("isosceles residual examples") {
  CHECK(isosceles_residual(NormSpec::linf(), Vec2(1, 0), Vec2(0, 1)) == 0.0);
  CHECK(std::abs(isosceles_residual(NormSpec::hexagonal_mixed(), Vec2(1.0 / 3, 1),
                                    Vec2(1, 1.0 / 3))) <= 1e-15);
  CHECK(isosceles_residual(NormSpec::lp(1.7), Vec2(0.3, -2), Vec2::Zero()) == 0.0);
}

TEST_CASE("residual is antisymmetric in y") {
  const NormSpec s = NormSpec::lp(1.3);
  for (int i = 0; i < 50; ++i) {
    const Vec2 x = unit_point_at(s, i, 50).coords;
    const Vec2 y = 0.7 * unit_point_at(s, 3 * i + 1, 150).coords;
    CHECK(isosceles_residual(s, x, -y) == -isosceles_residual(s, x, y));
  }
}

TEST_CASE("isosceles partners") {
  SUBCASE("euclidean perpendicular") {
    const auto roots = isosceles_partners(NormSpec::lp(2), 0.0, 1.0);
    REQUIRE(roots.size() == 2);
    CHECK(has_partner(roots, Vec2(0, 1), 1e-9));
    CHECK(has_partner(roots, Vec2(0, -1), 1e-9));
    for (const auto& r : roots) CHECK(std::abs(r.residual) <= kDefaultSolverTol);
  }
  SUBCASE("max norm diagonal") {
    const auto roots = isosceles_partners(NormSpec::linf(), pi / 4, 1.0);
    CHECK(has_partner(roots, Vec2(1, -1), 1e-9));
    CHECK(has_partner(roots, Vec2(-1, 1), 1e-9));
  }
  SUBCASE("hexagonal maximizer") {
    const auto roots = isosceles_partners(NormSpec::hexagonal_mixed(), std::atan2(1.0, 1.0 / 3), 1.0);
    CHECK(has_partner(roots, Vec2(1, 1.0 / 3), 1e-6));
  }
  SUBCASE("roots come in antipodal pairs sorted by phi") {
    const auto roots = isosceles_partners(NormSpec::lp(1.5), 0.4, 0.6);
    REQUIRE(roots.size() % 2 == 0);
    for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].phi <= roots[i].phi);
    for (const auto& r : roots) {
      CHECK(has_partner(roots, Vec2(-r.y), 0.0));
      CHECK(std::abs(isosceles_residual(NormSpec::lp(1.5), r.x, r.y)) <= kDefaultSolverTol);
      CHECK(eval_norm(NormSpec::lp(1.5), r.y) == doctest::Approx(0.6).epsilon(1e-12));
    }
  }
}

TEST_CASE("birkhoff lambda minimum") {
  const auto e = birkhoff_lambda_min(NormSpec::lp(2), Vec2(1, 0), Vec2(0, 1));
  CHECK(std::abs(e.lambda_star) <= 1e-9);
  CHECK(e.min_value == doctest::Approx(1.0));
  const auto p = birkhoff_lambda_min(NormSpec::lp(2), Vec2(1, 1) / std::sqrt(2.0), Vec2(1, 0));
  CHECK(p.lambda_star == doctest::Approx(-1 / std::sqrt(2.0)).epsilon(1e-7));
  CHECK(p.min_value == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
  const auto f = birkhoff_lambda_min(NormSpec::linf(), Vec2(1, 0.5), Vec2(0, 1));
  CHECK(f.lambda_star >= -1.5 - 1e-9);
  CHECK(f.lambda_star <= 0.5 + 1e-9);
  CHECK(f.min_value == doctest::Approx(1.0).epsilon(1e-12));
  const auto z = birkhoff_lambda_min(NormSpec::lp(3), Vec2(1, 2), Vec2::Zero());
  CHECK(z.lambda_star == 0.0);
}

TEST_CASE("is_birkhoff") {
  CHECK(is_birkhoff(NormSpec::lp(2), Vec2(1, 0), Vec2(0, 1), 1e-9));
  CHECK_FALSE(is_birkhoff(NormSpec::lp(2), Vec2(1, 0), Vec2(1, 1), 1e-9));
  CHECK(is_birkhoff(NormSpec::linf(), Vec2(1, 0.5), Vec2(0, 1), 1e-9));
}

TEST_CASE("birkhoff partners") {
  SUBCASE("euclidean") {
    const auto pts = birkhoff_partners(NormSpec::lp(2), 0.0);
    CHECK(has_direction(pts, Vec2(0, 1), 1e-6));
    CHECK(has_direction(pts, Vec2(0, -1), 1e-6));
    for (const auto& p : pts) CHECK(std::abs(p.coords.x()) <= 1e-4);
  }
  SUBCASE("taxicab vertex has an arc of partners") {
    const auto pts = birkhoff_partners(NormSpec::lp(1), 0.0);
    CHECK(has_direction(pts, Vec2(0, 1), 1e-9));
    CHECK(has_direction(pts, Vec2(0, -1), 1e-9));
    CHECK(pts.size() > 4);
  }
  SUBCASE("max norm corner") {
    const auto pts = birkhoff_partners(NormSpec::linf(), pi / 4);
    CHECK(has_direction(pts, Vec2(1, -1), 1e-9));
    CHECK(has_direction(pts, Vec2(-1, 1), 1e-9));
  }
  SUBCASE("every partner certifies") {
    const NormSpec s = NormSpec::hexagonal_mixed();
    for (double th : {0.0, 0.3, 1.2, 2.5}) {
      const Vec2 x = unit_point(s, th).coords;
      for (const auto& p : birkhoff_partners(s, th)) CHECK(is_birkhoff(s, x, p.coords, 1e-9));
    }
  }
}
