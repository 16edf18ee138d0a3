#include "isoconst/symmetric_plane.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace isoconst;

TEST_CASE("axes checks") {
  CHECK(check_axes(NormSpec::linf(), Vec2(1, 0), Vec2(0, 1)).symmetry_defect <= 1e-12);
  const double c = std::cos(0.7), s = std::sin(0.7);
  CHECK(check_axes(NormSpec::lp(2), Vec2(c, s), Vec2(-s, c)).symmetry_defect <= 1e-12);
  CHECK(check_axes(NormSpec::hexagonal_mixed(), Vec2(1, 0), Vec2(0, 1)).symmetry_defect >= 1.0);
  CHECK_THROWS_AS(check_axes(NormSpec::lp(2), Vec2(1, 1), Vec2(2, 2)), SpecError);
}

TEST_CASE("f and g on coordinate axes") {
  const Vec2 e1(1, 0), e2(0, 1);
  CHECK(f_func(NormSpec::linf(), e1, e2, 0.0) == 2.0);
  CHECK(g_func(NormSpec::linf(), e1, e2, 0.0) == 1.0);
  CHECK(f_func(NormSpec::lp(2), e1, e2, 1.0) == doctest::Approx(std::sqrt(10.0)).epsilon(1e-15));
  CHECK(g_func(NormSpec::lp(2), e1, e2, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(f_func(NormSpec::linf(), e1, e2, 1.0 / 3) == doctest::Approx(5.0 / 3).epsilon(1e-15));
}

TEST_CASE("g is even on symmetric planes") {
  const Vec2 e1(1, 0), e2(0, 1);
  for (const NormSpec& s : {NormSpec::lp(1.5), NormSpec::linf(), NormSpec::lp(3)}) {
    for (double t = 0.0; t < 5.0; t += 0.37) {
      CHECK(g_func(s, e1, e2, t) == doctest::Approx(g_func(s, e1, e2, -t)).epsilon(1e-14));
    }
  }
}

TEST_CASE("h equals the omega ratio at the axis pair") {
  const Vec2 e1(1, 0), e2(0, 1);
  for (const NormSpec& s : {NormSpec::lp(1.5), NormSpec::linf(), NormSpec::lp(2), NormSpec::lp(4)}) {
    for (double t : {0.0, 0.2, 0.5, 1.0, 1.7, 6.0}) {
      const AxisPair p = axis_pair(s, e1, e2, t);
      CHECK(std::abs(isosceles_residual(s, p.x, p.y)) <= 1e-14);
      CHECK(omega_ratio(s, p.x, p.y) == doctest::Approx(h_func(s, e1, e2, t)).epsilon(1e-12));
    }
    const AxisPair lim = axis_pair(s, e1, e2, std::numeric_limits<double>::infinity());
    CHECK(omega_ratio(s, lim.x, lim.y) == doctest::Approx(h_limit(s, e1, e2)).epsilon(1e-12));
    CHECK(h_func(s, e1, e2, 1e7) == doctest::Approx(h_limit(s, e1, e2)).epsilon(1e-6));
  }
}

TEST_CASE("closed form values") {
  const auto linf = omega_closed_form(NormSpec::linf(), check_axes(NormSpec::linf(), Vec2(1, 0), Vec2(0, 1)));
  CHECK(std::abs(linf.value - 1.6) <= 1e-9);
  CHECK(linf.witness.aux == 0.0);
  const auto l2 = omega_closed_form(NormSpec::lp(2), check_axes(NormSpec::lp(2), Vec2(1, 0), Vec2(0, 1)));
  CHECK(std::abs(l2.value - 1.0) <= 1e-9);
  const auto l1 = omega_closed_form(NormSpec::lp(1), check_axes(NormSpec::lp(1), Vec2(1, 0), Vec2(0, 1)));
  CHECK(std::abs(l1.value - 1.6) <= 1e-9);
}

TEST_CASE("closed form matches the general estimator") {
  GridConfig cfg;
  cfg.theta_grid = 1024;
  for (double p : {1.25, 1.5, 3.0, 5.0}) {
    const NormSpec s = NormSpec::lp(p);
    const auto cf = omega_closed_form(s, check_axes(s, Vec2(1, 0), Vec2(0, 1)), cfg);
    CHECK(cf.value == doctest::Approx(estimate_omega(s, cfg).value).epsilon(1e-6));
  }
}

TEST_CASE("closed form rejects planes that fail the axes test") {
  const NormSpec hex = NormSpec::hexagonal_mixed();
  CHECK_THROWS_AS(omega_closed_form(hex, check_axes(hex, Vec2(1, 0), Vec2(0, 1))), DomainError);
}
