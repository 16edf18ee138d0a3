#include "isoconst/estimators.hpp"

#include <doctest.h>

#include <cmath>

using namespace isoconst;

namespace {

GridConfig grid(int n) {
  GridConfig cfg;
  cfg.theta_grid = n;
  return cfg;
}

const NormSpec kL1 = NormSpec::lp(1);
const NormSpec kL2 = NormSpec::lp(2);
const NormSpec kLinf = NormSpec::linf();
const NormSpec kHex = NormSpec::hexagonal_mixed();

}  // namespace

TEST_CASE("omega ratio examples") {
  CHECK(omega_ratio(kLinf, Vec2(1, 0), Vec2(0, 1)) == doctest::Approx(1.6).epsilon(1e-15));
  CHECK(omega_ratio(kHex, Vec2(1.0 / 3, 1), Vec2(1, 1.0 / 3)) == doctest::Approx(1.225).epsilon(1e-14));
  CHECK(omega_ratio(kL2, Vec2(1, 0), Vec2(0, 1)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(omega_ratio(kL2, Vec2(1, 0), Vec2(-1, 0)), DomainError);
}

TEST_CASE("constant kinds") {
  CHECK(parse_constant_kind("omega-prime", 0).tag == ConstantTag::OmegaPrime);
  CHECK(parse_constant_kind("gamma", 0.25).param == 0.25);
  CHECK(ConstantKind::delta(1.0).name() == "delta");
  CHECK_THROWS_AS(parse_constant_kind("kappa", 0), std::invalid_argument);
  CHECK_THROWS_AS(ConstantKind::gamma(1.5), std::invalid_argument);
  CHECK_THROWS_AS(ConstantKind::delta(-0.1), std::invalid_argument);
}

TEST_CASE("grid config validation") {
  GridConfig cfg;
  cfg.theta_grid = 63;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.theta_grid = 66;
  CHECK_NOTHROW(cfg.validate());
  cfg.refine_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK(grid(2048).pair_grid() == 512);
  CHECK(grid(64).pair_grid() == 64);
  CHECK(grid(1000).pair_grid() % 8 == 0);
}

TEST_CASE("omega") {
  CHECK(estimate_omega(kLinf, grid(2048)).value == doctest::Approx(1.6).epsilon(1e-6));
  CHECK(std::abs(estimate_omega(kHex, grid(2048)).value - 1.225) <= 1e-4);
  CHECK(std::abs(estimate_omega(kL2, grid(2048)).value - 1.0) <= 1e-6);
}

TEST_CASE("omega prime") {
  CHECK(std::abs(estimate_omega_prime(kL2, grid(1024)).value - 1.0) <= 1e-6);
  CHECK(std::abs(estimate_omega_prime(kLinf, grid(1024)).value - 1.6) <= 1e-4);
  CHECK(std::abs(estimate_omega_prime(kL1, grid(1024)).value - 1.6) <= 1e-4);
}

TEST_CASE("james and schaffer") {
  CHECK(std::abs(estimate_james(kLinf, grid(1024)).value - 2.0) <= 1e-4);
  CHECK(std::abs(estimate_schaffer(kLinf, grid(1024)).value - 1.0) <= 1e-4);
  CHECK(std::abs(estimate_james(kL2, grid(1024)).value - std::sqrt(2.0)) <= 1e-4);
  CHECK(std::abs(estimate_schaffer(kL2, grid(1024)).value - std::sqrt(2.0)) <= 1e-4);
  for (const NormSpec& s : {kHex, NormSpec::lp(1.5)}) {
    const double j = estimate_james(s, grid(1024)).value;
    const double sc = estimate_schaffer(s, grid(1024)).value;
    CHECK(std::abs(j * sc - 2.0) <= 2e-3);
  }
}

TEST_CASE("schaffer and james sit on either side of sqrt 2") {
  for (const NormSpec& s : {kL1, NormSpec::lp(1.5), NormSpec::lp(3), kHex}) {
    const double j = estimate_james(s, grid(1024)).value;
    const double sc = estimate_schaffer(s, grid(1024)).value;
    CHECK(sc >= 1.0 - 1e-9);
    CHECK(sc <= std::sqrt(2.0) + 1e-6);
    CHECK(j >= std::sqrt(2.0) - 1e-6);
    CHECK(j <= 2.0 + 1e-9);
  }
}

TEST_CASE("von Neumann-Jordan constant") {
  CHECK(std::abs(estimate_cnj(kL2, grid(1024)).value - 1.0) <= 1e-6);
  CHECK(std::abs(estimate_cnj(kLinf, grid(1024)).value - 2.0) <= 1e-3);
  CHECK(std::abs(estimate_cnj(kL1, grid(1024)).value - 2.0) <= 1e-3);
}

TEST_CASE("gamma") {
  CHECK(std::abs(estimate_gamma(kL2, 1.0 / 3, grid(1024)).value - 10.0 / 9) <= 1e-6);
  CHECK(estimate_gamma(kHex, 0.0, grid(1024)).value == 1.0);
  CHECK(std::abs(estimate_gamma(kLinf, 1.0 / 3, grid(1024)).value - 16.0 / 9) <= 1e-4);
}

TEST_CASE("modulus of convexity") {
  CHECK(std::abs(estimate_delta(kL2, 1.0, grid(1024)).value - (1 - std::sqrt(3.0) / 2)) <= 1e-4);
  CHECK(std::abs(estimate_delta(kLinf, 1.0, grid(1024)).value) <= 1e-6);
  CHECK(estimate_delta(kHex, 0.0, grid(1024)).value == doctest::Approx(0.0));
}

TEST_CASE("modulus of convexity is nondecreasing in eps") {
  const NormSpec s = NormSpec::lp(1.5);
  double prev = -1.0;
  for (double eps = 0.0; eps <= 2.0; eps += 0.25) {
    const double v = estimate_delta(s, eps, grid(512)).value;
    CHECK(v >= prev - 1e-6);
    prev = v;
  }
}

TEST_CASE("D constant") {
  CHECK(std::abs(estimate_d(kL2, grid(1024)).value - 1.0) <= 1e-6);
  const double linf = estimate_d(kLinf, grid(1024)).value;
  CHECK(linf >= 2 * (std::sqrt(2.0) - 1) - 1e-6);
  CHECK(linf <= 1.0);
  // Regression baseline: the grid value equals 2(sqrt 2 - 1).
  CHECK(linf == doctest::Approx(2 * (std::sqrt(2.0) - 1)).epsilon(1e-6));
  CHECK(std::abs(estimate_d(kL1, grid(1024)).value - linf) <= 2e-4);
}

TEST_CASE("BR constant") {
  CHECK(std::abs(estimate_br(kL2, grid(1024)).value) <= 1e-4);
  CHECK(std::abs(estimate_br(kLinf, grid(1024)).value - 1.0) <= 1e-3);
  CHECK(estimate_br(kHex, grid(512)).value >= -1e-9);
}

TEST_CASE("witnesses reproduce the reported value") {
  const NormSpec s = NormSpec::lp(1.5);
  const ConstantKind kinds[] = {ConstantKind::omega(), ConstantKind::omega_prime(),
                                ConstantKind::james(), ConstantKind::schaffer(),
                                ConstantKind::cnj(), ConstantKind::gamma(0.4),
                                ConstantKind::delta(0.8), ConstantKind::d_const(),
                                ConstantKind::br()};
  for (const ConstantKind& k : kinds) {
    CAPTURE(k.name());
    const Estimate e = estimate(s, k, grid(512));
    CHECK(objective_at_witness(s, e) == doctest::Approx(e.value).epsilon(1e-12));
    if (k.tag == ConstantTag::Omega || k.tag == ConstantTag::James ||
        k.tag == ConstantTag::Schaffer || k.tag == ConstantTag::OmegaPrime) {
      CHECK(std::abs(e.witness.residual) <= kDefaultSolverTol);
      CHECK(std::abs(isosceles_residual(s, e.witness.x, e.witness.y)) <= kDefaultSolverTol);
    }
  }
}

TEST_CASE("omega prime dominates omega") {
  for (const NormSpec& s : {NormSpec::lp(1.5), kHex, NormSpec::lp(4)}) {
    CHECK(estimate_omega_prime(s, grid(512)).value >= estimate_omega(s, grid(512)).value - 1e-9);
  }
}

TEST_CASE("refined values agree across grids") {
  for (const NormSpec& s : {NormSpec::lp(1.5), kHex}) {
    const double coarse = estimate_omega(s, grid(512)).value;
    const double fine = estimate_omega(s, grid(2048)).value;
    CHECK(std::abs(coarse - fine) <= 5e-4);
  }
}

TEST_CASE("results do not depend on the worker count") {
  GridConfig one = grid(512);
  GridConfig many = grid(512);
  many.workers = 8;
  for (const ConstantKind& k : {ConstantKind::omega(), ConstantKind::cnj(), ConstantKind::br()}) {
    const Estimate a = estimate(kHex, k, one);
    const Estimate b = estimate(kHex, k, many);
    CHECK(a.value == b.value);
    CHECK(a.witness.x == b.witness.x);
    CHECK(a.witness.y == b.witness.y);
  }
}
