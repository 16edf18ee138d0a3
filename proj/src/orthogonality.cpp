#include "isoconst/orthogonality.hpp"

#include "isoconst/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace isoconst {

namespace {

constexpr int kHalfScan = kPartnerScan / 2;

double grid_angle(int j) { return 2.0 * std::numbers::pi * j / kPartnerScan; }

OrthoPair make_pair(const NormSpec& spec, const Vec2& x, const Vec2& y, double phi) {
  return {x, y, isosceles_residual(spec, x, y), OrthoKind::Isosceles, phi};
}

OrthoPair bisect_partner(const NormSpec& spec, const Vec2& x, double radius, double lo,
                         double hi, double flo, double tol) {
  double best_phi = lo;
  double best_abs = std::abs(flo);
  for (int step = 0; step < kBisectionBudget; ++step) {
    const double mid = 0.5 * (lo + hi);
    const Vec2 y = radius * unit_point(spec, mid).coords;
    const double f = isosceles_residual(spec, x, y);
    if (std::abs(f) < best_abs) {
      best_abs = std::abs(f);
      best_phi = mid;
    }
    if (std::abs(f) <= tol) return {x, y, f, OrthoKind::Isosceles, unit_point(spec, mid).theta};
    if ((f < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = f;
    } else {
      hi = mid;
    }
  }
  std::ostringstream os;
  os << "isosceles partner bisection did not reach tolerance " << tol
     << " (best residual " << best_abs << " at phi=" << best_phi << ")";
  throw ConvergenceError(os.str(), std::atan2(x.y(), x.x()), best_abs);
}

double birkhoff_defect(const NormSpec& spec, const Vec2& x, double nx, double phi) {
  return nx - birkhoff_lambda_min(spec, x, unit_point(spec, phi).coords).min_value;
}

}  // namespace

double isosceles_residual(const NormSpec& spec, const Vec2& x, const Vec2& y) {
  return eval_norm(spec, Vec2(x + y)) - eval_norm(spec, Vec2(x - y));
}

std::vector<OrthoPair> isosceles_partners_of(const NormSpec& spec, const Vec2& x,
                                             double radius, double tol) {
  // residual(phi + pi) == -residual(phi) exactly because unit_point_at
  // negates antipodes exactly, so half a turn determines all roots.
  std::vector<Vec2> ys(kHalfScan + 1);
  std::vector<double> res(kHalfScan + 1);
  for (int j = 0; j < kHalfScan; ++j) {
    ys[j] = radius * unit_point_at(spec, j, kPartnerScan).coords;
    res[j] = isosceles_residual(spec, x, ys[j]);
  }
  ys[kHalfScan] = -ys[0];
  res[kHalfScan] = -res[0];

  std::vector<OrthoPair> half;
  for (int j = 0; j < kHalfScan; ++j) {
    if (std::abs(res[j]) <= tol) {
      half.push_back(make_pair(spec, x, ys[j], grid_angle(j)));
    } else if (std::abs(res[j + 1]) > tol && (res[j] < 0.0) != (res[j + 1] < 0.0)) {
      half.push_back(bisect_partner(spec, x, radius, grid_angle(j), grid_angle(j + 1), res[j], tol));
    }
  }
  std::vector<OrthoPair> roots;
  roots.reserve(2 * half.size());
  for (const OrthoPair& p : half) {
    roots.push_back(p);
    OrthoPair q = p;
    q.y = -p.y;
    q.residual = -p.residual;
    q.phi = p.phi + std::numbers::pi;
    roots.push_back(q);
  }
  std::sort(roots.begin(), roots.end(),
            [](const OrthoPair& a, const OrthoPair& b) { return a.phi < b.phi; });
  return roots;
}

std::vector<OrthoPair> isosceles_partners(const NormSpec& spec, double theta_x, double radius,
                                          double tol) {
  return isosceles_partners_of(spec, unit_point(spec, theta_x).coords, radius, tol);
}

LambdaMin birkhoff_lambda_min(const NormSpec& spec, const Vec2& x, const Vec2& y) {
  const double nx = eval_norm(spec, x);
  const double ny = eval_norm(spec, y);
  if (ny == 0.0 || nx == 0.0) return {0.0, nx};
  // At a minimizer ||lambda y|| <= ||x + lambda y|| + ||x|| <= 2||x||.
  const double bound = 2.0 * nx / ny;
  const double width_tol = 1e-15 * bound;
  const auto e = search::golden_min(
      [&](double lambda) { return eval_norm(spec, Vec2(x + lambda * y)); }, -bound, bound,
      width_tol, 400);
  if (e.value >= nx) return {0.0, nx};
  return {e.arg, e.value};
}

bool is_birkhoff(const NormSpec& spec, const Vec2& x, const Vec2& y, double tol) {
  return birkhoff_lambda_min(spec, x, y).min_value >= eval_norm(spec, x) - tol;
}

std::vector<SpherePoint> birkhoff_partners(const NormSpec& spec, double theta_x, double tol) {
  const Vec2 x = unit_point(spec, theta_x).coords;
  const double nx = eval_norm(spec, x);
  // The defect is pi-periodic in phi; scan half a turn cyclically.
  std::vector<double> defect(kHalfScan);
  for (int j = 0; j < kHalfScan; ++j) {
    defect[j] = nx - birkhoff_lambda_min(spec, x, unit_point_at(spec, j, kPartnerScan).coords)
                         .min_value;
  }
  const double step = grid_angle(1);
  auto at = [&](int j) { return defect[(j % kHalfScan + kHalfScan) % kHalfScan]; };

  std::vector<double> angles;
  for (int j = 0; j < kHalfScan; ++j) {
    const bool feasible = defect[j] <= tol;
    const bool next_feasible = at(j + 1) <= tol;
    if (feasible) angles.push_back(grid_angle(j));
    if (feasible != next_feasible) {
      // Arc endpoint: keep the feasible side of the bracket. Aim at half the
      // tolerance so the endpoint still certifies after rounding.
      double good = feasible ? grid_angle(j) : grid_angle(j + 1);
      double bad = feasible ? grid_angle(j + 1) : grid_angle(j);
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (good + bad);
        if (birkhoff_defect(spec, x, nx, mid) <= 0.5 * tol) good = mid;
        else bad = mid;
      }
      angles.push_back(good);
    }
    if (!feasible && defect[j] <= at(j - 1) && defect[j] <= at(j + 1)) {
      const double phi0 = grid_angle(j);
      const auto e = search::golden_min(
          [&](double phi) { return birkhoff_defect(spec, x, nx, phi); }, phi0 - step,
          phi0 + step, 1e-13, 200);
      if (e.value <= tol) angles.push_back(e.arg);
    }
  }
  if (angles.empty()) {
    // Partners always exist; fall back to the best refined grid minimum.
    const int j = static_cast<int>(std::min_element(defect.begin(), defect.end()) - defect.begin());
    const double phi0 = grid_angle(j);
    angles.push_back(search::golden_min(
                         [&](double phi) { return birkhoff_defect(spec, x, nx, phi); },
                         phi0 - step, phi0 + step, 1e-13, 200)
                         .arg);
  }

  std::vector<SpherePoint> result;
  result.reserve(2 * angles.size());
  for (double phi : angles) {
    const SpherePoint p = unit_point(spec, phi);
    result.push_back(p);
    result.push_back({std::fmod(p.theta + std::numbers::pi, 2.0 * std::numbers::pi), -p.coords});
  }
  // Re-certify the exact coordinates returned, antipodes included.
  std::vector<SpherePoint> certified;
  for (const SpherePoint& p : result) {
    if (nx - birkhoff_lambda_min(spec, x, p.coords).min_value <= tol) certified.push_back(p);
  }
  if (!certified.empty()) result = std::move(certified);
  std::sort(result.begin(), result.end(),
            [](const SpherePoint& a, const SpherePoint& b) { return a.theta < b.theta; });
  result.erase(std::unique(result.begin(), result.end(),
                           [](const SpherePoint& a, const SpherePoint& b) {
                             return std::abs(a.theta - b.theta) < 1e-13;
                           }),
               result.end());
  return result;
}

}  // namespace isoconst
