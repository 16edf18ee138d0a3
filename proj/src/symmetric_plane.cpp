#include "isoconst/symmetric_plane.hpp"

#include "isoconst/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace isoconst {

AxesPair check_axes(const NormSpec& spec, const Vec2& e1, const Vec2& e2, int sample_count) {
  const double det = e1.x() * e2.y() - e1.y() * e2.x();
  if (!(std::abs(det) > 1e-14 * std::max(1e-300, e1.norm() * e2.norm()))) {
    throw SpecError("axes are linearly dependent");
  }
  AxesPair axes;
  axes.e1 = e1 / eval_norm(spec, e1);
  axes.e2 = e2 / eval_norm(spec, e2);

  std::vector<double> ts = {0.0, 1.0, -1.0};
  const int n = std::max(2, sample_count);
  for (int k = 0; k < n; ++k) {
    const double t = std::pow(10.0, -3.0 + 4.0 * k / (n - 1));
    ts.push_back(t);
    ts.push_back(-t);
  }
  double defect = 0.0;
  for (double t : ts) {
    const double v[4] = {
        eval_norm(spec, Vec2(axes.e1 + t * axes.e2)), eval_norm(spec, Vec2(axes.e1 - t * axes.e2)),
        eval_norm(spec, Vec2(axes.e2 + t * axes.e1)), eval_norm(spec, Vec2(axes.e2 - t * axes.e1))};
    defect = std::max(defect, *std::max_element(v, v + 4) - *std::min_element(v, v + 4));
  }
  axes.symmetry_defect = defect;
  return axes;
}

double f_func(const NormSpec& spec, const Vec2& e1, const Vec2& e2, double t) {
  return eval_norm(spec, Vec2((1.0 + 2.0 * t) * e1 + (2.0 - t) * e2));
}

double g_func(const NormSpec& spec, const Vec2& e1, const Vec2& e2, double t) {
  return eval_norm(spec, Vec2((1.0 + t) * e1 + (1.0 - t) * e2));
}

double h_func(const NormSpec& spec, const Vec2& e1, const Vec2& e2, double t) {
  const double fp = f_func(spec, e1, e2, t);
  const double fm = f_func(spec, e1, e2, -t);
  const double g = g_func(spec, e1, e2, t);
  return (fp * fp + fm * fm) / (5.0 * g * g);
}

double h_limit(const NormSpec& spec, const Vec2& e1, const Vec2& e2) {
  const double a = eval_norm(spec, Vec2(2.0 * e1 - e2));
  const double b = eval_norm(spec, Vec2(e1 - e2));
  return 2.0 * a * a / (5.0 * b * b);
}

AxisPair axis_pair(const NormSpec& spec, const Vec2& e1, const Vec2& e2, double t) {
  if (std::isinf(t)) return {e2, e1};
  const Vec2 x = e1 + t * e2;
  const Vec2 y = t * e1 - e2;
  return {x / eval_norm(spec, x), y / eval_norm(spec, y)};
}

Estimate omega_closed_form(const NormSpec& spec, const AxesPair& axes, const GridConfig& cfg) {
  cfg.validate();
  if (!(axes.symmetry_defect <= kAxesDefectThreshold)) {
    std::ostringstream os;
    os << "axes symmetry defect " << axes.symmetry_defect << " exceeds "
       << kAxesDefectThreshold << "; the closed form needs a symmetric plane";
    throw DomainError(os.str());
  }
  const Vec2& e1 = axes.e1;
  const Vec2& e2 = axes.e2;
  auto h_of_s = [&](double s) { return h_func(spec, e1, e2, s / (1.0 - s)); };

  const int n = cfg.theta_grid;
  double best_s = 0.0;
  double best = h_of_s(0.0);
  for (int k = 1; k < n; ++k) {
    const double s = static_cast<double>(k) / n;
    const double v = h_of_s(s);
    if (v > best) {
      best = v;
      best_s = s;
    }
  }
  const double ds = 1.0 / n;
  const auto refined = search::golden_max(h_of_s, std::max(0.0, best_s - ds),
                                          std::min(1.0 - 0.25 * ds, best_s + ds), cfg.refine_tol,
                                          cfg.refine_budget);
  double t = best_s / (1.0 - best_s);
  if (refined.value > best) {
    best = refined.value;
    t = refined.arg / (1.0 - refined.arg);
  }
  const double limit = h_limit(spec, e1, e2);
  if (limit > best) {
    best = limit;
    t = std::numeric_limits<double>::infinity();
  }

  Estimate e;
  e.constant = ConstantKind::omega();
  e.value = best;
  const AxisPair pair = axis_pair(spec, e1, e2, t);
  e.witness.x = pair.x;
  e.witness.y = pair.y;
  e.witness.theta = std::atan2(pair.x.y(), pair.x.x());
  e.witness.phi = std::atan2(pair.y.y(), pair.y.x());
  e.witness.radius = 1.0;
  e.witness.aux = t;
  e.witness.residual = isosceles_residual(spec, pair.x, pair.y);
  e.grid_size = n;
  e.refine_tol = cfg.refine_tol;
  e.direction = Direction::Supremum;
  return e;
}

}  // namespace isoconst
