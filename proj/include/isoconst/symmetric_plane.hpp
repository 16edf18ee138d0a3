#pragma once

#include "isoconst/estimators.hpp"
#include "isoconst/geometry.hpp"

namespace isoconst {

/// Candidate axes {e1, e2} of a symmetric Minkowski plane, normalized to the
/// unit sphere. symmetry_defect is the largest spread among
/// ||e1 + t e2||, ||e1 - t e2||, ||e2 + t e1||, ||e2 - t e1|| over the sampled t.
struct AxesPair {
  Vec2 e1 = Vec2::UnitX();
  Vec2 e2 = Vec2::UnitY();
  double symmetry_defect = 0.0;
};

/// Maximum symmetry defect accepted by omega_closed_form.
inline constexpr double kAxesDefectThreshold = 1e-8;

/// Samples t = 0, +-1 and +-10^u for u evenly spaced on [-3, 1].
/// Throws SpecError for linearly dependent axes.
AxesPair check_axes(const NormSpec& spec, const Vec2& e1, const Vec2& e2, int sample_count = 100);

/// ||(1 + 2t) e1 + (2 - t) e2||
double f_func(const NormSpec& spec, const Vec2& e1, const Vec2& e2, double t);
/// ||(1 + t) e1 + (1 - t) e2||
double g_func(const NormSpec& spec, const Vec2& e1, const Vec2& e2, double t);

/// (f(t)^2 + f(-t)^2) / (5 g(t)^2)
double h_func(const NormSpec& spec, const Vec2& e1, const Vec2& e2, double t);

/// h at t -> infinity: 2 ||2 e1 - e2||^2 / (5 ||e1 - e2||^2).
double h_limit(const NormSpec& spec, const Vec2& e1, const Vec2& e2);

/// The isosceles pair x = (e1 + t e2)/||.||, y = (t e1 - e2)/||.|| whose omega
/// ratio equals h(t) on a symmetric plane.
struct AxisPair {
  Vec2 x;
  Vec2 y;
};
AxisPair axis_pair(const NormSpec& spec, const Vec2& e1, const Vec2& e2, double t);

/// Omega of a symmetric plane as max over t >= 0 of h(t), with t = s / (1 - s)
/// sampled on s in [0, 1) and the t -> infinity limit as an extra candidate.
/// The witness carries the axis pair and t in `aux` (infinity for the limit).
/// Throws DomainError when axes.symmetry_defect exceeds kAxesDefectThreshold.
Estimate omega_closed_form(const NormSpec& spec, const AxesPair& axes, const GridConfig& cfg = {});

}  // namespace isoconst
