#pragma once

#include "isoconst/geometry.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace isoconst {

enum class OrthoKind { Isosceles, Birkhoff };

struct OrthoPair {
  Vec2 x = Vec2::Zero();
  Vec2 y = Vec2::Zero();
  /// Isosceles: ||x+y|| - ||x-y||. Birkhoff: min_lambda ||x+lambda y|| - ||x||.
  double residual = 0.0;
  OrthoKind kind = OrthoKind::Isosceles;
  /// Parameter angle of the partner direction.
  double phi = 0.0;
};

/// Bisection did not reach the requested residual.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double theta, double best_residual)
      : std::runtime_error(what), theta_(theta), best_residual_(best_residual) {}
  double theta() const { return theta_; }
  double best_residual() const { return best_residual_; }

 private:
  double theta_;
  double best_residual_;
};

inline constexpr int kPartnerScan = 720;
inline constexpr int kBisectionBudget = 200;
inline constexpr double kDefaultSolverTol = 1e-10;

double isosceles_residual(const NormSpec& spec, const Vec2& x, const Vec2& y);

/// All y = radius * u(phi) with ||x+y|| = ||x-y|| for x = u(theta_x), found
/// by a 720-point sign scan of the residual followed by bisection inside
/// every sign-change bracket. Roots come in antipodal pairs, sorted by phi.
std::vector<OrthoPair> isosceles_partners(const NormSpec& spec, double theta_x,
                                          double radius,
                                          double tol = kDefaultSolverTol);

/// Same as isosceles_partners for an arbitrary (not necessarily unit) x.
std::vector<OrthoPair> isosceles_partners_of(const NormSpec& spec, const Vec2& x,
                                             double radius,
                                             double tol = kDefaultSolverTol);

struct LambdaMin {
  double lambda_star = 0.0;
  double min_value = 0.0;
};

/// Global minimizer of the convex map lambda -> ||x + lambda y||.
LambdaMin birkhoff_lambda_min(const NormSpec& spec, const Vec2& x, const Vec2& y);

bool is_birkhoff(const NormSpec& spec, const Vec2& x, const Vec2& y, double tol);

/// Unit directions y with u(theta_x) Birkhoff orthogonal to y. Closed under
/// negation and never empty.
std::vector<SpherePoint> birkhoff_partners(const NormSpec& spec, double theta_x,
                                           double tol = 1e-9);

}  // namespace isoconst
