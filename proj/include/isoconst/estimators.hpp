#pragma once

#include "isoconst/geometry.hpp"
#include "isoconst/orthogonality.hpp"

#include <compare>
#include <stdexcept>
#include <string>

namespace isoconst {

enum class ConstantTag { Omega, OmegaPrime, James, Schaffer, CNJ, Gamma, Delta, DConst, BR };

/// Which geometric constant an Estimate refers to. Gamma carries t in [0, 1],
/// Delta carries eps in [0, 2]; the other tags ignore `param`.
struct ConstantKind {
  ConstantTag tag = ConstantTag::Omega;
  double param = 0.0;

  static ConstantKind omega() { return {ConstantTag::Omega}; }
  static ConstantKind omega_prime() { return {ConstantTag::OmegaPrime}; }
  static ConstantKind james() { return {ConstantTag::James}; }
  static ConstantKind schaffer() { return {ConstantTag::Schaffer}; }
  static ConstantKind cnj() { return {ConstantTag::CNJ}; }
  static ConstantKind gamma(double t);
  static ConstantKind delta(double eps);
  static ConstantKind d_const() { return {ConstantTag::DConst}; }
  static ConstantKind br() { return {ConstantTag::BR}; }

  bool has_param() const { return tag == ConstantTag::Gamma || tag == ConstantTag::Delta; }
  /// CLI name: omega, omega-prime, james, schaffer, cnj, gamma, delta, d, br.
  std::string name() const;

  auto operator<=>(const ConstantKind&) const = default;
};

/// Parses a CLI constant name (see ConstantKind::name). Throws
/// std::invalid_argument for unknown names or out-of-range parameters.
ConstantKind parse_constant_kind(const std::string& name, double param);

enum class Direction { Supremum, Infimum };

struct GridConfig {
  /// Samples of the parameter angle over a full turn (even, >= 64).
  int theta_grid = 2048;
  /// Uniform radii k / radius_grid, k = 1..radius_grid, for searches over y in B_X.
  int radius_grid = 32;
  /// Width at which golden-section refinement stops.
  double refine_tol = 1e-9;
  /// Iteration cap for each golden-section refinement.
  int refine_budget = 100;
  int workers = 1;

  void validate() const;
  /// Angle grid used by searches over two free directions (gamma, C_NJ, BR):
  /// theta_grid / 4 clamped to [64, 512], rounded to a multiple of 8.
  int pair_grid() const;
};

struct Witness {
  Vec2 x = Vec2::Zero();
  Vec2 y = Vec2::Zero();
  double theta = 0.0;
  double phi = 0.0;
  double radius = 0.0;
  /// Extra parameter: alpha for BR, lambda* for D.
  double aux = 0.0;
  /// Isosceles residual ||x+y|| - ||x-y|| at the witness.
  double residual = 0.0;
};

struct Estimate {
  ConstantKind constant;
  double value = 0.0;
  Witness witness;
  int grid_size = 0;
  double refine_tol = 0.0;
  Direction direction = Direction::Supremum;
};

/// An estimate left the interval the theory guarantees for it.
class BoundViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Zero denominator in omega_ratio.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (||x+2y||^2 + ||2x+y||^2) / (5 ||x+y||^2).
double omega_ratio(const NormSpec& spec, const Vec2& x, const Vec2& y);

Estimate estimate_omega(const NormSpec& spec, const GridConfig& cfg = {});
Estimate estimate_omega_prime(const NormSpec& spec, const GridConfig& cfg = {});
Estimate estimate_james(const NormSpec& spec, const GridConfig& cfg = {});
Estimate estimate_schaffer(const NormSpec& spec, const GridConfig& cfg = {});
Estimate estimate_cnj(const NormSpec& spec, const GridConfig& cfg = {});
Estimate estimate_gamma(const NormSpec& spec, double t, const GridConfig& cfg = {});
Estimate estimate_delta(const NormSpec& spec, double eps, const GridConfig& cfg = {});
Estimate estimate_d(const NormSpec& spec, const GridConfig& cfg = {});
Estimate estimate_br(const NormSpec& spec, const GridConfig& cfg = {});

Estimate estimate(const NormSpec& spec, const ConstantKind& kind, const GridConfig& cfg = {});

/// Recomputes the estimated objective at the estimate's witness.
double objective_at_witness(const NormSpec& spec, const Estimate& e);

}  // namespace isoconst
