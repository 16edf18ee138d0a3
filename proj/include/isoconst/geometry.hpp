#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace isoconst {

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

using Vec2 = Vector2<double>;
using Mat2 = Matrix2<double>;

/// Raised when a norm description violates the norm axioms it must encode
/// (p < 1, asymmetric facet set, singular matrix, ...).
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sentinel value of p selecting the max norm.
inline constexpr double kLpInfinity = std::numeric_limits<double>::infinity();

struct LpNorm {
  double p = 2.0;
};

/// Unit ball = { v : <a_i, v> <= 1 for every functional a_i }.
struct PolyhedralNorm {
  std::vector<Vec2> functionals;
};

/// The l_inf / l_1 hybrid: ||x||_1 on the quadrants where x1*x2 <= 0 and
/// ||x||_inf where x1*x2 >= 0. Its unit ball is the hexagon with vertices
/// (1,0), (1,1), (0,1), (-1,0), (-1,-1), (0,-1).
struct HexagonalMixedNorm {};

class NormSpec;

/// Pushforward of `base` under `matrix`: ||v|| = base(matrix^{-1} v), so
/// `matrix` is an isometry from the base plane onto the new one.
struct AffineImageNorm {
  std::shared_ptr<const NormSpec> base;
  Mat2 matrix = Mat2::Identity();
  Mat2 inverse = Mat2::Identity();
};

/// Declarative description of a norm on R^2. Construction validates the
/// invariants of each variant; a NormSpec that exists is always a norm.
class NormSpec {
 public:
  using Variant =
      std::variant<LpNorm, PolyhedralNorm, HexagonalMixedNorm, AffineImageNorm>;

  static NormSpec lp(double p);
  static NormSpec linf() { return lp(kLpInfinity); }
  static NormSpec polyhedral(std::vector<Vec2> functionals);
  static NormSpec hexagonal_mixed();
  static NormSpec affine_image(const NormSpec& base, const Mat2& matrix);

  const Variant& variant() const { return variant_; }

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&variant_);
  }

  /// Short human-readable tag, e.g. "lp(1.5)", "polyhedral[8]".
  std::string describe() const;

 private:
  explicit NormSpec(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

double eval_norm(const NormSpec& spec, const Vec2& v);

struct SpherePoint {
  double theta = 0.0;
  Vec2 coords = Vec2::Zero();
};

/// Gauge-normalized direction (cos theta, sin theta) / ||(cos theta, sin theta)||.
/// Angles in [pi, 2pi) are evaluated as the negation of the point at theta - pi.
SpherePoint unit_point(const NormSpec& spec, double theta);

/// Unit point at theta = 2 pi index / count. For even `count`, the point at
/// index + count/2 is the exact negation of the point at index.
SpherePoint unit_point_at(const NormSpec& spec, std::int64_t index,
                          std::int64_t count);

/// Builds the polyhedral norm whose unit ball is the given centrally
/// symmetric convex polygon (counterclockwise, origin inside).
NormSpec polyhedral_from_vertices(const std::vector<Vec2>& vertices);

struct AxiomReport {
  bool pass = true;
  int samples = 0;
  int violations = 0;
  std::optional<std::string> first_counterexample;
};

AxiomReport verify_norm_axioms(const NormSpec& spec, int sample_count,
                               std::uint64_t seed = 0x5eed);

/// Uniform double in [0, 1) from a 64-bit generator, independent of the
/// standard library's distribution implementation.
template <typename Engine>
double uniform01(Engine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Random centrally symmetric convex polygon with `half_vertices` random
/// directions (before the hull), radii in [r_min, r_max].
std::vector<Vec2> random_symmetric_polygon(std::uint64_t seed,
                                           int half_vertices,
                                           double r_min = 0.6,
                                           double r_max = 1.4);

}  // namespace isoconst
