#include "isoconst/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace isoconst {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double lp_value(double p, const Vec2& v) {
  const double a = std::abs(v.x());
  const double b = std::abs(v.y());
  if (std::isinf(p)) return std::max(a, b);
  if (p == 1.0) return a + b;
  if (p == 2.0) return std::hypot(a, b);
  const double hi = std::max(a, b);
  if (hi == 0.0) return 0.0;
  const double lo = std::min(a, b) / hi;
  return hi * std::pow(1.0 + std::pow(lo, p), 1.0 / p);
}

double hexagonal_value(const Vec2& v) {
  const double a = std::abs(v.x());
  const double b = std::abs(v.y());
  if (v.x() * v.y() <= 0.0) return a + b;
  return std::max(a, b);
}

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

void check_symmetric(const std::vector<Vec2>& functionals) {
  for (const Vec2& a : functionals) {
    const double scale = std::max(1.0, a.norm());
    const bool found = std::any_of(
        functionals.begin(), functionals.end(),
        [&](const Vec2& b) { return (a + b).norm() <= 1e-9 * scale; });
    if (!found) {
      std::ostringstream os;
      os << "polyhedral functional set is not centrally symmetric: (" << a.x()
         << ", " << a.y() << ") has no negation";
      throw SpecError(os.str());
    }
  }
}

}  // namespace

NormSpec NormSpec::lp(double p) {
  if (std::isnan(p) || p < 1.0) throw SpecError("p must be >= 1");
  return NormSpec(LpNorm{p});
}

NormSpec NormSpec::polyhedral(std::vector<Vec2> functionals) {
  if (functionals.empty()) throw SpecError("polyhedral functional set is empty");
  for (const Vec2& a : functionals) {
    if (!a.allFinite()) throw SpecError("polyhedral functional is not finite");
  }
  check_symmetric(functionals);
  // A symmetric set bounds the ball iff it spans the plane.
  double best = 0.0;
  for (const Vec2& a : functionals) {
    for (const Vec2& b : functionals) {
      best = std::max(best, std::abs(cross(a, b)) / std::max(1e-300, a.norm() * b.norm()));
    }
  }
  if (best < 1e-12) throw SpecError("polyhedral functionals do not span the plane (unbounded ball)");
  return NormSpec(PolyhedralNorm{std::move(functionals)});
}

NormSpec NormSpec::hexagonal_mixed() { return NormSpec(HexagonalMixedNorm{}); }

NormSpec NormSpec::affine_image(const NormSpec& base, const Mat2& matrix) {
  if (!matrix.allFinite()) throw SpecError("affine matrix is not finite");
  const double det = matrix.determinant();
  const double scale = std::max(1e-300, matrix.cwiseAbs().maxCoeff());
  if (std::abs(det) <= 1e-14 * scale * scale) throw SpecError("affine matrix is singular");
  AffineImageNorm image;
  image.base = std::make_shared<const NormSpec>(base);
  image.matrix = matrix;
  image.inverse = matrix.inverse();
  return NormSpec(std::move(image));
}

std::string NormSpec::describe() const {
  std::ostringstream os;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LpNorm>) {
          if (std::isinf(n.p)) os << "lp(inf)";
          else os << "lp(" << n.p << ")";
        } else if constexpr (std::is_same_v<T, PolyhedralNorm>) {
          os << "polyhedral[" << n.functionals.size() << "]";
        } else if constexpr (std::is_same_v<T, HexagonalMixedNorm>) {
          os << "hex_linf_l1";
        } else {
          os << "affine_image(" << n.base->describe() << ")";
        }
      },
      variant_);
  return os.str();
}

double eval_norm(const NormSpec& spec, const Vec2& v) {
  return std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LpNorm>) {
          return lp_value(n.p, v);
        } else if constexpr (std::is_same_v<T, PolyhedralNorm>) {
          double m = 0.0;
          for (const Vec2& a : n.functionals) m = std::max(m, a.dot(v));
          return m;
        } else if constexpr (std::is_same_v<T, HexagonalMixedNorm>) {
          return hexagonal_value(v);
        } else {
          return eval_norm(*n.base, Vec2(n.inverse * v));
        }
      },
      spec.variant());
}

SpherePoint unit_point(const NormSpec& spec, double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  const bool flip = t >= std::numbers::pi;
  const double base = flip ? t - std::numbers::pi : t;
  const Vec2 dir(std::cos(base), std::sin(base));
  Vec2 coords = dir / eval_norm(spec, dir);
  if (flip) coords = -coords;
  return {t, coords};
}

SpherePoint unit_point_at(const NormSpec& spec, std::int64_t index,
                          std::int64_t count) {
  index %= count;
  if (index < 0) index += count;
  if (count % 2 == 0 && index >= count / 2) {
    SpherePoint p = unit_point_at(spec, index - count / 2, count);
    p.coords = -p.coords;
    p.theta = kTwoPi * static_cast<double>(index) / static_cast<double>(count);
    return p;
  }
  const double theta = kTwoPi * static_cast<double>(index) / static_cast<double>(count);
  const Vec2 dir(std::cos(theta), std::sin(theta));
  return {theta, dir / eval_norm(spec, dir)};
}

NormSpec polyhedral_from_vertices(const std::vector<Vec2>& vertices) {
  const std::size_t n = vertices.size();
  if (n < 4) throw SpecError("polygon needs at least 4 vertices");
  if (n % 2 != 0) throw SpecError("centrally symmetric polygon has an even vertex count");
  double scale = 0.0;
  for (const Vec2& v : vertices) {
    if (!v.allFinite()) throw SpecError("polygon vertex is not finite");
    scale = std::max(scale, v.norm());
  }
  const std::size_t half = n / 2;
  for (std::size_t i = 0; i < half; ++i) {
    if ((vertices[i] + vertices[i + half]).norm() > 1e-12 * scale) {
      throw SpecError("polygon is not centrally symmetric");
    }
  }
  std::vector<Vec2> functionals;
  functionals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = vertices[i];
    const Vec2& b = vertices[(i + 1) % n];
    const Vec2& c = vertices[(i + 2) % n];
    if (cross(b - a, c - b) <= -1e-12 * scale * scale) {
      throw SpecError("polygon is not convex or not counterclockwise");
    }
    if (cross(a, b) <= 1e-12 * scale * scale) {
      throw SpecError("polygon does not contain the origin in its interior");
    }
    // Outward normal of edge a->b scaled so that <f, a> = <f, b> = 1.
    const Vec2 normal(b.y() - a.y(), a.x() - b.x());
    functionals.push_back(normal / normal.dot(a));
  }
  // Antipodal edges give exactly negated functionals.
  for (std::size_t i = 0; i < half; ++i) functionals[i + half] = -functionals[i];
  return NormSpec::polyhedral(std::move(functionals));
}

AxiomReport verify_norm_axioms(const NormSpec& spec, int sample_count,
                               std::uint64_t seed) {
  AxiomReport report;
  std::mt19937_64 rng(seed);
  auto coord = [&] { return 10.0 * uniform01(rng) - 5.0; };
  auto record = [&](const std::string& what) {
    ++report.violations;
    report.pass = false;
    if (!report.first_counterexample) report.first_counterexample = what;
  };
  constexpr double kLambdas[] = {-2.0, -1.0, 0.5, 3.0};
  for (int i = 0; i < sample_count; ++i) {
    const Vec2 u(coord(), coord());
    const Vec2 v(coord(), coord());
    const double nu = eval_norm(spec, u);
    const double nv = eval_norm(spec, v);
    ++report.samples;
    std::ostringstream os;
    os.precision(17);
    if (!(nv > 0.0)) {
      os << "nonzero vector (" << v.x() << ", " << v.y() << ") has norm " << nv;
      record(os.str());
      continue;
    }
    for (double lambda : kLambdas) {
      const double lhs = eval_norm(spec, Vec2(lambda * v));
      if (std::abs(lhs - std::abs(lambda) * nv) > 1e-10 * (1.0 + std::abs(lambda) * nv)) {
        os << "homogeneity fails at v=(" << v.x() << ", " << v.y() << "), lambda=" << lambda;
        record(os.str());
      }
    }
    const double random_lambda = 8.0 * uniform01(rng) - 4.0;
    if (std::abs(eval_norm(spec, Vec2(random_lambda * u)) - std::abs(random_lambda) * nu) >
        1e-10 * (1.0 + std::abs(random_lambda) * nu)) {
      os << "homogeneity fails at u=(" << u.x() << ", " << u.y() << "), lambda=" << random_lambda;
      record(os.str());
    }
    if (eval_norm(spec, Vec2(u + v)) > nu + nv + 1e-10 * (1.0 + nu + nv)) {
      os << "triangle inequality fails at u=(" << u.x() << ", " << u.y() << "), v=(" << v.x()
         << ", " << v.y() << ")";
      record(os.str());
    }
    if (std::abs(eval_norm(spec, Vec2(-v)) - nv) > 1e-12 * (1.0 + nv)) {
      os << "symmetry fails at v=(" << v.x() << ", " << v.y() << ")";
      record(os.str());
    }
  }
  if (eval_norm(spec, Vec2::Zero()) != 0.0) record("norm of the zero vector is nonzero");
  return report;
}

std::vector<Vec2> random_symmetric_polygon(std::uint64_t seed, int half_vertices,
                                           double r_min, double r_max) {
  std::mt19937_64 rng(seed);
  std::vector<Vec2> points;
  for (int i = 0; i < half_vertices; ++i) {
    const double angle = std::numbers::pi * uniform01(rng);
    const double radius = r_min + (r_max - r_min) * uniform01(rng);
    const Vec2 p(radius * std::cos(angle), radius * std::sin(angle));
    points.push_back(p);
    points.push_back(-p);
  }
  // Monotone chain hull; the hull of a symmetric set is symmetric.
  std::sort(points.begin(), points.end(), [](const Vec2& a, const Vec2& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  std::vector<Vec2> hull(2 * points.size());
  std::size_t k = 0;
  for (const Vec2& p : points) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 1]) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 1]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  // Rotate so vertex i and i + n/2 are antipodes (n even for symmetric hulls).
  const std::size_t n = hull.size();
  std::vector<Vec2> ordered;
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::atan2(hull[i].y(), hull[i].x()) < std::atan2(hull[start].y(), hull[start].x())) {
      start = i;
    }
  }
  for (std::size_t i = 0; i < n; ++i) ordered.push_back(hull[(start + i) % n]);
  // Snap second half to exact negations of the first.
  for (std::size_t i = 0; i < n / 2; ++i) ordered[i + n / 2] = -ordered[i];
  return ordered;
}

}  // namespace isoconst
