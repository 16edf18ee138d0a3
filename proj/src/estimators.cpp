#include "isoconst/estimators.hpp"

#include "isoconst/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <tuple>

namespace isoconst {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBoundSlack = 1e-9;
/// Grid cells refined per estimate.
constexpr int kSeeds = 4;

struct Cell {
  bool valid = false;
  double value = 0.0;
  Witness witness;
};

bool better(Direction dir, const Cell& a, const Cell& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  if (a.value != b.value) return dir == Direction::Supremum ? a.value > b.value : a.value < b.value;
  return std::tie(a.witness.theta, a.witness.phi, a.witness.radius) <
         std::tie(b.witness.theta, b.witness.phi, b.witness.radius);
}

double oriented(Direction dir, double v) { return dir == Direction::Supremum ? v : -v; }

void check_bound(const char* what, const Cell& cell, double lo, double hi) {
  const double value = cell.value;
  if (value < lo - kBoundSlack || value > hi + kBoundSlack) {
    const Witness& w = cell.witness;
    std::ostringstream os;
    os.precision(17);
    os << what << " estimate " << value << " lies outside [" << lo << ", " << hi
       << "] (witness x=(" << w.x.x() << ", " << w.x.y() << "), y=(" << w.y.x() << ", "
       << w.y.y() << "), aux=" << w.aux << ")";
    throw BoundViolation(os.str());
  }
}

/// Indices of the best `count` cells (deterministic order) plus `extra`.
std::vector<std::size_t> pick_seeds(const std::vector<Cell>& cells, Direction dir,
                                    std::vector<std::size_t> extra = {}) {
  std::vector<std::size_t> order(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const std::size_t keep = std::min<std::size_t>(kSeeds, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (better(dir, cells[a], cells[b])) return true;
                      if (better(dir, cells[b], cells[a])) return false;
                      return a < b;
                    });
  order.resize(keep);
  for (std::size_t e : extra) {
    if (std::find(order.begin(), order.end(), e) == order.end()) order.push_back(e);
  }
  std::erase_if(order, [&](std::size_t i) { return !cells[i].valid; });
  return order;
}

/// Box for nested golden-section refinement: coordinate k ranges over
/// [center_k - half_k, center_k + half_k] intersected with [lo_k, hi_k].
struct Box {
  int dims = 1;
  std::array<double, 3> center{};
  std::array<double, 3> half{};
  std::array<double, 3> lo{-1e300, -1e300, -1e300};
  std::array<double, 3> hi{1e300, 1e300, 1e300};
};

/// Nested golden-section search: the outer coordinate is optimized with the
/// inner ones re-optimized at every probe, which follows ridges that a
/// coordinate-wise search would stall on. When the optimum lands on the edge
/// of the box (a ridge leaving it), the box is re-centred there and the
/// search repeated, up to kMaxBoxMoves times.
inline constexpr int kMaxBoxMoves = 24;

template <typename CellAt>
Cell refine_nested(CellAt&& cell_at, Box box, Direction dir, const GridConfig& cfg) {
  Cell best;
  std::array<double, 3> best_point = box.center;
  for (int move = 0; move <= kMaxBoxMoves; ++move) {
    std::array<double, 3> point = box.center;
    std::array<double, 3> round_point = box.center;
    Cell round_best;
    std::function<double(int)> level = [&](int k) -> double {
      if (k == box.dims) {
        Cell c = cell_at(point);
        if (better(dir, c, round_best)) {
          round_best = c;
          round_point = point;
        }
        return c.valid ? oriented(dir, c.value) : -1e300;
      }
      const double lo = std::max(box.lo[k], box.center[k] - box.half[k]);
      const double hi = std::min(box.hi[k], box.center[k] + box.half[k]);
      const auto saved = point;
      const auto e = search::golden_max(
          [&](double v) {
            point[k] = v;
            for (int j = k + 1; j < box.dims; ++j) point[j] = box.center[j];
            return level(k + 1);
          },
          lo, hi, cfg.refine_tol, cfg.refine_budget);
      point = saved;
      return e.value;
    };
    level(0);
    if (!better(dir, round_best, best)) break;
    best = round_best;
    best_point = round_point;
    bool on_edge = false;
    for (int k = 0; k < box.dims; ++k) {
      const double lo = std::max(box.lo[k], box.center[k] - box.half[k]);
      const double hi = std::min(box.hi[k], box.center[k] + box.half[k]);
      const double margin = 0.05 * box.half[k];
      const bool at_lo = best_point[k] <= lo + margin && lo > box.lo[k];
      const bool at_hi = best_point[k] >= hi - margin && hi < box.hi[k];
      on_edge = on_edge || at_lo || at_hi;
    }
    if (!on_edge) break;
    box.center = best_point;
  }
  return best;
}

Estimate finish(const ConstantKind& kind, Direction dir, const Cell& best, int grid,
                const GridConfig& cfg) {
  Estimate e;
  e.constant = kind;
  e.value = best.value;
  e.witness = best.witness;
  e.grid_size = grid;
  e.refine_tol = cfg.refine_tol;
  e.direction = dir;
  return e;
}

// ---------------------------------------------------------------------------
// Searches over unit isosceles pairs (Omega, Omega', J, S, D).

struct PairValue {
  double value;
  double aux;
};
using PairObjective = std::function<PairValue(const Vec2&, const Vec2&)>;

Cell isosceles_cell(const NormSpec& spec, const SpherePoint& x, double radius,
                    const PairObjective& objective, Direction dir) {
  std::vector<OrthoPair> roots;
  try {
    roots = isosceles_partners_of(spec, x.coords, radius);
  } catch (const ConvergenceError& err) {
    std::ostringstream os;
    os.precision(17);
    os << err.what() << " at theta=" << x.theta << ", radius=" << radius;
    throw ConvergenceError(os.str(), x.theta, err.best_residual());
  }
  Cell best;
  for (const OrthoPair& p : roots) {
    const PairValue v = objective(p.x, p.y);
    Cell c{true, v.value, {p.x, p.y, x.theta, p.phi, radius, v.aux, p.residual}};
    if (better(dir, c, best)) best = c;
  }
  return best;
}

Cell isosceles_search(const NormSpec& spec, const GridConfig& cfg,
                      const std::vector<double>& radii, const PairObjective& objective,
                      Direction dir) {
  const int n = cfg.theta_grid;
  // Every objective here is invariant under (x, y) -> (-x, -y): half a turn of x suffices.
  const std::size_t rows = static_cast<std::size_t>(n / 2);
  const std::size_t nr = radii.size();
  std::vector<Cell> cells(rows * nr);
  search::parallel_for(rows, cfg.workers, [&](std::size_t i) {
    const SpherePoint x = unit_point_at(spec, static_cast<std::int64_t>(i), n);
    for (std::size_t k = 0; k < nr; ++k) {
      cells[i * nr + k] = isosceles_cell(spec, x, radii[k], objective, dir);
    }
  });

  // Always refine the best cell at the largest radius as well, so the
  // result on B_X dominates the one on S_X.
  std::vector<std::size_t> extra;
  if (nr > 1) {
    std::size_t best_outer = nr - 1;
    for (std::size_t i = 0; i < rows; ++i) {
      if (better(dir, cells[i * nr + nr - 1], cells[best_outer])) best_outer = i * nr + nr - 1;
    }
    extra.push_back(best_outer);
  }
  const auto seeds = pick_seeds(cells, dir, extra);
  const double step = kTwoPi / n;
  const double radius_step = nr > 1 ? radii[1] - radii[0] : 0.0;
  std::vector<Cell> refined(seeds.size());
  search::parallel_for(seeds.size(), cfg.workers, [&](std::size_t s) {
    const Cell& seed = cells[seeds[s]];
    Box box;
    box.dims = nr > 1 ? 2 : 1;
    box.center = {seed.witness.theta, seed.witness.radius, 0.0};
    box.half = {step, radius_step, 0.0};
    box.lo[1] = 1e-6;
    box.hi[1] = radii.back();
    refined[s] = refine_nested(
        [&](const std::array<double, 3>& p) {
          const double r = nr > 1 ? p[1] : radii.front();
          return isosceles_cell(spec, unit_point(spec, p[0]), r, objective, dir);
        },
        box, dir, cfg);
  });

  Cell best;
  for (const Cell& c : cells) {
    if (better(dir, c, best)) best = c;
  }
  for (const Cell& c : refined) {
    if (better(dir, c, best)) best = c;
  }
  return best;
}

PairObjective omega_objective(const NormSpec& spec) {
  return [&spec](const Vec2& x, const Vec2& y) { return PairValue{omega_ratio(spec, x, y), 0.0}; };
}

PairObjective sum_norm_objective(const NormSpec& spec) {
  return [&spec](const Vec2& x, const Vec2& y) {
    return PairValue{eval_norm(spec, Vec2(x + y)), 0.0};
  };
}

// ---------------------------------------------------------------------------
// Free searches over pairs of directions (gamma, C_NJ).

double gamma_value(const NormSpec& spec, const Vec2& x, const Vec2& y, double t) {
  const double a = eval_norm(spec, Vec2(x + t * y));
  const double b = eval_norm(spec, Vec2(x - t * y));
  return 0.5 * (a * a + b * b);
}

double cnj_value(const NormSpec& spec, const Vec2& x, const Vec2& y) {
  const double s = eval_norm(spec, Vec2(x + y));
  const double d = eval_norm(spec, Vec2(x - y));
  const double nx = eval_norm(spec, x);
  const double ny = eval_norm(spec, y);
  return (s * s + d * d) / (2.0 * (nx * nx + ny * ny));
}

double br_quotient(const NormSpec& spec, const Vec2& x, const Vec2& y, double alpha) {
  return (eval_norm(spec, Vec2(x + alpha * y)) - eval_norm(spec, Vec2(x - alpha * y))) / alpha;
}

/// sup over alpha in [2^-20, 2^20] of the BR difference quotient.
PairValue br_alpha_sup(const NormSpec& spec, const Vec2& x, const Vec2& y, const GridConfig& cfg) {
  double best_log = -20.0;
  double best = br_quotient(spec, x, y, std::exp2(best_log));
  for (int k = 1; k <= 80; ++k) {
    const double a = -20.0 + 0.5 * k;
    const double q = br_quotient(spec, x, y, std::exp2(a));
    if (q > best) {
      best = q;
      best_log = a;
    }
  }
  const auto e = search::golden_max(
      [&](double a) { return br_quotient(spec, x, y, std::exp2(a)); },
      std::max(-20.0, best_log - 0.5), std::min(20.0, best_log + 0.5), cfg.refine_tol,
      cfg.refine_budget);
  if (e.value > best) return {e.value, std::exp2(e.arg)};
  return {best, std::exp2(best_log)};
}

Cell br_cell(const NormSpec& spec, double theta, const GridConfig& cfg) {
  const SpherePoint x = unit_point(spec, theta);
  Cell best;
  for (const SpherePoint& y : birkhoff_partners(spec, x.theta)) {
    // The norm-minimal point of the line x + lambda y is exactly Birkhoff
    // orthogonal to y. Snapping to it keeps the small-alpha quotients, which
    // amplify any orthogonality defect by 1/alpha, within the [0, 1] range.
    const LambdaMin m = birkhoff_lambda_min(spec, x.coords, y.coords);
    const Vec2 foot = x.coords + m.lambda_star * y.coords;
    const Vec2 xs = foot / eval_norm(spec, foot);
    const PairValue v = br_alpha_sup(spec, xs, y.coords, cfg);
    Cell c{true, v.value, {xs, y.coords, x.theta, y.theta, 1.0, v.aux, 0.0}};
    if (better(Direction::Supremum, c, best)) best = c;
  }
  return best;
}

Cell delta_cell(const NormSpec& spec, double theta, double eps) {
  const SpherePoint x = unit_point(spec, theta);
  Cell best;
  auto consider = [&](const Vec2& y, double phi) {
    if (eval_norm(spec, Vec2(x.coords - y)) < eps) return;
    Cell c{true, 1.0 - 0.5 * eval_norm(spec, Vec2(x.coords + y)),
           {x.coords, y, x.theta, phi, 1.0, 0.0, 0.0}};
    if (better(Direction::Infimum, c, best)) best = c;
  };
  if (eps <= 0.0) consider(x.coords, x.theta);
  consider(-x.coords, std::fmod(x.theta + kPi, kTwoPi));
  std::array<bool, kPartnerScan + 1> feasible{};
  std::vector<Vec2> ys(kPartnerScan + 1);
  for (int j = 0; j <= kPartnerScan; ++j) {
    ys[j] = unit_point_at(spec, j % kPartnerScan, kPartnerScan).coords;
    feasible[j] = eval_norm(spec, Vec2(x.coords - ys[j])) >= eps;
  }
  for (int j = 0; j < kPartnerScan; ++j) {
    const double phi = kTwoPi * j / kPartnerScan;
    if (feasible[j]) consider(ys[j], phi);
    if (feasible[j] != feasible[j + 1]) {
      double good = feasible[j] ? phi : kTwoPi * (j + 1) / kPartnerScan;
      double bad = feasible[j] ? kTwoPi * (j + 1) / kPartnerScan : phi;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (good + bad);
        if (eval_norm(spec, Vec2(x.coords - unit_point(spec, mid).coords)) >= eps) good = mid;
        else bad = mid;
      }
      const SpherePoint y = unit_point(spec, good);
      consider(y.coords, y.theta);
    }
  }
  return best;
}

}  // namespace

ConstantKind ConstantKind::gamma(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("gamma parameter t must lie in [0, 1]");
  return {ConstantTag::Gamma, t};
}

ConstantKind ConstantKind::delta(double eps) {
  if (!(eps >= 0.0 && eps <= 2.0)) {
    throw std::invalid_argument("delta parameter eps must lie in [0, 2]");
  }
  return {ConstantTag::Delta, eps};
}

std::string ConstantKind::name() const {
  switch (tag) {
    case ConstantTag::Omega: return "omega";
    case ConstantTag::OmegaPrime: return "omega-prime";
    case ConstantTag::James: return "james";
    case ConstantTag::Schaffer: return "schaffer";
    case ConstantTag::CNJ: return "cnj";
    case ConstantTag::Gamma: return "gamma";
    case ConstantTag::Delta: return "delta";
    case ConstantTag::DConst: return "d";
    case ConstantTag::BR: return "br";
  }
  return "unknown";
}

ConstantKind parse_constant_kind(const std::string& name, double param) {
  if (name == "omega") return ConstantKind::omega();
  if (name == "omega-prime") return ConstantKind::omega_prime();
  if (name == "james") return ConstantKind::james();
  if (name == "schaffer") return ConstantKind::schaffer();
  if (name == "cnj") return ConstantKind::cnj();
  if (name == "gamma") return ConstantKind::gamma(param);
  if (name == "delta") return ConstantKind::delta(param);
  if (name == "d") return ConstantKind::d_const();
  if (name == "br") return ConstantKind::br();
  throw std::invalid_argument("unknown constant '" + name + "'");
}

void GridConfig::validate() const {
  if (theta_grid < 64 || theta_grid % 2 != 0) {
    throw std::invalid_argument("theta_grid must be an even integer >= 64");
  }
  if (radius_grid < 1) throw std::invalid_argument("radius_grid must be >= 1");
  if (!(refine_tol > 0.0)) throw std::invalid_argument("refine_tol must be > 0");
  if (refine_budget < 1) throw std::invalid_argument("refine_budget must be >= 1");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
}

int GridConfig::pair_grid() const {
  const int v = std::clamp(theta_grid / 4, 64, 512);
  return v - v % 8;
}

double omega_ratio(const NormSpec& spec, const Vec2& x, const Vec2& y) {
  const double s = eval_norm(spec, Vec2(x + y));
  if (s == 0.0) throw DomainError("omega ratio has a zero denominator (x + y = 0)");
  const double a = eval_norm(spec, Vec2(x + 2.0 * y));
  const double b = eval_norm(spec, Vec2(2.0 * x + y));
  return (a * a + b * b) / (5.0 * s * s);
}

Estimate estimate_omega(const NormSpec& spec, const GridConfig& cfg) {
  cfg.validate();
  const Cell best = isosceles_search(spec, cfg, {1.0}, omega_objective(spec), Direction::Supremum);
  check_bound("Omega", best, -1e300, 1.6);
  return finish(ConstantKind::omega(), Direction::Supremum, best, cfg.theta_grid, cfg);
}

Estimate estimate_omega_prime(const NormSpec& spec, const GridConfig& cfg) {
  cfg.validate();
  std::vector<double> radii;
  for (int k = 1; k <= cfg.radius_grid; ++k) radii.push_back(static_cast<double>(k) / cfg.radius_grid);
  Cell best = isosceles_search(spec, cfg, radii, omega_objective(spec), Direction::Supremum);
  // y = 0: (||x||^2 + ||2x||^2) / (5||x||^2) = 1.
  const SpherePoint x0 = unit_point(spec, 0.0);
  const Cell origin{true, 1.0, {x0.coords, Vec2::Zero(), 0.0, 0.0, 0.0, 0.0, 0.0}};
  if (better(Direction::Supremum, origin, best)) best = origin;
  check_bound("Omega'", best, 1.0, 1.6);
  return finish(ConstantKind::omega_prime(), Direction::Supremum, best, cfg.theta_grid, cfg);
}

Estimate estimate_james(const NormSpec& spec, const GridConfig& cfg) {
  cfg.validate();
  const Cell best =
      isosceles_search(spec, cfg, {1.0}, sum_norm_objective(spec), Direction::Supremum);
  check_bound("J", best, 1.0, 2.0);
  return finish(ConstantKind::james(), Direction::Supremum, best, cfg.theta_grid, cfg);
}

Estimate estimate_schaffer(const NormSpec& spec, const GridConfig& cfg) {
  cfg.validate();
  const Cell best =
      isosceles_search(spec, cfg, {1.0}, sum_norm_objective(spec), Direction::Infimum);
  check_bound("S", best, 1.0, 2.0);
  return finish(ConstantKind::schaffer(), Direction::Infimum, best, cfg.theta_grid, cfg);
}

Estimate estimate_d(const NormSpec& spec, const GridConfig& cfg) {
  cfg.validate();
  const PairObjective objective = [&spec](const Vec2& x, const Vec2& y) {
    const LambdaMin m = birkhoff_lambda_min(spec, x, y);
    return PairValue{m.min_value, m.lambda_star};
  };
  const Cell best = isosceles_search(spec, cfg, {1.0}, objective, Direction::Infimum);
  check_bound("D", best, 0.0, 1.0);
  return finish(ConstantKind::d_const(), Direction::Infimum, best, cfg.theta_grid, cfg);
}

Estimate estimate_gamma(const NormSpec& spec, double t, const GridConfig& cfg) {
  cfg.validate();
  const ConstantKind kind = ConstantKind::gamma(t);
  const Direction dir = Direction::Supremum;
  const int m = cfg.pair_grid();
  if (t == 0.0) {
    const SpherePoint x = unit_point(spec, 0.0);
    return finish(kind, dir, {true, 1.0, {x.coords, x.coords, 0.0, 0.0, 1.0, 0.0, 0.0}}, m, cfg);
  }
  // Invariant under (x, y) -> (-x, -y) and y -> -y: both angles over half a turn.
  const std::size_t half = static_cast<std::size_t>(m / 2);
  std::vector<SpherePoint> pts(half);
  for (std::size_t j = 0; j < half; ++j) pts[j] = unit_point_at(spec, static_cast<std::int64_t>(j), m);
  std::vector<Cell> rows(half);
  search::parallel_for(half, cfg.workers, [&](std::size_t i) {
    Cell best;
    for (std::size_t j = 0; j < half; ++j) {
      Cell c{true, gamma_value(spec, pts[i].coords, pts[j].coords, t),
             {pts[i].coords, pts[j].coords, pts[i].theta, pts[j].theta, 1.0, 0.0, 0.0}};
      if (better(dir, c, best)) best = c;
    }
    rows[i] = best;
  });
  const auto seeds = pick_seeds(rows, dir);
  const double step = kTwoPi / m;
  std::vector<Cell> refined(seeds.size());
  search::parallel_for(seeds.size(), cfg.workers, [&](std::size_t s) {
    const Cell& seed = rows[seeds[s]];
    Box box;
    box.dims = 2;
    box.center = {seed.witness.theta, seed.witness.phi, 0.0};
    box.half = {step, step, 0.0};
    refined[s] = refine_nested(
        [&](const std::array<double, 3>& p) {
          const SpherePoint x = unit_point(spec, p[0]);
          const SpherePoint y = unit_point(spec, p[1]);
          return Cell{true, gamma_value(spec, x.coords, y.coords, t),
                      {x.coords, y.coords, x.theta, y.theta, 1.0, 0.0, 0.0}};
        },
        box, dir, cfg);
  });
  Cell best;
  for (const Cell& c : rows) {
    if (better(dir, c, best)) best = c;
  }
  for (const Cell& c : refined) {
    if (better(dir, c, best)) best = c;
  }
  check_bound("gamma", best, 1.0, (1.0 + t) * (1.0 + t));
  return finish(kind, dir, best, m, cfg);
}

Estimate estimate_cnj(const NormSpec& spec, const GridConfig& cfg) {
  cfg.validate();
  const Direction dir = Direction::Supremum;
  const int m = cfg.pair_grid();
  const std::size_t half = static_cast<std::size_t>(m / 2);
  const int nr = cfg.radius_grid;
  std::vector<SpherePoint> pts(half);
  for (std::size_t j = 0; j < half; ++j) pts[j] = unit_point_at(spec, static_cast<std::int64_t>(j), m);
  std::vector<Cell> rows(half);
  search::parallel_for(half, cfg.workers, [&](std::size_t i) {
    Cell best;
    for (std::size_t j = 0; j < half; ++j) {
      for (int k = 1; k <= nr; ++k) {
        const double r = static_cast<double>(k) / nr;
        const Vec2 y = r * pts[j].coords;
        Cell c{true, cnj_value(spec, pts[i].coords, y),
               {pts[i].coords, y, pts[i].theta, pts[j].theta, r, 0.0, 0.0}};
        if (better(dir, c, best)) best = c;
      }
    }
    rows[i] = best;
  });
  const auto seeds = pick_seeds(rows, dir);
  const double step = kTwoPi / m;
  std::vector<Cell> refined(seeds.size());
  search::parallel_for(seeds.size(), cfg.workers, [&](std::size_t s) {
    const Cell& seed = rows[seeds[s]];
    Box box;
    box.dims = 3;
    box.center = {seed.witness.theta, seed.witness.phi, seed.witness.radius};
    box.half = {step, step, 1.0 / nr};
    box.lo[2] = 0.0;
    box.hi[2] = 1.0;
    refined[s] = refine_nested(
        [&](const std::array<double, 3>& p) {
          const SpherePoint x = unit_point(spec, p[0]);
          const SpherePoint u = unit_point(spec, p[1]);
          const Vec2 y = p[2] * u.coords;
          return Cell{true, cnj_value(spec, x.coords, y),
                      {x.coords, y, x.theta, u.theta, p[2], 0.0, 0.0}};
        },
        box, dir, cfg);
  });
  // y = 0 gives exactly 1.
  const SpherePoint x0 = unit_point(spec, 0.0);
  Cell best{true, 1.0, {x0.coords, Vec2::Zero(), 0.0, 0.0, 0.0, 0.0, 0.0}};
  for (const Cell& c : rows) {
    if (better(dir, c, best)) best = c;
  }
  for (const Cell& c : refined) {
    if (better(dir, c, best)) best = c;
  }
  check_bound("C_NJ", best, 1.0, 2.0);
  return finish(ConstantKind::cnj(), dir, best, m, cfg);
}

Estimate estimate_delta(const NormSpec& spec, double eps, const GridConfig& cfg) {
  cfg.validate();
  const ConstantKind kind = ConstantKind::delta(eps);
  const Direction dir = Direction::Infimum;
  const int n = cfg.theta_grid;
  const std::size_t rows_count = static_cast<std::size_t>(n / 2);
  std::vector<Cell> rows(rows_count);
  search::parallel_for(rows_count, cfg.workers, [&](std::size_t i) {
    rows[i] = delta_cell(spec, kTwoPi * static_cast<double>(i) / n, eps);
  });
  const auto seeds = pick_seeds(rows, dir);
  std::vector<Cell> refined(seeds.size());
  search::parallel_for(seeds.size(), cfg.workers, [&](std::size_t s) {
    Box box;
    box.center = {rows[seeds[s]].witness.theta, 0.0, 0.0};
    box.half = {kTwoPi / n, 0.0, 0.0};
    refined[s] = refine_nested(
        [&](const std::array<double, 3>& p) { return delta_cell(spec, p[0], eps); }, box, dir, cfg);
  });
  Cell best;
  for (const Cell& c : rows) {
    if (better(dir, c, best)) best = c;
  }
  for (const Cell& c : refined) {
    if (better(dir, c, best)) best = c;
  }
  check_bound("delta", best, 0.0, 1.0);
  return finish(kind, dir, best, n, cfg);
}

Estimate estimate_br(const NormSpec& spec, const GridConfig& cfg) {
  cfg.validate();
  const Direction dir = Direction::Supremum;
  const int m = cfg.pair_grid();
  const std::size_t rows_count = static_cast<std::size_t>(m / 2);
  std::vector<Cell> rows(rows_count);
  search::parallel_for(rows_count, cfg.workers, [&](std::size_t i) {
    rows[i] = br_cell(spec, kTwoPi * static_cast<double>(i) / m, cfg);
  });
  const auto seeds = pick_seeds(rows, dir);
  std::vector<Cell> refined(seeds.size());
  search::parallel_for(seeds.size(), cfg.workers, [&](std::size_t s) {
    Box box;
    box.center = {rows[seeds[s]].witness.theta, 0.0, 0.0};
    box.half = {kTwoPi / m, 0.0, 0.0};
    refined[s] = refine_nested(
        [&](const std::array<double, 3>& p) { return br_cell(spec, p[0], cfg); }, box, dir, cfg);
  });
  Cell best;
  for (const Cell& c : rows) {
    if (better(dir, c, best)) best = c;
  }
  for (const Cell& c : refined) {
    if (better(dir, c, best)) best = c;
  }
  check_bound("BR", best, 0.0, 1.0);
  return finish(ConstantKind::br(), dir, best, m, cfg);
}

Estimate estimate(const NormSpec& spec, const ConstantKind& kind, const GridConfig& cfg) {
  switch (kind.tag) {
    case ConstantTag::Omega: return estimate_omega(spec, cfg);
    case ConstantTag::OmegaPrime: return estimate_omega_prime(spec, cfg);
    case ConstantTag::James: return estimate_james(spec, cfg);
    case ConstantTag::Schaffer: return estimate_schaffer(spec, cfg);
    case ConstantTag::CNJ: return estimate_cnj(spec, cfg);
    case ConstantTag::Gamma: return estimate_gamma(spec, kind.param, cfg);
    case ConstantTag::Delta: return estimate_delta(spec, kind.param, cfg);
    case ConstantTag::DConst: return estimate_d(spec, cfg);
    case ConstantTag::BR: return estimate_br(spec, cfg);
  }
  throw std::invalid_argument("unknown constant kind");
}

double objective_at_witness(const NormSpec& spec, const Estimate& e) {
  const Vec2& x = e.witness.x;
  const Vec2& y = e.witness.y;
  switch (e.constant.tag) {
    case ConstantTag::Omega:
      return omega_ratio(spec, x, y);
    case ConstantTag::OmegaPrime:
      return y.isZero() ? 1.0 : omega_ratio(spec, x, y);
    case ConstantTag::James:
    case ConstantTag::Schaffer:
      return eval_norm(spec, Vec2(x + y));
    case ConstantTag::CNJ:
      return cnj_value(spec, x, y);
    case ConstantTag::Gamma:
      return gamma_value(spec, x, y, e.constant.param);
    case ConstantTag::Delta:
      return 1.0 - 0.5 * eval_norm(spec, Vec2(x + y));
    case ConstantTag::DConst:
      return birkhoff_lambda_min(spec, x, y).min_value;
    case ConstantTag::BR:
      return br_quotient(spec, x, y, e.witness.aux);
  }
  return 0.0;
}

}  // namespace isoconst
