#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <exception>
#include <thread>
#include <vector>

namespace isoconst::search {

inline constexpr double kInvPhi = 0.6180339887498948482;

struct Extremum {
  double arg = 0.0;
  double value = 0.0;
};

/// Golden-section search for a maximum of `f` on [lo, hi]. Stops when the
/// bracket is narrower than `tol` or after `budget` iterations. The
/// returned point is the best one evaluated, including both endpoints.
template <typename F>
Extremum golden_max(F&& f, double lo, double hi, double tol, int budget) {
  Extremum best{lo, f(lo)};
  auto consider = [&](double x, double v) {
    if (v > best.value) best = {x, v};
  };
  consider(hi, f(hi));
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  consider(c, fc);
  consider(d, fd);
  for (int it = 0; it < budget && (b - a) > tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
      consider(d, fd);
    }
  }
  return best;
}

template <typename F>
Extremum golden_min(F&& f, double lo, double hi, double tol, int budget) {
  Extremum e = golden_max([&](double x) { return -f(x); }, lo, hi, tol, budget);
  e.value = -e.value;
  return e;
}

/// Runs body(i) for i in [0, count) on up to `workers` threads. Each index
/// is visited exactly once; callers write results into per-index slots so
/// the outcome does not depend on scheduling. If several indices throw, the
/// exception of the smallest index is rethrown.
template <typename Body>
void parallel_for(std::size_t count, int workers, Body&& body) {
  const std::size_t threads =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, workers)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < count; i += threads) {
          try {
            body(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace isoconst::search
