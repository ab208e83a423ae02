#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace qgd {

// Downhill simplex search. Coefficients follow the classical scheme:
// reflection 1, expansion 2, contraction 0.5, shrink 0.5.
struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double initial_offset = 0.1;  // per-coordinate simplex offset, radians here
  long max_evaluations = 50000;
  double target_value = -std::numeric_limits<double>::infinity();
  double spread_tolerance = 1e-14;  // stop once f-spread collapses
};

struct NelderMeadResult {
  std::vector<double> best_point;
  double best_value = std::numeric_limits<double>::infinity();
  long evaluations = 0;
  bool hit_target = false;
};

/**
 * Minimises `f` from `start`. `observer`, when given, sees every evaluated
 * value in order (used to record cost histories).
 */
NelderMeadResult nelder_mead(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> start, const NelderMeadOptions& options,
    const std::function<void(double)>& observer = {});

}  // namespace qgd
