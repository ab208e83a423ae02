#include "qgd/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qgd/errors.hpp"

namespace qgd {

NelderMeadResult nelder_mead(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> start, const NelderMeadOptions& options,
    const std::function<void(double)>& observer) {
  const std::size_t n = start.size();
  if (n == 0) throw InvalidInput("cannot optimise a zero-dimensional point");

  NelderMeadResult result;
  long& ne = result.evaluations;
  auto eval = [&](std::span<const double> x) {
    const double v = f(x);
    ++ne;
    if (observer) observer(v);
    return v;
  };

  std::vector<std::vector<double>> pts(n + 1,
                                       std::vector<double>(start.begin(),
                                                           start.end()));
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += options.initial_offset;
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xx(n);

  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = order[0], worst = order[n], second = order[n - 1];

    if (vals[best] <= options.target_value) {
      result.hit_target = true;
    }
    if (result.hit_target || ne >= options.max_evaluations ||
        vals[worst] - vals[best] <= options.spread_tolerance) {
      result.best_point = pts[best];
      result.best_value = vals[best];
      return result;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t d = 0; d < n; ++d) centroid[d] += pts[i][d];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    for (std::size_t d = 0; d < n; ++d)
      xr[d] = centroid[d] + options.reflection * (centroid[d] - pts[worst][d]);
    const double fr = eval(xr);

    if (fr < vals[best]) {
      for (std::size_t d = 0; d < n; ++d)
        xx[d] = centroid[d] + options.expansion * (xr[d] - centroid[d]);
      const double fe = eval(xx);
      if (fe < fr) {
        pts[worst] = xx;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
    } else if (fr < vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
    } else {
      const bool outside = fr < vals[worst];
      const auto& toward = outside ? xr : pts[worst];
      for (std::size_t d = 0; d < n; ++d)
        xx[d] = centroid[d] + options.contraction * (toward[d] - centroid[d]);
      const double fc = eval(xx);
      if (fc < std::min(fr, vals[worst])) {
        pts[worst] = xx;
        vals[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (std::size_t d = 0; d < n; ++d)
            pts[i][d] = pts[best][d] + options.shrink * (pts[i][d] - pts[best][d]);
          vals[i] = eval(pts[i]);
        }
      }
    }
  }
}

}  // namespace qgd
