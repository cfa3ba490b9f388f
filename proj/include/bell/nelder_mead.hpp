#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace bell::nm {

struct Options {
  int max_evals = 6000;
  double xtol = 1e-10;   // simplex diameter
  double ftol = 1e-13;   // spread of function values
  double step = 0.35;    // initial simplex edge
  int restarts = 1;      // rebuild the simplex at the incumbent and go again
};

struct Result {
  std::vector<double> x;
  double fval = 0.0;
  int evals = 0;
};

/// Derivative-free downhill-simplex minimizer with the dimension-adaptive
/// expansion/contraction coefficients of Gao & Han.  Deterministic: no
/// randomness, result depends only on f, x0 and the options.
inline Result minimize(const std::function<double(const std::vector<double>&)>& f,
                       std::vector<double> x0, const Options& opt = {}) {
  const std::size_t n = x0.size();
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / static_cast<double>(n);
  const double gamma = 0.75 - 0.5 / static_cast<double>(n);
  const double delta = 1.0 - 1.0 / static_cast<double>(n);

  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  std::vector<std::vector<double>> pts;
  std::vector<double> fv;

  auto build = [&](const std::vector<double>& center, double step) {
    pts.assign(1, center);
    fv.assign(1, eval(center));
    for (std::size_t i = 0; i < n; ++i) {
      auto p = center;
      p[i] += step;
      pts.push_back(p);
      fv.push_back(eval(p));
    }
  };

  auto order = [&] {
    std::vector<std::size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> p2;
    std::vector<double> f2;
    for (auto i : idx) {
      p2.push_back(pts[i]);
      f2.push_back(fv[i]);
    }
    pts.swap(p2);
    fv.swap(f2);
  };

  double step = opt.step;
  build(x0, step);

  for (int round = 0; round <= opt.restarts; ++round) {
    while (evals < opt.max_evals) {
      order();
      // convergence: value spread and simplex size
      double fspread = std::abs(fv.back() - fv.front());
      double diam = 0.0;
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 0; j < n; ++j) diam = std::max(diam, std::abs(pts[i][j] - pts[0][j]));
      if (fspread <= opt.ftol * (1.0 + std::abs(fv.front())) && diam <= opt.xtol) break;

      std::vector<double> centroid(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j];
      }
      for (auto& c : centroid) c /= static_cast<double>(n);

      auto mix = [&](double t) {
        std::vector<double> p(n);
        for (std::size_t j = 0; j < n; ++j) p[j] = centroid[j] + t * (centroid[j] - pts[n][j]);
        return p;
      };

      auto xr = mix(alpha);
      double fr = eval(xr);
      if (fr < fv[0]) {
        auto xe = mix(beta);
        double fe = eval(xe);
        if (fe < fr) {
          pts[n] = xe;
          fv[n] = fe;
        } else {
          pts[n] = xr;
          fv[n] = fr;
        }
      } else if (fr < fv[n - 1]) {
        pts[n] = xr;
        fv[n] = fr;
      } else {
        bool outside = fr < fv[n];
        auto xc = mix(outside ? gamma : -gamma);
        double fc = eval(xc);
        if (fc < std::min(fr, fv[n])) {
          pts[n] = xc;
          fv[n] = fc;
        } else {
          // shrink toward the best point
          for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 0; j < n; ++j) pts[i][j] = pts[0][j] + delta * (pts[i][j] - pts[0][j]);
            fv[i] = eval(pts[i]);
          }
        }
      }
    }
    order();
    if (round < opt.restarts && evals < opt.max_evals) {
      step *= 0.15;  // polish pass around the incumbent
      auto best = pts[0];
      build(best, step);
    }
  }
  order();
  return Result{pts[0], fv[0], evals};
}

}  // namespace bell::nm
