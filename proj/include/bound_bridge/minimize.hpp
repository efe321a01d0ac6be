#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bound_bridge {

// Scalar search utilities for positive arguments spanning many decades.
// Brackets shrink geometrically (bisection in log x), so a root or minimum at
// 1e-11 costs the same number of steps as one at 0.5.

// Root of g on [lo, hi], assuming g(lo) and g(hi) have opposite signs.
// Refines to adjacent doubles; ~60 steps cover the full mantissa.
template <class G>
double bisect_root_geometric(G&& g, double lo, double hi, int max_iter = 200) {
  double glo = g(lo);
  double ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if ((glo < 0.0) == (ghi < 0.0))
    throw std::invalid_argument("bisect_root_geometric: no sign change on bracket");
  for (int it = 0; it < max_iter; ++it) {
    const double mid = std::sqrt(lo * hi);
    if (!(mid > lo) || !(mid < hi)) break;  // bracket exhausted
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return std::sqrt(lo * hi);
}

// Golden-section minimization in log x.
template <class F>
double golden_minimize_geometric(F&& f, double lo, double hi, int max_iter = 200) {
  const double inv_phi = 0.6180339887498949;
  double a = std::log(lo), b = std::log(hi);
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(std::exp(x1));
  double f2 = f(std::exp(x2));
  for (int it = 0; it < max_iter && b - a > 1e-15; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(std::exp(x1));
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(std::exp(x2));
    }
  }
  return std::exp(0.5 * (a + b));
}

struct ScanMinimum {
  double x = 0.0;
  double value = 0.0;
  bool interior = false;  // strictly inside the bracket
};

// Minimizes f on [lo, hi] where `slope` is df/dx on the (smooth) bracket.
// A geometric scan locates sign changes of the slope; each is refined to full
// precision by bisection. If the best sampled point is not explained by a
// refined root, a golden-section pass around it acts as the fallback. The
// winner among endpoints, refined roots and the fallback is returned.
template <class F, class G>
ScanMinimum scan_minimize_geometric(F&& f, G&& slope, double lo, double hi,
                                    int scan_points = 257, int max_iter = 200) {
  if (!(lo > 0.0) || !(hi > lo))
    throw std::invalid_argument("scan_minimize_geometric: need 0 < lo < hi");

  const std::size_t m = static_cast<std::size_t>(scan_points);
  std::vector<double> xs(m), fs(m), ss(m);
  const double ratio = hi / lo;
  for (std::size_t i = 0; i < m; ++i)
    xs[i] = lo * std::pow(ratio, static_cast<double>(i) / static_cast<double>(m - 1));
  xs.front() = lo;
  xs.back() = hi;
  for (std::size_t i = 0; i < m; ++i) {
    fs[i] = f(xs[i]);
    ss[i] = slope(xs[i]);
  }

  ScanMinimum best{xs[0], fs[0], false};
  if (fs[m - 1] < best.value) best = {xs[m - 1], fs[m - 1], false};

  std::size_t best_scan = fs[m - 1] < fs[0] ? m - 1 : 0;
  for (std::size_t i = 1; i + 1 < m; ++i)
    if (fs[i] < fs[best_scan]) best_scan = i;

  for (std::size_t i = 1; i < m; ++i) {
    const double sp = ss[i - 1];
    const double sc = ss[i];
    const bool change = sp == 0.0 || (sp < 0.0 && sc >= 0.0) || (sp > 0.0 && sc <= 0.0);
    if (!change) continue;
    double root;
    if (sp == 0.0)
      root = xs[i - 1];
    else if (sc == 0.0)
      root = xs[i];
    else
      root = bisect_root_geometric(slope, xs[i - 1], xs[i], max_iter);
    const double fr = f(root);
    if (fr < best.value) best = {root, fr, root > lo && root < hi};
  }

  if (best_scan > 0 && best_scan + 1 < m && fs[best_scan] < best.value) {
    const double x = golden_minimize_geometric(f, xs[best_scan - 1], xs[best_scan + 1], max_iter);
    const double fx = f(x);
    if (fx < best.value) best = {x, fx, x > lo && x < hi};
    if (fs[best_scan] < best.value) best = {xs[best_scan], fs[best_scan], true};
  }
  return best;
}

// Least-squares slope of ln y against ln x. Needs >= 2 points with x, y > 0;
// returns false otherwise.
inline bool fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y, double& slope_out) {
  if (x.size() != y.size() || x.size() < 2) return false;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) return false;
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) return false;
  slope_out = (m * sxy - sx * sy) / denom;
  return true;
}

}  // namespace bound_bridge
