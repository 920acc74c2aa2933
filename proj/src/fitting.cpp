#include "polydich/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polydich/common.hpp"

namespace polydich {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    fail(ErrorCode::invalid_argument, "fit_line: size mismatch");
  LineFit fit;
  fit.n = x.size();
  if (fit.n == 0) return fit;
  if (fit.n == 1) {
    fit.intercept = y[0];
    return fit;
  }
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / double(x.size());
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / double(y.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx < 1e-300) {
    fit.intercept = my;
    return fit;
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

EnvelopeFit fit_envelope(std::span<const double> x, std::span<const double> y) {
  const LineFit line = fit_line(x, y);
  EnvelopeFit env;
  env.slope = line.slope;
  env.ls_intercept = line.intercept;
  env.n = x.size();
  if (env.n == 0) return env;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double intercept = y[i] - env.slope * x[i];
    if (intercept > worst) {
      worst = intercept;
      env.worst_index = i;
    }
  }
  env.env_intercept = worst;
  env.gap = env.env_intercept - env.ls_intercept;
  return env;
}

namespace {

struct Point {
  double x, y;
};

std::vector<Point> dedupe_sorted(std::span<const double> x,
                                 std::span<const double> y) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<Point> pts;
  for (std::size_t idx : order) {
    if (!pts.empty() && std::abs(pts.back().x - x[idx]) < 1e-12) {
      pts.back().y = std::max(pts.back().y, y[idx]);
    } else {
      pts.push_back({x[idx], y[idx]});
    }
  }
  return pts;
}

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<Point> upper_hull_points(std::span<const double> x,
                                     std::span<const double> y) {
  std::vector<Point> pts = dedupe_sorted(x, y);
  if (pts.size() <= 2) return pts;
  std::vector<Point> hull;
  for (const Point& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

}  // namespace

std::vector<std::size_t> upper_hull_indices(std::span<const double> x,
                                            std::span<const double> y) {
  const std::vector<Point> hull = upper_hull_points(x, y);
  std::vector<std::size_t> out;
  for (const Point& h : hull) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (std::abs(x[i] - h.x) < 1e-12 && std::abs(y[i] - h.y) < 1e-12) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

double hull_dominant_slope(std::span<const double> x,
                           std::span<const double> y) {
  const std::vector<Point> hull = upper_hull_points(x, y);
  if (hull.size() < 2) return 0.0;
  double best_span = -1.0;
  double slope = 0.0;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const double span = hull[i + 1].x - hull[i].x;
    if (span > best_span) {
      best_span = span;
      slope = (hull[i + 1].y - hull[i].y) / span;
    }
  }
  return slope;
}

double envelope_curvature(std::span<const double> x, std::span<const double> y,
                          int bins) {
  if (x.size() != y.size() || x.empty() || bins < 3) return 0.0;
  const auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
  const double lo = *lo_it, hi = *hi_it;
  if (hi - lo < 1e-12) return 0.0;
  std::vector<double> bx, by;
  for (int b = 0; b < bins; ++b) {
    const double a = lo + (hi - lo) * b / bins;
    const double c = lo + (hi - lo) * (b + 1) / bins;
    double best = -std::numeric_limits<double>::infinity();
    double where = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const bool in = x[i] >= a && (x[i] < c || (b == bins - 1 && x[i] <= c));
      if (in && y[i] > best) {
        best = y[i];
        where = x[i];
      }
    }
    if (std::isfinite(best)) {
      bx.push_back(where);
      by.push_back(best);
    }
  }
  if (bx.size() < 3) return 0.0;
  // least squares parabola y = c0 + c1 x + c2 x^2
  Eigen::MatrixXd A(bx.size(), 3);
  Eigen::VectorXd rhs(bx.size());
  for (std::size_t i = 0; i < bx.size(); ++i) {
    A(i, 0) = 1.0;
    A(i, 1) = bx[i];
    A(i, 2) = bx[i] * bx[i];
    rhs(i) = by[i];
  }
  const Eigen::Vector3d sol =
      A.colPivHouseholderQr().solve(rhs);
  return sol(2);
}

std::vector<double> log_spaced(double a, double b, int n) {
  if (!(a > 0.0) || b < a || n < 1)
    fail(ErrorCode::invalid_argument, "log_spaced: bad range");
  if (n == 1 || b == a) return {a};
  std::vector<double> out(n);
  const double la = std::log(a), lb = std::log(b);
  for (int i = 0; i < n; ++i)
    out[i] = std::exp(la + (lb - la) * i / (n - 1));
  out.front() = a;
  out.back() = b;
  return out;
}

std::vector<double> log_grid(double a, double b, int points_per_decade) {
  if (points_per_decade < 1)
    fail(ErrorCode::invalid_argument, "log_grid: density must be positive");
  if (b <= a) return {a};
  const double decades = std::log10(b / a);
  const int n = std::max(2, int(std::ceil(decades * points_per_decade)) + 1);
  return log_spaced(a, b, n);
}

}  // namespace polydich
