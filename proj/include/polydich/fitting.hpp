#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace polydich {

/// Least-squares straight line y = slope * x + intercept.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t n = 0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Envelope fit for upper bounds of the form y <= intercept + slope * x.
/// The slope comes from least squares; env_intercept is then raised until no
/// sample sits above the line. gap = env_intercept - ls_intercept measures how
/// far the extreme samples deviate from power-law behaviour.
struct EnvelopeFit {
  double slope = 0.0;
  double ls_intercept = 0.0;
  double env_intercept = 0.0;
  double gap = 0.0;
  std::size_t n = 0;
  std::size_t worst_index = 0;
};

EnvelopeFit fit_envelope(std::span<const double> x, std::span<const double> y);

/// Indices (into the x-sorted order) of the upper convex hull, left to right.
std::vector<std::size_t> upper_hull_indices(std::span<const double> x,
                                            std::span<const double> y);

/// Slope of the longest (in x-span) edge of the upper convex hull. This is the
/// dominant facet of the tight envelope; for oscillating data it recovers the
/// slope through the recurring peaks instead of averaging over the dips.
double hull_dominant_slope(std::span<const double> x, std::span<const double> y);

/// Quadratic coefficient of a parabola fitted through per-bin maxima; positive
/// curvature flags super-polynomial growth of an envelope in log-log axes.
double envelope_curvature(std::span<const double> x, std::span<const double> y,
                          int bins = 8);

/// n log-spaced points from a to b inclusive (n >= 2, 0 < a <= b).
std::vector<double> log_spaced(double a, double b, int n);

/// Log-spaced grid with a fixed density per decade, endpoints included.
std::vector<double> log_grid(double a, double b, int points_per_decade);

}  // namespace polydich
