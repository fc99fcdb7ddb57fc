#pragma once

#include <optional>
#include <vector>

#include "rose/point.h"

namespace rose {

/// A geodesic as its breakpoint list: the endpoints plus one breakpoint per
/// crossed radial edge direction (or the center, for concatenated radial
/// geodesics). Consecutive breakpoints lie in a common triangle and the
/// per-triangle chord lengths sum to `length`.
struct GeodesicPath {
  std::vector<RosePoint> points;
  bool through_center = false;
  double length = 0.0;
};

/// Metric-tree distance between two positions in the space of directions at
/// the center. Positions on different sheets are disjoint (nullopt); the
/// metric treats that as an angle >= pi.
std::optional<double> angular_distance(const RadiiTable& table,
                                       const DirectionLocus& d1,
                                       const DirectionLocus& d2);

/// Exact distance between canonical points.
double distance(const RadiiTable& table, const RosePoint& p, const RosePoint& q);

/// The unique geodesic between canonical points, as breakpoints.
GeodesicPath geodesic(const RadiiTable& table, const RosePoint& p,
                      const RosePoint& q);

/// The point m on geodesic(p, q) with distance(p, m) = t * distance(p, q).
/// Requires t in [0, 1].
RosePoint interpolate(const RadiiTable& table, const RosePoint& p,
                      const RosePoint& q, double t);

/// Alexandrov angle at the center between the directions of p and q,
/// capped at pi. Requires p, q != center.
double center_angle(const RadiiTable& table, const RosePoint& p,
                    const RosePoint& q);

/// Least level M such that theta_sum(m+1, M-1) >= target. Finite for every
/// target because the theta series diverges harmonically.
int through_center_level(const RadiiTable& table, int m, double target);

}  // namespace rose
