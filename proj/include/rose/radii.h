#pragma once

#include <atomic>
#include <deque>
#include <mutex>

#include "rose/curvature.h"

namespace rose {

/// Memoized per-level geometry of the construction.
///
/// Level n >= 1 contributes:
///   radius(n)  — median length r_n: flat r_n = sqrt(sum_{p<=n} 1/p^2),
///                hyperbolic s_1 = 1, s_{n+1} = hypotenuse(s_n, 1/(n+1));
///   theta(n)   — apex angle between the median and a border,
///                apex_angle(radius(n), 1/(n+1));
///   theta_sum  — inclusive partial sums of theta, via memoized prefixes.
///
/// Tables grow on demand and support concurrent reads: growth happens under
/// a mutex into deques (stable element addresses), and the published length
/// is an acquire/release atomic, so readers never observe torn values.
class RadiiTable {
 public:
  explicit RadiiTable(Curvature k);

  RadiiTable(const RadiiTable&) = delete;
  RadiiTable& operator=(const RadiiTable&) = delete;

  Curvature curvature() const { return kappa_; }

  /// r_n (flat) or s_n (hyperbolic); n >= 1.
  double radius(int n) const;

  /// Flat: the accumulated sum sum_{p<=n} 1/p^2 (= r_n^2 without the sqrt
  /// round-trip, so tail bounds test cleanly). Hyperbolic: radius(n)^2.
  double radius_squared(int n) const;

  /// Apex angle theta_n; n >= 1.
  double theta(int n) const;

  /// sum_{k=from}^{to} theta_k; zero when to < from. Requires from >= 1.
  double theta_sum(int from, int to) const;

  /// Supremum of radius(n): pi/sqrt(6) when flat; the convergent
  /// arcosh(cosh 1 * prod_{k>=2} cosh(1/k)) when hyperbolic.
  double radius_sup() const;

 private:
  void ensure(int n) const;

  Curvature kappa_;
  mutable std::mutex grow_mutex_;
  mutable std::atomic<int> size_{0};  // number of levels filled

  // 1-based: index n-1 holds level n. Deques keep references stable while
  // another thread appends.
  mutable std::deque<double> radius_;
  mutable std::deque<double> radius_sq_;  // flat: exact partial sums of 1/p^2
  mutable std::deque<double> theta_;
  mutable std::deque<double> theta_prefix_;  // sum_{k<=n} theta_k

  // Kahan compensation carried across growth steps.
  mutable double sq_comp_ = 0.0;
  mutable double prefix_comp_ = 0.0;
  mutable double hyp_t_ = 0.0;  // hyperbolic: cosh(s_n) - 1
};

}  // namespace rose
