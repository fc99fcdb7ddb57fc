#include "rose/radii.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rose {

namespace {

constexpr double kPi = std::numbers::pi;

void check_level(int n) {
  if (n < 1) throw std::domain_error("RadiiTable: level must be >= 1");
}

}  // namespace

RadiiTable::RadiiTable(Curvature k) : kappa_(k) { ensure(1); }

void RadiiTable::ensure(int n) const {
  if (size_.load(std::memory_order_acquire) >= n) return;
  std::lock_guard<std::mutex> lock(grow_mutex_);
  int have = size_.load(std::memory_order_relaxed);
  while (have < n) {
    const int level = have + 1;
    const double half_base = 1.0 / (level + 1);
    double r, rsq;
    if (kappa_ == Curvature::Flat) {
      // Kahan-compensated partial sums of 1/p^2.
      const double term = 1.0 / (static_cast<double>(level) * level);
      const double prev = have == 0 ? 0.0 : radius_sq_.back();
      const double y = term - sq_comp_;
      const double t = prev + y;
      sq_comp_ = (t - prev) - y;
      rsq = t;
      r = std::sqrt(rsq);
    } else {
      // cosh(s_{n}) - 1 tracked directly:
      //   t_1 = cosh(1) - 1,
      //   t_{n+1} = t_n cosh(1/(n+1)) + (cosh(1/(n+1)) - 1).
      if (have == 0) {
        hyp_t_ = 2.0 * std::pow(std::sinh(0.5), 2);
      } else {
        const double x = 1.0 / level;  // leg glued at level-1 -> level
        const double c = std::cosh(x);
        const double cm1 = 2.0 * std::pow(std::sinh(0.5 * x), 2);
        hyp_t_ = hyp_t_ * c + cm1;
      }
      r = acosh1p(hyp_t_);
      rsq = r * r;
    }
    radius_.push_back(r);
    radius_sq_.push_back(rsq);

    double th;
    if (kappa_ == Curvature::Flat) {
      th = std::atan2(half_base, r);
    } else {
      // sinh(s_n) = sqrt(t (t + 2)) avoids re-evaluating sinh(acosh1p(t)).
      th = std::atan2(std::tanh(half_base), std::sqrt(hyp_t_ * (hyp_t_ + 2.0)));
    }
    theta_.push_back(th);

    const double prev_prefix = have == 0 ? 0.0 : theta_prefix_.back();
    const double y = th - prefix_comp_;
    const double t = prev_prefix + y;
    prefix_comp_ = (t - prev_prefix) - y;
    theta_prefix_.push_back(t);

    ++have;
    size_.store(have, std::memory_order_release);
  }
}

double RadiiTable::radius(int n) const {
  check_level(n);
  ensure(n);
  return radius_[n - 1];
}

double RadiiTable::radius_squared(int n) const {
  check_level(n);
  ensure(n);
  return radius_sq_[n - 1];
}

double RadiiTable::theta(int n) const {
  check_level(n);
  ensure(n);
  return theta_[n - 1];
}

double RadiiTable::theta_sum(int from, int to) const {
  if (from < 1) throw std::domain_error("theta_sum: from must be >= 1");
  if (to < from) return 0.0;
  ensure(to);
  const double upper = theta_prefix_[to - 1];
  const double lower = from == 1 ? 0.0 : theta_prefix_[from - 2];
  return upper - lower;
}

double RadiiTable::radius_sup() const {
  if (kappa_ == Curvature::Flat) return kPi / std::sqrt(6.0);
  // log prod_{k>=2} cosh(1/k): direct terms to N, then the Euler-Maclaurin
  // tail of log cosh(1/k) ~ 1/(2k^2) - 1/(12k^4) + 1/(45k^6).
  constexpr int N = 4000;
  double logp = 0.0, comp = 0.0;
  for (int k = 2; k <= N; ++k) {
    const double term = std::log(std::cosh(1.0 / k));
    const double y = term - comp;
    const double t = logp + y;
    comp = (t - logp) - y;
    logp = t;
  }
  const double n = N;
  const double tail2 = 1.0 / n - 1.0 / (2 * n * n) + 1.0 / (6 * n * n * n);
  const double tail4 = 1.0 / (3 * n * n * n);
  logp += 0.5 * tail2 - tail4 / 12.0;
  return std::acosh(std::cosh(1.0) * std::exp(logp));
}

}  // namespace rose
