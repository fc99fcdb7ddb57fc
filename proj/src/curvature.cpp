#include "rose/curvature.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rose {

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void domain_fail(const char* what) {
  throw std::domain_error(what);
}

// sinh(x/2)^2, used by the stable arcosh forms.
double half_sinh_sq(double x) {
  const double s = std::sinh(0.5 * x);
  return s * s;
}

// sin(x/2)^2.
double half_sin_sq(double x) {
  const double s = std::sin(0.5 * x);
  return s * s;
}

}  // namespace

double acosh1p(double t) {
  if (!(t >= 0.0)) domain_fail("acosh1p: argument below 1");
  return std::log1p(t + std::sqrt(t * (t + 2.0)));
}

double hypotenuse(Curvature k, double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0)) domain_fail("hypotenuse: negative leg");
  if (k == Curvature::Flat) return std::hypot(a, b);
  // cosh a cosh b - 1 = 2 sinh^2(a/2) cosh b + 2 sinh^2(b/2), all terms >= 0.
  const double t = 2.0 * half_sinh_sq(a) * std::cosh(b) + 2.0 * half_sinh_sq(b);
  return acosh1p(t);
}

double apex_angle(Curvature k, double adjacent, double opposite) {
  if (!(adjacent > 0.0)) domain_fail("apex_angle: adjacent leg must be positive");
  if (!(opposite >= 0.0)) domain_fail("apex_angle: negative opposite leg");
  if (k == Curvature::Flat) return std::atan2(opposite, adjacent);
  return std::atan2(std::tanh(opposite), std::sinh(adjacent));
}

double boundary_radius(Curvature k, double leg, double alpha) {
  if (!(leg > 0.0)) domain_fail("boundary_radius: leg must be positive");
  if (!(alpha >= 0.0 && alpha < 0.5 * kPi))
    domain_fail("boundary_radius: angle outside [0, pi/2)");
  if (k == Curvature::Flat) return leg / std::cos(alpha);
  const double u = std::tanh(leg) / std::cos(alpha);
  if (u >= 1.0) domain_fail("boundary_radius: direction exits the triangle");
  return std::atanh(u);
}

double cone_distance(Curvature k, double rho1, double rho2, double phi) {
  if (!(rho1 >= 0.0) || !(rho2 >= 0.0)) domain_fail("cone_distance: negative radius");
  if (!(phi >= 0.0)) domain_fail("cone_distance: negative angle");
  if (phi >= kPi) return rho1 + rho2;
  // Radial configurations are exact in both curvatures.
  if (rho1 == 0.0) return rho2;
  if (rho2 == 0.0) return rho1;
  if (phi == 0.0) return std::fabs(rho1 - rho2);
  if (k == Curvature::Flat) {
    const double dr = rho1 - rho2;
    return std::sqrt(dr * dr + 4.0 * rho1 * rho2 * half_sin_sq(phi));
  }
  // cosh r1 cosh r2 - sinh r1 sinh r2 cos phi - 1
  //   = 2 sinh^2((r1-r2)/2) + 2 sinh r1 sinh r2 sin^2(phi/2), all terms >= 0.
  // fabs keeps the expression exactly symmetric in (rho1, rho2).
  const double t = 2.0 * half_sinh_sq(std::fabs(rho1 - rho2)) +
                   2.0 * std::sinh(rho1) * std::sinh(rho2) * half_sin_sq(phi);
  return acosh1p(t);
}

double cone_distance(Curvature k, double rho1, double rho2,
                     std::optional<double> phi) {
  if (!phi) {
    if (!(rho1 >= 0.0) || !(rho2 >= 0.0))
      domain_fail("cone_distance: negative radius");
    return rho1 + rho2;
  }
  return cone_distance(k, rho1, rho2, *phi);
}

namespace {

// Radius at angle gamma of the straight line through (r1, 0), (r2, phi),
// in polar coordinates around the origin.
double flat_chord_radius(double r1, double r2, double phi, double gamma) {
  const double x2 = r2 * std::cos(phi), y2 = r2 * std::sin(phi);
  // numerator: cross((r1,0), (x2,y2)); denominator: cross(ray, P2 - P1).
  const double num = r1 * y2;
  const double den = std::cos(gamma) * y2 - std::sin(gamma) * (x2 - r1);
  return num / den;
}

}  // namespace

double geodesic_radius_at(Curvature k, double rho1, double rho2, double phi,
                          double gamma) {
  if (!(phi > 0.0 && phi < kPi)) domain_fail("geodesic_radius_at: angle outside (0, pi)");
  if (!(rho1 > 0.0) || !(rho2 > 0.0))
    domain_fail("geodesic_radius_at: radii must be positive");
  if (!(gamma >= 0.0 && gamma <= phi))
    domain_fail("geodesic_radius_at: gamma outside [0, phi]");
  if (k == Curvature::Flat) return flat_chord_radius(rho1, rho2, phi, gamma);
  // Klein projection: tanh of the radius maps geodesics to straight chords.
  const double rk = flat_chord_radius(std::tanh(rho1), std::tanh(rho2), phi, gamma);
  return std::atanh(std::min(rk, 1.0));
}

double comparison_angle(Curvature k, double a, double b, double c) {
  if (!(a >= 0.0) || !(b > 0.0) || !(c > 0.0))
    domain_fail("comparison_angle: sides must be positive (b, c) and non-negative (a)");
  const double tol = 1e-9 * (a + b + c);
  if (a > b + c + tol || b > a + c + tol || c > a + b + tol)
    domain_fail("comparison_angle: triangle inequality violated");
  double cosv;
  if (k == Curvature::Flat) {
    cosv = (b * b + c * c - a * a) / (2.0 * b * c);
  } else {
    cosv = (std::cosh(b) * std::cosh(c) - std::cosh(a)) /
           (std::sinh(b) * std::sinh(c));
  }
  return std::acos(std::clamp(cosv, -1.0, 1.0));
}

}  // namespace rose
