#pragma once

#include <optional>

namespace rose {

/// Model-plane curvature of the construction. Flat builds the Euclidean
/// complex (CAT(0)); Hyperbolic builds the variant glued from hyperbolic
/// triangles (CAT(-1)). Every kernel operation is total on both.
enum class Curvature { Flat, Hyperbolic };

/// arcosh(1 + t) for t >= 0, safe against cancellation near t = 0.
/// Callers produce t as a sum of non-negative terms; the result is then
/// accurate in absolute terms down to distances ~1e-150.
double acosh1p(double t);

/// Length of the hypotenuse of a right triangle with legs a, b.
/// Flat: sqrt(a^2+b^2). Hyperbolic: arcosh(cosh a * cosh b).
/// Throws std::domain_error for negative legs.
double hypotenuse(Curvature k, double a, double b);

/// Angle at the vertex joining the `adjacent` leg and the hypotenuse.
/// Flat: atan(opposite/adjacent). Hyperbolic: atan(tanh(opposite)/sinh(adjacent)).
/// Requires adjacent > 0, opposite >= 0; result lies in [0, pi/2).
double apex_angle(Curvature k, double adjacent, double opposite);

/// Distance from the right-triangle apex to the far leg, along the ray at
/// angle alpha from the `leg` side. Equals `leg` at alpha = 0 and the
/// hypotenuse at the apex angle. Requires leg > 0 and 0 <= alpha < pi/2;
/// in the hyperbolic case the ray must actually hit the far leg
/// (tanh(leg)/cos(alpha) < 1), otherwise std::domain_error.
double boundary_radius(Curvature k, double leg, double alpha);

/// Distance between two points of the model cone given their radii and the
/// angle phi between their directions. For phi >= pi the two radial legs
/// through the apex form the geodesic and the result is rho1 + rho2;
/// otherwise the law of cosines of the model plane applies, evaluated in a
/// cancellation-free form (exact for phi = 0).
double cone_distance(Curvature k, double rho1, double rho2, double phi);

/// Overload with the cross-sheet sentinel: a disjoint (nullopt) angle is
/// treated like phi >= pi.
double cone_distance(Curvature k, double rho1, double rho2,
                     std::optional<double> phi);

/// Radius of the model-plane geodesic from (rho1, 0) to (rho2, phi) at
/// intermediate angle gamma in [0, phi]. Requires 0 < phi < pi and
/// rho1, rho2 > 0. In the hyperbolic plane the chord is computed in the
/// Beltrami-Klein projection, where geodesics are straight.
double geodesic_radius_at(Curvature k, double rho1, double rho2, double phi,
                          double gamma);

/// Vertex angle opposite side a in the model-plane triangle with sides
/// a, b, c. Requires b, c > 0 and the triangle inequality up to a relative
/// tolerance of 1e-9; result lies in [0, pi].
double comparison_angle(Curvature k, double a, double b, double c);

}  // namespace rose
