// Radii tables, addressing, canonical forms, and the point literal grammar.

#include <cmath>
#include <numbers>
#include <thread>

#include "rose/point.h"
#include "rose/sampler.h"
#include "support.h"

using namespace rose;

namespace {

constexpr double kPi = std::numbers::pi;

void test_flat_radii() {
  std::printf("  flat radii\n");
  RadiiTable t(Curvature::Flat);
  T_CHECK(t.radius(1) == 1.0);
  T_NEAR(t.radius(2), std::sqrt(1.25), 1e-16);
  // r_3 = 7/6 exactly (rational oracle: 1 + 1/4 + 1/9 = 49/36).
  T_NEAR(t.radius(3), 7.0 / 6.0, 1e-15);
  // Supremum pi/sqrt(6); deep radii approach it from below.
  const double sup = kPi / std::sqrt(6.0);
  T_NEAR(t.radius_sup(), sup, 1e-16);
  T_CHECK(t.radius(100000) < sup);
  T_CHECK(sup - t.radius(100000) < 1e-4);

  // Pythagorean recurrence at 1e-14 through n = 1e4.
  for (int n = 1; n < 10000; ++n) {
    const double step = 1.0 / (static_cast<double>(n + 1) * (n + 1));
    T_CHECK(std::fabs(t.radius_squared(n + 1) - t.radius_squared(n) - step) <=
            1e-14);
  }
  // Tail bound pi^2/6 - r_n^2 in (1/(n+1), 1/n).
  const double pi26 = kPi * kPi / 6.0;
  for (int n : {1, 2, 10, 100, 1000, 10000}) {
    const double tail = pi26 - t.radius_squared(n);
    T_CHECK(tail > 1.0 / (n + 1));
    T_CHECK(tail < 1.0 / n);
  }
}

void test_flat_thetas() {
  std::printf("  flat thetas\n");
  RadiiTable t(Curvature::Flat);
  T_NEAR(t.theta(1) * 180 / kPi, 26.565051177077989, 1e-10);
  T_NEAR(t.theta(2) * 180 / kPi, 16.601549599020234, 1e-10);
  T_NEAR(t.theta_sum(1, 2) * 180 / kPi, 43.166600776098223, 1e-10);
  T_NEAR(t.theta_sum(1, 5), 1.2674742299658505, 1e-13);
  T_CHECK(t.theta_sum(5, 4) == 0.0);
  T_THROWS(t.theta_sum(0, 3), std::domain_error);
  T_THROWS(t.radius(0), std::domain_error);

  // cos(theta_n) = r_n / r_{n+1} and sin(theta_n) = (1/(n+1)) / r_{n+1}.
  for (int n : {1, 2, 3, 17, 400}) {
    T_NEAR(std::cos(t.theta(n)), t.radius(n) / t.radius(n + 1), 1e-12);
    T_NEAR(std::sin(t.theta(n)), (1.0 / (n + 1)) / t.radius(n + 1), 1e-12);
  }
  // Angle estimate: sin(theta_n) * pi (n+1) / sqrt(6) > 1 up to 1e4.
  for (int n = 1; n <= 10000; ++n)
    T_CHECK(std::sin(t.theta(n)) * kPi * (n + 1) / std::sqrt(6.0) > 1.0);
  // Strictly decreasing.
  for (int n = 1; n < 2000; ++n) T_CHECK(t.theta(n + 1) < t.theta(n));
}

void test_hyperbolic_radii() {
  std::printf("  hyperbolic radii\n");
  RadiiTable t(Curvature::Hyperbolic);
  T_CHECK(t.radius(1) == 1.0);
  T_NEAR(t.radius(2), 1.1518300113456323, 1e-14);   // mpmath
  T_NEAR(t.radius(3), 1.2176518531683241, 1e-14);   // mpmath
  T_NEAR(t.radius(10), 1.3273819573703519, 1e-13);  // mpmath
  T_NEAR(t.theta(1), 0.37465126842068306, 1e-15);
  T_NEAR(t.theta(2), 0.22206412531637201, 1e-14);   // mpmath
  for (int n = 1; n < 2000; ++n) {
    T_CHECK(t.radius(n + 1) > t.radius(n));
    T_CHECK(t.radius(n) < t.radius_sup());
  }
  T_NEAR(t.radius(2000) - t.radius(1000), 0.00028347739735861418, 1e-9);
  T_CHECK(t.radius(2000) - t.radius(1000) < 1e-3);
  // The supremum bound dominates deep radii and is tight to ~1/(2n).
  T_CHECK(t.radius_sup() > t.radius(4000));
  T_CHECK(t.radius_sup() - t.radius(4000) < 1e-3);
}

void test_concurrent_growth() {
  std::printf("  concurrent table growth\n");
  RadiiTable t(Curvature::Flat);
  std::thread a([&] {
    for (int n = 1; n <= 20000; ++n) (void)t.radius(n);
  });
  std::thread b([&] {
    for (int n = 20000; n >= 1; --n) (void)t.theta(n);
  });
  std::thread c([&] {
    for (int i = 0; i < 500; ++i) (void)t.theta_sum(1, 40 * i + 1);
  });
  a.join();
  b.join();
  c.join();
  T_NEAR(t.radius(3), 7.0 / 6.0, 1e-15);
}

void test_canonicalize() {
  std::printf("  canonical forms\n");
  RadiiTable t(Curvature::Flat);
  const double th1 = t.theta(1);

  // Child median -> parent border.
  RosePoint p = canonicalize(t, {PetalAddress("R"), Side::L, Sheet::Upper}, 0.8, 0.0);
  T_CHECK(p.tri().addr.is_root());
  T_CHECK(p.tri().side == Side::R);
  T_CHECK(p.alpha() == th1);
  T_CHECK(p.rho() == 0.8);
  T_CHECK(level_of(p) == 1);

  // rho = 0 collapses to the center.
  T_CHECK(canonicalize(t, {PetalAddress("LR"), Side::R, Sheet::Lower}, 0.0, 0.1)
              .is_center());

  // Root median tie-break.
  RosePoint q = canonicalize(t, {PetalAddress(), Side::L, Sheet::Upper}, 0.5, 0.0);
  T_CHECK(q.tri().side == Side::R);

  // Border points stay at their own level.
  RosePoint b = canonicalize(t, {PetalAddress(), Side::R, Sheet::Upper},
                             t.radius(2), th1);
  T_CHECK(level_of(b) == 1);

  // Idempotence.
  RosePoint pp = canonicalize(t, p.tri(), p.rho(), p.alpha());
  T_CHECK(pp == p);

  // Containment violations.
  T_THROWS(canonicalize(t, {PetalAddress(), Side::R, Sheet::Upper}, 2.0, 0.0),
           std::domain_error);
  T_THROWS(canonicalize(t, {PetalAddress(), Side::R, Sheet::Upper}, 0.5, 0.6),
           std::domain_error);
  T_THROWS(canonicalize(t, {PetalAddress(), Side::R, Sheet::Upper}, 0.5, -0.2),
           std::domain_error);

  // Near-bound values clamp onto the bound.
  const double bnd = boundary_radius(Curvature::Flat, 1.0, 0.2);
  RosePoint c = canonicalize(t, {PetalAddress(), Side::R, Sheet::Upper},
                             bnd * (1 + 1e-13), 0.2);
  T_CHECK(c.rho() == bnd);

  // Levels.
  T_CHECK(level_of(RosePoint::center()) == 1);
  RosePoint deep = canonicalize(t, {PetalAddress("RL"), Side::R, Sheet::Upper},
                                0.4, 0.05);
  T_CHECK(level_of(deep) == 3);

  // Both charts of a glued border yield one canonical point, so distances
  // agree exactly between the representations.
  RandomSource rng(31337);
  for (int i = 0; i < 1000; ++i) {
    const int n = rng.uniform_int(1, 8);
    PetalAddress addr = random_address(rng, n - 1);
    const Side side = rng.chance(0.5) ? Side::L : Side::R;
    const Sheet sheet = rng.chance(0.5) ? Sheet::Upper : Sheet::Lower;
    const double rho =
        boundary_radius(Curvature::Flat, t.radius(n), t.theta(n)) *
        (1.0 - rng.uniform01());
    if (rho == 0.0) continue;
    const RosePoint as_border = canonicalize(
        t, {addr, side, sheet}, rho, t.theta(n));  // border of the parent
    const RosePoint as_median = canonicalize(
        t, {addr.child(side), rng.chance(0.5) ? Side::L : Side::R, sheet}, rho,
        0.0);  // central segment of the child
    T_CHECK(as_border == as_median);
  }

  // direction_of mirrors the canonical chart.
  DirectionLocus d = direction_of(deep);
  T_CHECK(d.sheet == Sheet::Upper && d.addr == PetalAddress("RL") &&
          d.side == Side::R && d.offset == 0.05);
  T_THROWS(direction_of(RosePoint::center()), std::domain_error);
}

void test_point_literals() {
  std::printf("  point literals\n");
  RadiiTable t(Curvature::Flat);

  T_CHECK(parse_point(t, "center").is_center());
  RosePoint p = parse_point(t, "-/R+:0.5:0");
  T_CHECK(p.tri().addr.is_root() && p.tri().side == Side::R &&
          p.tri().sheet == Sheet::Upper && p.rho() == 0.5 && p.alpha() == 0.0);

  // Canonicalizing parse: the child median literal lands in the parent chart.
  RosePoint q = parse_point(t, "R/L+:0.8:0");
  T_CHECK(format_point(q) == "-/R+:0.8:0.4636476090008061");

  // Round-trips through the canonical form.
  RandomSource rng(20250810);
  PointOptions opt;
  opt.max_level = 9;
  opt.boundary_prob = 0.3;
  opt.corner_prob = 0.1;
  for (int i = 0; i < 500; ++i) {
    const RosePoint r = random_point(t, rng, opt);
    T_CHECK(parse_point(t, format_point(r)) == r);
  }
  T_CHECK(parse_point(t, format_point(RosePoint::center())).is_center());

  // Parse errors carry positions.
  try {
    parse_point(t, "-/X+:0.5:0");
    T_CHECK(false);
  } catch (const ParseError& e) {
    T_CHECK(e.position() == 2);
  }
  T_THROWS(parse_point(t, "-/R+:0.5"), ParseError);
  T_THROWS(parse_point(t, "ZZ/R+:1:0"), ParseError);
  T_THROWS(parse_point(t, "-/R+:1:0 "), ParseError);
  T_THROWS(parse_point(t, "-/R+:9:0"), ParseError);  // containment
}

void test_addresses() {
  std::printf("  addresses\n");
  PetalAddress root;
  T_CHECK(root.level() == 1 && root.is_root());
  PetalAddress rl = root.child(Side::R).child(Side::L);
  T_CHECK(rl.level() == 3 && rl.word() == "RL");
  T_CHECK(rl.parent().word() == "R");
  T_CHECK(root.is_prefix_of(rl));
  T_CHECK(PetalAddress("R").is_prefix_of(rl));
  T_CHECK(!PetalAddress("L").is_prefix_of(rl));
  T_CHECK(rl.last_side() == Side::L);
}

}  // namespace

int main() {
  testing::init();
  std::printf("=== core: radii, addressing, canonical forms ===\n");
  test_flat_radii();
  test_flat_thetas();
  test_hyperbolic_radii();
  test_concurrent_growth();
  test_canonicalize();
  test_point_literals();
  test_addresses();
  return testing::summary("test_core");
}
