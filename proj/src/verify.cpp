#include "rose/verify.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rose {

namespace {

constexpr double kPi = std::numbers::pi;

// Arc length along the base of a level-n petal, measured from the median
// foot, for the base point at angle alpha.
double base_arclength(const RadiiTable& table, int n, double alpha) {
  if (table.curvature() == Curvature::Flat)
    return table.radius(n) * std::tan(alpha);
  return std::atanh(std::tan(alpha) * std::sinh(table.radius(n)));
}

// The base point of petal `addr` at signed arc length s from the median foot
// (positive on `side`, negative on the opposite side).
RosePoint base_point(const RadiiTable& table, const PetalAddress& addr,
                     Side side, Sheet sheet, double s) {
  const Curvature k = table.curvature();
  const int n = addr.level();
  const double rn = table.radius(n);
  const Side use_side = s >= 0.0 ? side : opposite(side);
  const double len = std::fabs(s);
  return canonicalize(table, TriangleId{addr, use_side, sheet},
                      hypotenuse(k, rn, len), apex_angle(k, rn, len));
}

}  // namespace

StraddleWitness straddle_witness(const RadiiTable& table, const RosePoint& p) {
  StraddleWitness w;
  w.p = p;

  if (p.is_center()) {
    w.a = canonicalize(table, TriangleId{PetalAddress(), Side::R, Sheet::Upper},
                       table.radius(1), 0.0);
    w.b = canonicalize(table, TriangleId{PetalAddress(), Side::R, Sheet::Lower},
                       table.radius(1), 0.0);
    w.t = 0.5;
  } else {
    const int n = level_of(p);
    const double theta = table.theta(n);
    const double bound = boundary_radius_at(table, p);
    const bool on_base = p.rho() >= bound * (1.0 - 1e-12);
    const bool at_corner = on_base && p.alpha() >= theta * (1.0 - 1e-12);

    if (!on_base) {
      // Radial segment through p: from half the radius out to the base.
      w.a = canonicalize(table, p.tri(), 0.5 * p.rho(), p.alpha());
      w.b = canonicalize(table, p.tri(), bound, p.alpha());
      w.t = (p.rho() - w.a.rho()) / (w.b.rho() - w.a.rho());
    } else if (!at_corner) {
      // Strictly inside a base edge: step along the (straight) base.
      const double s = base_arclength(table, n, p.alpha());
      const double half_base = 1.0 / (n + 1);
      const double delta = std::min(0.5 * (half_base - s), 0.5 * half_base);
      w.a = base_point(table, p.tri().addr, p.tri().side, p.tri().sheet, s + delta);
      w.b = base_point(table, p.tri().addr, p.tri().side, p.tri().sheet, s - delta);
      w.t = 0.5;
    } else {
      // Outer corner: the midpoint of the child petal's base.
      const PetalAddress child = p.tri().addr.child(p.tri().side);
      const double delta = 0.5 / (n + 2);
      w.a = base_point(table, child, Side::R, p.tri().sheet, delta);
      w.b = base_point(table, child, Side::R, p.tri().sheet, -delta);
      w.t = 0.5;
    }
  }

  const double dap = distance(table, w.a, w.p);
  const double dpb = distance(table, w.p, w.b);
  const double dab = distance(table, w.a, w.b);
  w.gap = dap + dpb - dab;
  return w;
}

CheckReport extreme_scan(const RadiiTable& table, int depth, int samples,
                         std::uint64_t seed) {
  if (depth < 1) throw std::domain_error("extreme_scan: depth must be >= 1");
  CheckReport report;
  report.name = "extreme_scan";

  auto run = [&](const RosePoint& p) {
    const StraddleWitness w = straddle_witness(table, p);
    const double la = distance(table, w.a, w.p);
    const double lb = distance(table, w.p, w.b);
    report.max_err = std::max(report.max_err, w.gap);
    ++report.count;
    if (!(w.gap <= 1e-10) || !(la > 0.0) || !(lb > 0.0)) ++report.failures;
  };

  // Every outer corner of every petal up to `depth`.
  std::vector<PetalAddress> addrs = {PetalAddress()};
  long corners = 0;
  for (int n = 1; n <= depth; ++n) {
    const double corner_rho =
        boundary_radius(table.curvature(), table.radius(n), table.theta(n));
    for (const PetalAddress& addr : addrs)
      for (Side side : {Side::L, Side::R})
        for (Sheet sheet : {Sheet::Upper, Sheet::Lower}) {
          run(canonicalize(table, TriangleId{addr, side, sheet}, corner_rho,
                           table.theta(n)));
          ++corners;
        }
    if (n < depth) {
      std::vector<PetalAddress> next;
      next.reserve(addrs.size() * 2);
      for (const PetalAddress& addr : addrs) {
        next.push_back(addr.child(Side::L));
        next.push_back(addr.child(Side::R));
      }
      addrs = std::move(next);
    }
  }

  run(RosePoint::center());

  RandomSource rng(seed);
  PointOptions opt;
  opt.max_level = depth;
  opt.boundary_prob = 0.3;
  opt.corner_prob = 0.1;
  for (int i = 0; i < samples; ++i) run(random_point(table, rng, opt));

  report.pass = report.failures == 0;
  report.stats.emplace_back("corners", static_cast<double>(corners));
  report.stats.emplace_back("samples", static_cast<double>(samples));
  report.stats.emplace_back("max_gap", report.max_err);
  return report;
}

CheckReport cat_comparison_suite(const RadiiTable& table, int triples,
                                 int depth, std::uint64_t seed) {
  CheckReport report;
  report.name = table.curvature() == Curvature::Flat ? "cat_comparison_flat"
                                                     : "cat_comparison_hyperbolic";
  RandomSource rng(seed);
  PointOptions opt;
  opt.max_level = depth;
  opt.boundary_prob = 0.2;
  const Curvature k = table.curvature();

  double worst = -1e300;
  for (int i = 0; i < triples; ++i) {
    const RosePoint p = random_point(table, rng, opt);
    const RosePoint q = random_point(table, rng, opt);
    const RosePoint r = random_point(table, rng, opt);
    const double a = distance(table, p, q);
    const double b = distance(table, p, r);
    const double c = distance(table, q, r);
    for (int step = 1; step <= 9; ++step) {
      const double t = 0.1 * step;
      const RosePoint m = interpolate(table, p, q, t);
      const double lhs = distance(table, m, r);
      double rhs;
      if (a < 1e-15) {
        rhs = b;
      } else if (b < 1e-15) {
        rhs = t * a;  // r == p: the comparison point sits at distance t*a
      } else {
        const double angle_p = comparison_angle(k, c, a, b);
        rhs = cone_distance(k, t * a, b, angle_p);
      }
      const double slack = lhs - rhs;
      worst = std::max(worst, slack);
      ++report.count;
      if (slack > 1e-9) ++report.failures;
    }
  }
  report.max_err = std::max(0.0, worst);
  report.pass = report.failures == 0;
  report.stats.emplace_back("triples", static_cast<double>(triples));
  report.stats.emplace_back("worst_slack", worst);
  return report;
}

SeparationCover separation_cover(const RadiiTable& table, const RosePoint& x,
                                 const RosePoint& y) {
  (void)table;
  if (x == y) throw std::domain_error("separation_cover: x == y");
  if (x.is_center() && y.is_center())
    throw std::domain_error("separation_cover: x == y == center");
  const int n = std::max(level_of(x), level_of(y)) + 1;
  SeparationCover cover;
  cover.n = n;
  cover.w_count = 1ull << n;
  if (n <= 16) {
    std::vector<PetalAddress> addrs = {PetalAddress()};
    for (int i = 0; i < n; ++i) {
      std::vector<PetalAddress> next;
      next.reserve(addrs.size() * 2);
      for (const PetalAddress& a : addrs) {
        next.push_back(a.child(Side::L));
        next.push_back(a.child(Side::R));
      }
      addrs = std::move(next);
    }
    cover.w_roots = std::move(addrs);
  }
  return cover;
}

CoverMembership cover_membership(const RadiiTable& table,
                                 const SeparationCover& cover,
                                 const RosePoint& z) {
  CoverMembership m;
  if (z.is_center()) {
    // The center lies in K and in every W.
    m.in_k = true;
    m.in_w = true;
    return m;
  }
  const int level = level_of(z);
  m.in_k = level <= cover.n;
  const std::string& word = z.tri().addr.word();
  if (level >= cover.n + 1) {
    m.in_w = true;
    m.w_root = PetalAddress(word.substr(0, cover.n));
  } else if (level == cover.n && z.alpha() == table.theta(cover.n)) {
    // A border point of a level-n petal is on the central segment of the
    // level-(n+1) petal glued along that border, so it belongs to that
    // subtree's component.
    m.in_w = true;
    m.w_root = z.tri().addr.child(z.tri().side);
  }
  return m;
}

namespace {

Side flip(Side s) { return opposite(s); }

}  // namespace

RosePoint apply_isometry(const RadiiTable& table, const IsometryLabel& g,
                         const RosePoint& p) {
  if (p.is_center()) return p;
  const std::string& word = p.tri().addr.word();
  std::string out;
  out.reserve(word.size());
  bool sheet_flip = false;
  auto lookup = [&g](const std::string& node) -> std::uint8_t {
    auto it = g.components.find(node);
    return it == g.components.end() ? 0 : it->second;
  };
  for (char letter : word) {
    const std::uint8_t mask = lookup(out);
    if (mask & 2) sheet_flip = !sheet_flip;
    if (mask & 1) letter = letter == 'L' ? 'R' : 'L';
    out.push_back(letter);
  }
  const std::uint8_t mask = lookup(out);
  if (mask & 2) sheet_flip = !sheet_flip;
  Side side = p.tri().side;
  if (mask & 1) side = flip(side);
  Sheet sheet = p.tri().sheet;
  if (sheet_flip) sheet = opposite(sheet);
  return canonicalize(table, TriangleId{PetalAddress(std::move(out)), side, sheet},
                      p.rho(), p.alpha());
}

CheckReport isometry_suite(const RadiiTable& table, int trials, int depth,
                           std::uint64_t seed) {
  CheckReport report;
  report.name = "isometry_invariance";
  RandomSource rng(seed);
  PointOptions opt;
  opt.max_level = depth;
  opt.boundary_prob = 0.25;
  opt.corner_prob = 0.05;

  auto random_label = [&](bool single) {
    IsometryLabel g;
    const int support = single ? 1 : rng.uniform_int(0, 4);
    for (int i = 0; i < support; ++i) {
      const PetalAddress node =
          random_address(rng, rng.uniform_int(0, std::max(0, depth - 1)));
      // v components act by isometries only at the root (the global sheet
      // flip); elsewhere only the subtree flip h is available.
      std::uint8_t mask = 1;
      if (node.is_root() && rng.chance(0.5)) mask |= 2;
      g.components[node.word()] = mask;
    }
    return g;
  };

  for (int i = 0; i < trials; ++i) {
    const IsometryLabel g = random_label(false);
    const RosePoint p = random_point(table, rng, opt);
    const RosePoint q = random_point(table, rng, opt);
    const RosePoint gp = apply_isometry(table, g, p);
    const RosePoint gq = apply_isometry(table, g, q);
    const double dev =
        std::fabs(distance(table, gp, gq) - distance(table, p, q));
    report.max_err = std::max(report.max_err, dev);
    ++report.count;
    bool ok = dev <= 1e-12;
    // The action must preserve the level and the radial coordinate exactly.
    ok = ok && level_of(gp) == level_of(p) && gp.rho() == p.rho();
    if (!ok) ++report.failures;

    // Single-node labels are involutions.
    const IsometryLabel h = random_label(true);
    const RosePoint hp = apply_isometry(table, h, p);
    if (!(apply_isometry(table, h, hp) == p)) ++report.failures;
  }
  report.pass = report.failures == 0;
  report.stats.emplace_back("trials", static_cast<double>(trials));
  report.stats.emplace_back("max_deviation", report.max_err);
  return report;
}

CheckReport radius_report(const RadiiTable& table, int n_max) {
  if (n_max < 1) throw std::domain_error("radius_report: n_max must be >= 1");
  CheckReport report;
  report.name = "radius_bounds";
  const bool flat = table.curvature() == Curvature::Flat;
  const double sup = table.radius_sup();
  const double pi2_6 = kPi * kPi / 6.0;

  if (table.radius(1) != 1.0) ++report.failures;

  double prev_r = 0.0, prev_th = kPi;
  for (int n = 1; n <= n_max; ++n) {
    const double r = table.radius(n);
    const double th = table.theta(n);
    bool ok = r > prev_r && r < sup && th < prev_th;
    if (flat) {
      const double tail = pi2_6 - table.radius_squared(n);
      ok = ok && tail > 1.0 / (n + 1) && tail < 1.0 / n;
      // sin(theta_n) * pi (n+1) / sqrt(6) > 1
      const double bound = std::sin(th) * kPi * (n + 1) / std::sqrt(6.0);
      ok = ok && bound > 1.0;
      report.max_err = std::max(report.max_err, 1.0 - bound);
      if (n < n_max) {
        const double step = 1.0 / (static_cast<double>(n + 1) * (n + 1));
        const double rec =
            std::fabs(table.radius_squared(n + 1) - table.radius_squared(n) - step);
        ok = ok && rec <= 1e-14;
      }
    }
    ++report.count;
    if (!ok) ++report.failures;
    prev_r = r;
    prev_th = th;
  }

  if (!flat) {
    // Convergence of the hyperbolic radii.
    const double drift = table.radius(2000) - table.radius(1000);
    if (!(drift > 0.0 && drift < 1e-3)) ++report.failures;
    report.stats.emplace_back("s2000_minus_s1000", drift);
  }

  report.pass = report.failures == 0;
  report.stats.emplace_back("n_max", static_cast<double>(n_max));
  report.stats.emplace_back("radius_1", table.radius(1));
  report.stats.emplace_back("radius_sup", sup);
  report.stats.emplace_back("theta_1_deg", table.theta(1) * 180.0 / kPi);
  report.stats.emplace_back("theta_12_deg", table.theta_sum(1, 2) * 180.0 / kPi);
  return report;
}

}  // namespace rose
