#include "rose/metric.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rose {

namespace {

constexpr double kPi = std::numbers::pi;

// Distance from the root vertex of the direction tree to vertex w.
double root_depth(const RadiiTable& table, const PetalAddress& w) {
  return table.theta_sum(1, static_cast<int>(w.word().size()));
}

std::size_t common_prefix_len(const std::string& a, const std::string& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

// Exactly symmetric in (u, v): operands are ordered before summation.
double vertex_distance(const RadiiTable& table, const PetalAddress& u,
                       const PetalAddress& v) {
  const std::size_t l = common_prefix_len(u.word(), v.word());
  const double su = root_depth(table, u);
  const double sv = root_depth(table, v);
  return (std::fmin(su, sv) + std::fmax(su, sv)) -
         2.0 * table.theta_sum(1, static_cast<int>(l));
}

// Symmetric accumulation of (partial arc) + (vertex path) + (partial arc).
double combo_total(double cost_a, double mid, double cost_b) {
  return (std::fmin(cost_a, cost_b) + std::fmax(cost_a, cost_b)) + mid;
}

struct PathSeg {
  PetalAddress addr;
  Side side;
  double t_in;   // arc coordinate (offset from vertex `addr`) at entry
  double t_out;  // at exit
};

// The tree path between two same-sheet direction loci: total angle, the
// vertices strictly between the endpoints (with cumulative angles), and the
// covering arc segments in traversal order.
struct LinkPath {
  double phi = 0.0;
  std::vector<PetalAddress> junctions;
  std::vector<double> gammas;
  std::vector<PathSeg> segs;
};

// Arc length of (addr, side) is theta(level(addr)).
double arc_length(const RadiiTable& table, const PetalAddress& addr) {
  return table.theta(addr.level());
}

LinkPath path_between(const RadiiTable& table, const DirectionLocus& a,
                      const DirectionLocus& b) {
  LinkPath path;
  if (a.addr == b.addr && a.side == b.side) {
    path.phi = std::fabs(a.offset - b.offset);
    if (path.phi > 0.0)
      path.segs.push_back({a.addr, a.side, a.offset, b.offset});
    return path;
  }

  const double len_a = arc_length(table, a.addr);
  const double len_b = arc_length(table, b.addr);
  const PetalAddress ends_a[2] = {a.addr, a.addr.child(a.side)};
  const PetalAddress ends_b[2] = {b.addr, b.addr.child(b.side)};
  const double cost_a[2] = {a.offset, len_a - a.offset};
  const double cost_b[2] = {b.offset, len_b - b.offset};

  double best = -1.0;
  int bi = 0, bj = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double d = combo_total(
          cost_a[i], vertex_distance(table, ends_a[i], ends_b[j]), cost_b[j]);
      if (best < 0.0 || d < best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  }
  path.phi = best;

  // Vertex chain from the chosen exit of arc A to the chosen entry of arc B:
  // up to the longest common prefix, then down.
  const PetalAddress& e1 = ends_a[bi];
  const PetalAddress& e2 = ends_b[bj];
  const std::size_t l = common_prefix_len(e1.word(), e2.word());
  std::vector<PetalAddress> chain;
  for (std::size_t k = e1.word().size() + 1; k-- > l + 1;)
    chain.push_back(PetalAddress(e1.word().substr(0, k)));
  chain.push_back(PetalAddress(e1.word().substr(0, l)));
  for (std::size_t k = l + 1; k <= e2.word().size(); ++k)
    chain.push_back(PetalAddress(e2.word().substr(0, k)));

  // Segments: partial arc A, full arcs along the chain, partial arc B.
  const double exit_a = bi == 0 ? 0.0 : len_a;
  if (a.offset != exit_a)
    path.segs.push_back({a.addr, a.side, a.offset, exit_a});
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    const PetalAddress& u = chain[k];
    const PetalAddress& v = chain[k + 1];
    if (u.is_prefix_of(v)) {
      path.segs.push_back({u, v.last_side(), 0.0, arc_length(table, u)});
    } else {
      path.segs.push_back({v, u.last_side(), arc_length(table, v), 0.0});
    }
  }
  const double entry_b = bj == 0 ? 0.0 : len_b;
  if (entry_b != b.offset)
    path.segs.push_back({b.addr, b.side, entry_b, b.offset});

  // Junction vertices with their cumulative angles; the chain endpoints drop
  // out when a locus sits exactly on them (gamma 0 or phi).
  double gamma = cost_a[bi];
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k > 0) gamma += arc_length(table, chain[k - 1].is_prefix_of(chain[k])
                                              ? chain[k - 1]
                                              : chain[k]);
    if (gamma > 0.0 && gamma < path.phi) {
      path.junctions.push_back(chain[k]);
      path.gammas.push_back(gamma);
    }
  }
  return path;
}

// Same-sheet angular distance without materializing segments.
double angular_distance_same_sheet(const RadiiTable& table,
                                   const DirectionLocus& a,
                                   const DirectionLocus& b) {
  if (a.addr == b.addr && a.side == b.side) return std::fabs(a.offset - b.offset);
  const double len_a = arc_length(table, a.addr);
  const double len_b = arc_length(table, b.addr);
  const PetalAddress ends_a[2] = {a.addr, a.addr.child(a.side)};
  const PetalAddress ends_b[2] = {b.addr, b.addr.child(b.side)};
  const double cost_a[2] = {a.offset, len_a - a.offset};
  const double cost_b[2] = {b.offset, len_b - b.offset};
  double best = -1.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double d = combo_total(
          cost_a[i], vertex_distance(table, ends_a[i], ends_b[j]), cost_b[j]);
      if (best < 0.0 || d < best) best = d;
    }
  return best;
}

// The point at a tree vertex with the given radius, in canonical form.
RosePoint vertex_point(const RadiiTable& table, const PetalAddress& w,
                       Sheet sheet, double radius) {
  return canonicalize(table, TriangleId{w, Side::R, sheet}, radius, 0.0);
}

// Requires a non-empty path (phi > 0).
RosePoint locate_on_path(const RadiiTable& table, const LinkPath& path,
                         Sheet sheet, double gamma, double radius) {
  double start = 0.0;
  for (const PathSeg& seg : path.segs) {
    const double len = std::fabs(seg.t_out - seg.t_in);
    if (gamma <= start + len || &seg == &path.segs.back()) {
      const double local = std::clamp(gamma - start, 0.0, len);
      const double alpha =
          seg.t_out >= seg.t_in ? seg.t_in + local : seg.t_in - local;
      return canonicalize(table, TriangleId{seg.addr, seg.side, sheet}, radius,
                          alpha);
    }
    start += len;
  }
  throw std::logic_error("locate_on_path: empty path");
}

}  // namespace

std::optional<double> angular_distance(const RadiiTable& table,
                                       const DirectionLocus& d1,
                                       const DirectionLocus& d2) {
  if (d1.sheet != d2.sheet) return std::nullopt;
  return angular_distance_same_sheet(table, d1, d2);
}

double distance(const RadiiTable& table, const RosePoint& p, const RosePoint& q) {
  if (p.is_center() && q.is_center()) return 0.0;
  if (p.is_center()) return q.rho();
  if (q.is_center()) return p.rho();
  const DirectionLocus dp = direction_of(p);
  const DirectionLocus dq = direction_of(q);
  if (dp.sheet != dq.sheet) return p.rho() + q.rho();
  const double phi = angular_distance_same_sheet(table, dp, dq);
  return cone_distance(table.curvature(), p.rho(), q.rho(), phi);
}

GeodesicPath geodesic(const RadiiTable& table, const RosePoint& p,
                      const RosePoint& q) {
  GeodesicPath out;
  if (p.is_center() || q.is_center()) {
    out.points = {p, q};
    out.through_center = true;
    out.length = p.rho() + q.rho();
    return out;
  }
  const DirectionLocus dp = direction_of(p);
  const DirectionLocus dq = direction_of(q);
  if (dp.sheet != dq.sheet) {
    out.points = {p, RosePoint::center(), q};
    out.through_center = true;
    out.length = p.rho() + q.rho();
    return out;
  }
  LinkPath path = path_between(table, dp, dq);
  if (path.phi >= kPi) {
    out.points = {p, RosePoint::center(), q};
    out.through_center = true;
    out.length = p.rho() + q.rho();
    return out;
  }
  out.points.push_back(p);
  for (std::size_t i = 0; i < path.junctions.size(); ++i) {
    const double r = geodesic_radius_at(table.curvature(), p.rho(), q.rho(),
                                        path.phi, path.gammas[i]);
    out.points.push_back(vertex_point(table, path.junctions[i], dp.sheet, r));
  }
  out.points.push_back(q);
  out.through_center = false;
  out.length = cone_distance(table.curvature(), p.rho(), q.rho(), path.phi);
  return out;
}

RosePoint interpolate(const RadiiTable& table, const RosePoint& p,
                      const RosePoint& q, double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::domain_error("interpolate: t outside [0, 1]");
  if (t == 0.0 || p == q) return p;
  if (t == 1.0) return q;

  const bool radial =
      p.is_center() || q.is_center() ||
      (!p.is_center() && !q.is_center() && p.tri().sheet != q.tri().sheet);
  std::optional<LinkPath> path;
  if (!radial) {
    path = path_between(table, direction_of(p), direction_of(q));
  }
  if (radial || path->phi >= kPi) {
    const double s = t * (p.rho() + q.rho());
    if (s <= p.rho()) {
      // Still on p's radial leg (p != center here, else s = 0 handled above).
      return canonicalize(table, p.tri(), p.rho() - s, p.alpha());
    }
    return canonicalize(table, q.tri(), s - p.rho(), q.alpha());
  }

  const double phi = path->phi;
  const Sheet sheet = p.tri().sheet;
  if (phi == 0.0) {
    // Same direction: canonical reps share the triangle; walk the radius.
    const double rho_m = (1.0 - t) * p.rho() + t * q.rho();
    return canonicalize(table, p.tri(), rho_m, p.alpha());
  }
  double rho_m, gamma_m;
  if (table.curvature() == Curvature::Flat) {
    const double x1 = p.rho(), y1 = 0.0;
    const double x2 = q.rho() * std::cos(phi), y2 = q.rho() * std::sin(phi);
    const double mx = (1.0 - t) * x1 + t * x2;
    const double my = (1.0 - t) * y1 + t * y2;
    rho_m = std::hypot(mx, my);
    gamma_m = std::clamp(std::atan2(my, mx), 0.0, phi);
  } else {
    // Hyperboloid model: X(s) = A cosh s + U sinh s, U the unit tangent at A.
    const double a0 = std::cosh(p.rho()), a1 = std::sinh(p.rho()), a2 = 0.0;
    const double b0 = std::cosh(q.rho());
    const double b1 = std::sinh(q.rho()) * std::cos(phi);
    const double b2 = std::sinh(q.rho()) * std::sin(phi);
    const double d = cone_distance(Curvature::Hyperbolic, p.rho(), q.rho(), phi);
    if (d == 0.0) return p;
    const double chd = std::cosh(d), shd = std::sinh(d);
    const double u0 = (b0 - a0 * chd) / shd;
    const double u1 = (b1 - a1 * chd) / shd;
    const double u2 = (b2 - a2 * chd) / shd;
    const double cs = std::cosh(t * d), sn = std::sinh(t * d);
    const double x0 = a0 * cs + u0 * sn;
    const double x1 = a1 * cs + u1 * sn;
    const double x2 = a2 * cs + u2 * sn;
    rho_m = std::acosh(std::max(1.0, x0));
    gamma_m = std::clamp(std::atan2(x2, x1), 0.0, phi);
  }
  return locate_on_path(table, *path, sheet, gamma_m, rho_m);
}

double center_angle(const RadiiTable& table, const RosePoint& p,
                    const RosePoint& q) {
  if (p.is_center() || q.is_center())
    throw std::domain_error("center_angle: the center has no direction");
  const auto phi = angular_distance(table, direction_of(p), direction_of(q));
  if (!phi) return kPi;
  return std::min(*phi, kPi);
}

int through_center_level(const RadiiTable& table, int m, double target) {
  if (m < 1) throw std::domain_error("through_center_level: m must be >= 1");
  if (!(target >= 0.0) || !std::isfinite(target))
    throw std::domain_error("through_center_level: bad target angle");
  int M = m + 1;
  while (table.theta_sum(m + 1, M - 1) < target) ++M;
  return M;
}

}  // namespace rose
