#include "rose/render.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "rose/curvature.h"
#include "rose/point.h"

namespace rose {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kFullEnumerationDepth = 12;
constexpr int kMaxSpiralDepth = 50;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

std::string fmt_deg(double rad) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", rad * 180.0 / kPi);
  return buf;
}

void polygon(std::ostream& out, double x1, double y1, double x2, double y2,
             double x3, double y3, const char* fill) {
  out << "    <polygon points=\"" << fmt(x1) << ',' << fmt(y1) << ' ' << fmt(x2)
      << ',' << fmt(y2) << ' ' << fmt(x3) << ',' << fmt(y3) << "\" fill=\""
      << fill << "\" fill-opacity=\"0.35\" stroke=\"#803\" stroke-width=\"0.002\"/>\n";
}

const char* level_fill(int n) {
  static const char* palette[] = {"#e83e8c", "#d6479a", "#c050a8", "#a958b5",
                                  "#9161c3", "#786ad0", "#5e72de", "#417beb"};
  return palette[(n - 1) & 7];
}

// One unfolded triangle: apex at the origin, median foot at angle `base`,
// corner at angle base + dir * theta.
void spiral_triangle(std::ostream& out, const RadiiTable& table, int n,
                     double base, int dir) {
  const double rn = table.radius(n);
  const double corner = boundary_radius(table.curvature(), rn, table.theta(n));
  const double a2 = base + dir * table.theta(n);
  polygon(out, 0.0, 0.0, rn * std::cos(base), rn * std::sin(base),
          corner * std::cos(a2), corner * std::sin(a2), level_fill(n));
}

struct Placed {
  double angle;  // signed cumulative angle of the median vertex
};

long spiral_sheet(std::ostream& out, const RadiiTable& table, int depth) {
  long triangles = 0;
  const int full = std::min(depth, kFullEnumerationDepth);
  std::vector<Placed> level = {{0.0}};
  for (int n = 1; n <= full; ++n) {
    for (const Placed& p : level) {
      spiral_triangle(out, table, n, p.angle, +1);  // side R, counterclockwise
      spiral_triangle(out, table, n, p.angle, -1);  // side L
      triangles += 2;
    }
    if (n < full) {
      std::vector<Placed> next;
      next.reserve(level.size() * 2);
      const double th = table.theta(n);
      for (const Placed& p : level) {
        next.push_back({p.angle + th});
        next.push_back({p.angle - th});
      }
      level = std::move(next);
    }
  }
  // Beyond the enumeration cap, continue the extremal arm one copy per level.
  for (int n = full + 1; n <= depth; ++n) {
    spiral_triangle(out, table, n, table.theta_sum(1, n - 1), +1);
    ++triangles;
  }
  return triangles;
}

void arc_annotation(std::ostream& out, double radius, double from, double to,
                    const std::string& label, double lx, double ly) {
  out << "  <path d=\"M " << fmt(radius * std::cos(from)) << ' '
      << fmt(radius * std::sin(from)) << " A " << fmt(radius) << ' '
      << fmt(radius) << " 0 0 1 " << fmt(radius * std::cos(to)) << ' '
      << fmt(radius * std::sin(to))
      << "\" fill=\"none\" stroke=\"#222\" stroke-width=\"0.004\"/>\n";
  out << "  <text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
      << "\" font-size=\"0.07\" fill=\"#222\" transform=\"scale(1,-1)\">" << label
      << "</text>\n";
}

RenderStats render_spiral(const RadiiTable& table, int depth, std::ostream& out) {
  if (depth > kMaxSpiralDepth)
    throw std::domain_error("render: spiral depth is limited to 50");
  RenderStats stats;
  stats.depth = depth;
  stats.cumulative_angle = table.theta_sum(1, depth);
  stats.circle_radius = table.radius_sup();

  const std::string r = [&] {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8f", stats.circle_radius);
    return std::string(buf);
  }();

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"840\" height=\"840\" viewBox=\"-1.4 -1.4 2.8 2.8\">\n";
  out << "  <g transform=\"scale(1,-1)\">\n";
  out << "  <circle cx=\"0\" cy=\"0\" r=\"" << r
      << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"0.005\"/>\n";
  out << "  <line x1=\"0\" y1=\"0\" x2=\"" << fmt(table.radius(1))
      << "\" y2=\"0\" stroke=\"#555\" stroke-width=\"0.003\" "
         "stroke-dasharray=\"0.02,0.02\"/>\n";

  out << "  <g id=\"sheet-upper\">\n";
  stats.triangles_per_sheet = spiral_sheet(out, table, depth);
  out << "  </g>\n";
  out << "  <g id=\"sheet-lower\" transform=\"scale(1,-1)\" opacity=\"0.45\">\n";
  spiral_sheet(out, table, depth);
  out << "  </g>\n";

  const double t1 = table.theta(1);
  const double t12 = table.theta_sum(1, 2);
  arc_annotation(out, 0.40, 0.0, t1, fmt_deg(t1) + "&#176;", 0.44, -0.12);
  arc_annotation(out, 0.52, t1, t12, fmt_deg(t12) + "&#176;", 0.50, -0.42);
  out << "  </g>\n";
  out << "</svg>\n";
  return stats;
}

RenderStats render_petal(const RadiiTable& table, int depth, std::ostream& out) {
  const int n = depth;
  const double rn = table.radius(n);
  const double theta = table.theta(n);
  const double corner = boundary_radius(table.curvature(), rn, theta);
  const double half_base = 1.0 / (n + 1);

  RenderStats stats;
  stats.depth = depth;
  stats.triangles_per_sheet = 2;
  stats.cumulative_angle = theta;
  stats.circle_radius = corner;

  // Planar chart of the petal: central segment vertical through the tip,
  // one double triangle per sheet, four chart triangles in all.
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"840\" height=\"840\" viewBox=\"-0.9 -1.4 1.8 2.8\">\n";
  out << "  <g transform=\"scale(1,-1)\">\n";
  for (double sy : {1.0, -1.0})  // sheet
    for (double sx : {1.0, -1.0})  // side
      polygon(out, 0.0, 0.0, 0.0, sy * rn, sx * half_base, sy * rn,
              level_fill(n));
  out << "  <line x1=\"0\" y1=\"" << fmt(-rn) << "\" x2=\"0\" y2=\"" << fmt(rn)
      << "\" stroke=\"#000\" stroke-width=\"0.004\"/>\n";
  out << "  <text x=\"0.02\" y=\"" << fmt(-0.45 * rn)
      << "\" font-size=\"0.05\" transform=\"scale(1,-1)\">central segment "
      << fmt(2.0 * rn) << "</text>\n";
  out << "  <text x=\"" << fmt(0.25 * half_base) << "\" y=\"" << fmt(-0.5 * rn)
      << "\" font-size=\"0.05\" transform=\"scale(1,-1)\">border "
      << fmt(corner) << "</text>\n";
  out << "  <text x=\"" << fmt(-0.9 * half_base) << "\" y=\"" << fmt(-rn - 0.07)
      << "\" font-size=\"0.05\" transform=\"scale(1,-1)\">base half "
      << fmt(half_base) << "</text>\n";
  out << "  <text x=\"" << fmt(0.3 * half_base) << "\" y=\"" << fmt(-rn - 0.07)
      << "\" font-size=\"0.05\" transform=\"scale(1,-1)\">median "
      << fmt(rn) << "</text>\n";
  out << "  </g>\n";
  out << "</svg>\n";
  return stats;
}

}  // namespace

RenderStats render_svg(const RadiiTable& table, int depth, RenderMode mode,
                       std::ostream& out) {
  if (depth < 1) throw std::domain_error("render: depth must be >= 1");
  if (mode == RenderMode::Spiral) return render_spiral(table, depth, out);
  return render_petal(table, depth, out);
}

}  // namespace rose
