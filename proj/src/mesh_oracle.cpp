#include "rose/mesh_oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "rose/sampler.h"

namespace rose {

namespace {

// One-sided rounding guard added to every sampled link, so floating-point
// sums of exact chord lengths cannot dip below the closed forms they bound.
// Direct virtual p-q chords carry no guard and stay bit-equal to the engine.
constexpr double kLinkEps = 1e-15;

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string canon_key(const RosePoint& p) {
  if (p.is_center()) return "C";
  const TriangleId& t = p.tri();
  std::string key;
  key.reserve(t.addr.word().size() + 2 + 2 * sizeof(double));
  key += t.addr.word();
  key += '|';
  key += side_char(t.side);
  key += t.sheet == Sheet::Upper ? '+' : '-';
  const double buf[2] = {p.rho(), p.alpha()};
  key.append(reinterpret_cast<const char*>(buf), sizeof buf);
  return key;
}

std::string tri_key(const TriangleId& t) {
  std::string key = t.addr.word();
  key += '|';
  key += side_char(t.side);
  key += t.sheet == Sheet::Upper ? '+' : '-';
  return key;
}

}  // namespace

MeshGraph::MeshGraph(const RadiiTable& table, int depth, double step)
    : table_(&table),
      depth_(depth),
      step_(step),
      hyperbolic_(table.curvature() == Curvature::Hyperbolic) {
  if (depth < 1 || depth > 6)
    throw std::domain_error("MeshGraph: depth must be in [1, 6]");
  if (!(step > 1e-4 && step <= 0.5))
    throw std::domain_error("MeshGraph: step must be in (1e-4, 0.5]");

  add_node(RosePoint::center());

  std::vector<PetalAddress> addrs = {PetalAddress()};
  for (int n = 1; n <= depth; ++n) {
    for (const PetalAddress& addr : addrs)
      for (Side side : {Side::L, Side::R})
        for (Sheet sheet : {Sheet::Upper, Sheet::Lower})
          build_triangle(TriangleId{addr, side, sheet});
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
}

int MeshGraph::add_node(const RosePoint& canonical) {
  const std::string key = canon_key(canonical);
  auto [it, inserted] = node_index_.try_emplace(key, static_cast<int>(points_.size()));
  if (inserted) {
    points_.push_back(canonical);
    memberships_.emplace_back();
  }
  return it->second;
}

void MeshGraph::add_sample(Tri& tri, double rho, double alpha) {
  const RosePoint canonical = canonicalize(*table_, tri.id, rho, alpha);
  const int idx = add_node(canonical);
  const int tri_idx = static_cast<int>(tris_.size()) - 1;  // tri == tris_.back()
  memberships_[idx].push_back({tri_idx, static_cast<int>(tri.nodes.size())});
  tri.nodes.push_back(idx);
  tri.rho.push_back(rho);
  tri.alpha.push_back(alpha);
  if (hyperbolic_) tri.sinh_rho.push_back(std::sinh(rho));
}

void MeshGraph::build_triangle(const TriangleId& id) {
  const int n = id.addr.level();
  const Curvature k = table_->curvature();
  const double theta = table_->theta(n);
  const double rn = table_->radius(n);
  const double corner = boundary_radius(k, rn, theta);
  const double half_base = 1.0 / (n + 1);
  const double h = step_;

  tris_.push_back(Tri{});
  Tri& tri = tris_.back();
  tri.id = id;
  tri.level = n;
  tri_index_.emplace(tri_key(id), static_cast<int>(tris_.size()) - 1);

  add_sample(tri, 0.0, 0.0);  // center belongs to every triangle
  for (int j = 1; j * h < rn - 1e-12; ++j) add_sample(tri, j * h, 0.0);
  add_sample(tri, rn, 0.0);  // median foot
  for (int j = 1; j * h < corner - 1e-12; ++j) add_sample(tri, j * h, theta);
  add_sample(tri, corner, theta);  // outer corner
  for (int j = 1; j * h < half_base - 1e-12; ++j) {
    const double s = j * h;  // arc length along the base from the foot
    add_sample(tri, hypotenuse(k, rn, s), apex_angle(k, rn, s));
  }
}

// Same cancellation-free law-of-cosines forms as the engine: short chords at
// large radius keep absolute accuracy near 1e-16.
double MeshGraph::link_weight(const Tri& t, int i, int j) const {
  const double s = std::sin(0.5 * (t.alpha[i] - t.alpha[j]));
  if (hyperbolic_) {
    const double dsh = std::sinh(0.5 * (t.rho[i] - t.rho[j]));
    return acosh1p(2.0 * dsh * dsh + 2.0 * t.sinh_rho[i] * t.sinh_rho[j] * s * s);
  }
  const double dr = t.rho[i] - t.rho[j];
  return std::sqrt(dr * dr + 4.0 * t.rho[i] * t.rho[j] * s * s);
}

std::vector<int> MeshGraph::triangles_of(const RosePoint& p) const {
  std::vector<int> out;
  auto push = [&](const TriangleId& id) {
    auto it = tri_index_.find(tri_key(id));
    if (it != tri_index_.end()) out.push_back(it->second);
  };
  push(p.tri());
  const int n = level_of(p);
  if (p.alpha() == table_->theta(n) && n + 1 <= depth_) {
    const PetalAddress child = p.tri().addr.child(p.tri().side);
    push(TriangleId{child, Side::L, p.tri().sheet});
    push(TriangleId{child, Side::R, p.tri().sheet});
  }
  if (p.alpha() == 0.0 && p.tri().addr.is_root())
    push(TriangleId{p.tri().addr, Side::L, p.tri().sheet});
  return out;
}

std::vector<std::pair<int, double>> MeshGraph::virtual_links(
    const RosePoint& p) const {
  std::vector<std::pair<int, double>> links;
  if (p.is_center()) {
    links.emplace_back(0, 0.0);
    return links;
  }
  const Curvature k = table_->curvature();
  for (int ti : triangles_of(p)) {
    const Tri& t = tris_[ti];
    // Chart coordinates of p inside triangle ti: its own chart keeps
    // (rho, alpha); in a neighbor reached across an edge, alpha is 0.
    const bool own = t.id == p.tri();
    const double pa = own ? p.alpha() : 0.0;
    for (std::size_t j = 0; j < t.nodes.size(); ++j) {
      const double w =
          cone_distance(k, p.rho(), t.rho[j], std::fabs(pa - t.alpha[j]));
      links.emplace_back(t.nodes[j], w + kLinkEps);
    }
  }
  return links;
}

MeshGraph::Result MeshGraph::query(const RosePoint& p, const RosePoint& q) const {
  if (level_of(p) > depth_ || level_of(q) > depth_)
    throw std::domain_error("MeshGraph::query: point beyond the truncation depth");

  const Curvature k = table_->curvature();
  Result res;

  // Direct virtual chords, bit-equal to the engine's closed form.
  double best = kInf;
  if (p.is_center() || q.is_center()) {
    best = p.rho() + q.rho();
  } else {
    const auto tp = triangles_of(p);
    const auto tq = triangles_of(q);
    for (int ti : tp) {
      if (std::find(tq.begin(), tq.end(), ti) == tq.end()) continue;
      const double pa = tris_[ti].id == p.tri() ? p.alpha() : 0.0;
      const double qa = tris_[ti].id == q.tri() ? q.alpha() : 0.0;
      best = std::min(best,
                      cone_distance(k, p.rho(), q.rho(), std::fabs(pa - qa)));
    }
  }

  const auto source = virtual_links(p);
  const auto target = virtual_links(q);
  std::unordered_map<int, double> target_w;
  for (const auto& [v, w] : target) {
    auto [it, inserted] = target_w.try_emplace(v, w);
    if (!inserted && w < it->second) it->second = w;
  }

  res.snap_p = kInf;
  for (const auto& [v, w] : source) res.snap_p = std::min(res.snap_p, w);
  res.snap_q = kInf;
  for (const auto& [v, w] : target) res.snap_q = std::min(res.snap_q, w);
  if (p.is_center()) res.snap_p = 0.0;
  if (q.is_center()) res.snap_q = 0.0;

  std::vector<double> dist(points_.size(), kInf);
  std::vector<char> settled(points_.size(), 0);
  std::vector<int> tri_settled(tris_.size(), 0);
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;

  for (const auto& [v, w] : source) {
    if (w < dist[v]) {
      dist[v] = w;
      heap.emplace(w, v);
    }
  }

  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d >= best) break;
    if (settled[u] || d > dist[u]) continue;
    settled[u] = 1;
    if (auto it = target_w.find(u); it != target_w.end())
      best = std::min(best, d + it->second);
    for (const auto& [ti, local] : memberships_[u]) {
      const Tri& t = tris_[ti];
      if (tri_settled[ti] == static_cast<int>(t.nodes.size())) continue;
      for (std::size_t j = 0; j < t.nodes.size(); ++j) {
        const int v = t.nodes[j];
        if (settled[v]) continue;
        const double nd = d + link_weight(t, local, static_cast<int>(j)) + kLinkEps;
        if (nd < dist[v]) {
          dist[v] = nd;
          heap.emplace(nd, v);
        }
      }
    }
    for (const auto& [ti, local] : memberships_[u]) ++tri_settled[ti];
  }

  res.distance = best;
  return res;
}

OracleReport oracle_compare_suite(const RadiiTable& table, int depth,
                                  double step, int pairs, std::uint64_t seed) {
  if (depth > 5)
    throw std::domain_error("oracle_compare_suite: depth must be <= 5");
  OracleReport report;
  report.depth = depth;
  report.step = step;
  report.pairs = pairs;
  report.seed = seed;
  report.gap_bound = 2.5 * step;
  report.min_gap = kInf;

  const MeshGraph mesh(table, depth, step);
  RandomSource rng(seed);
  PointOptions opt;
  opt.max_level = depth;
  opt.boundary_prob = 0.25;
  opt.corner_prob = 0.05;

  double sum = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const RosePoint p = random_point(table, rng, opt);
    const RosePoint q = random_point(table, rng, opt);
    const double engine = distance(table, p, q);
    const MeshGraph::Result r = mesh.query(p, q);
    const double gap = r.distance - engine;
    report.max_gap = std::max(report.max_gap, gap);
    report.min_gap = std::min(report.min_gap, gap);
    report.max_snap = std::max({report.max_snap, r.snap_p, r.snap_q});
    sum += gap;
    if (gap < 0.0 || gap > report.gap_bound) ++report.violations;
  }
  report.mean_gap = pairs > 0 ? sum / pairs : 0.0;
  if (pairs == 0) report.min_gap = 0.0;
  report.pass = report.violations == 0;
  return report;
}

}  // namespace rose
