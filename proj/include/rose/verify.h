#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rose/metric.h"
#include "rose/sampler.h"

namespace rose {

/// Outcome of one verification suite: a pass flag, the worst observed error,
/// and a few named scalars for the report.
struct CheckReport {
  std::string name;
  bool pass = true;
  double max_err = 0.0;
  long failures = 0;
  long count = 0;
  std::vector<std::pair<std::string, double>> stats;
};

/// Two points a, b whose geodesic passes through p strictly inside — the
/// constructive negation of "p is extreme". gap = d(a,p) + d(p,b) - d(a,b).
struct StraddleWitness {
  RosePoint a, b, p;
  double t = 0.5;  // interpolation parameter of p on [a, b]
  double gap = 0.0;
};

/// Produces a witness for any canonical point:
///   center          -> the endpoints of the root central segment;
///   interior points -> the radial segment through the point;
///   base points     -> neighbors along the (straight) base edge;
///   outer corners   -> the child petal's base, whose midpoint is the corner.
StraddleWitness straddle_witness(const RadiiTable& table, const RosePoint& p);

/// Witnesses every outer corner up to `depth` and `samples` random points.
/// Fails if any witness has gap > 1e-10 or a zero-length leg.
CheckReport extreme_scan(const RadiiTable& table, int depth, int samples,
                         std::uint64_t seed);

/// Random triples (p, q, r) and a 9-point parameter grid: checks
/// d(interpolate(p,q,t), r) against the comparison value in the model plane,
/// with slack 1e-9.
CheckReport cat_comparison_suite(const RadiiTable& table, int triples,
                                 int depth, std::uint64_t seed);

/// Finite cover separating x from y: K is the truncation at level n =
/// max(level x, level y) + 1, and one subtree component W per address of
/// length n (2^n of them). Both points land in K and neither non-center
/// point lies in any W. Requires x != y and at most one of them the center.
struct SeparationCover {
  int n = 0;
  std::uint64_t w_count = 0;  // 2^n
  std::vector<PetalAddress> w_roots;  // materialized when n <= 16
};

SeparationCover separation_cover(const RadiiTable& table, const RosePoint& x,
                                 const RosePoint& y);

struct CoverMembership {
  bool in_k = false;
  bool in_w = false;
  PetalAddress w_root;  // meaningful when in_w (empty for the center: every W)
};

/// Membership is decided exactly from the canonical address: K holds levels
/// <= n; W_w holds the center, the petals under w, and the points of w's
/// central segment (canonically the border of w's parent).
CoverMembership cover_membership(const RadiiTable& table,
                                 const SeparationCover& cover,
                                 const RosePoint& z);

/// A finitely-supported assignment of Klein-four components to petal
/// addresses; bit 0 is the left/right flip (h), bit 1 the sheet flip (v).
struct IsometryLabel {
  std::map<std::string, std::uint8_t> components;
};

/// Applies the label by walking the address from the root: an h component at
/// a prefix flips the next letter (the side letter at the point's own petal);
/// a v component toggles the sheet state from that node on. rho and alpha are
/// untouched; the result is canonical.
RosePoint apply_isometry(const RadiiTable& table, const IsometryLabel& g,
                         const RosePoint& p);

/// Distance invariance over random (g, p, q) for the label subgroup that
/// acts by isometries (h anywhere, v at the root), plus involution checks
/// for single-node labels.
CheckReport isometry_suite(const RadiiTable& table, int trials, int depth,
                           std::uint64_t seed);

/// Tabulates radii/angles and asserts the radius and angle bounds up to n_max.
CheckReport radius_report(const RadiiTable& table, int n_max);

}  // namespace rose
