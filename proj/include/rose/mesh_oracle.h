#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "rose/metric.h"

namespace rose {

/// Independent brute-force distance oracle: the complex truncated at a given
/// level, with every triangle edge sampled at spacing <= step and complete
/// exact-chord links inside each triangle. Shortest sampled paths upper-bound
/// the true metric; refining the step (halving) never increases any value
/// because the sample grids are nested.
///
/// Interior points are not sampled: with complete per-triangle linking a path
/// through an interior node is never shorter than the direct chord between
/// its neighbors, so edge samples alone realize the same shortest paths.
class MeshGraph {
 public:
  MeshGraph(const RadiiTable& table, int depth, double step);

  int depth() const { return depth_; }
  double step() const { return step_; }
  std::size_t node_count() const { return points_.size(); }
  const RadiiTable& table() const { return *table_; }

  struct Result {
    double distance = 0.0;
    double snap_p = 0.0;  // distance from p to its nearest sample
    double snap_q = 0.0;
  };

  /// Shortest sampled-path length between p and q, which become virtual
  /// endpoints linked by exact chords into their containing triangles.
  /// Requires both levels <= depth.
  Result query(const RosePoint& p, const RosePoint& q) const;

 private:
  struct Tri {
    TriangleId id;
    int level = 1;
    std::vector<int> nodes;
    std::vector<double> rho, alpha;  // chart coordinates in this triangle
    std::vector<double> sinh_rho;    // hyperbolic only
  };

  int add_node(const RosePoint& canonical);
  void add_sample(Tri& tri, double rho, double alpha);
  void build_triangle(const TriangleId& id);
  double link_weight(const Tri& t, int i, int j) const;
  std::vector<std::pair<int, double>> virtual_links(const RosePoint& p) const;
  std::vector<int> triangles_of(const RosePoint& p) const;

  const RadiiTable* table_;
  int depth_;
  double step_;
  bool hyperbolic_;

  std::vector<RosePoint> points_;
  std::vector<std::vector<std::pair<int, int>>> memberships_;  // (tri, local)
  std::vector<Tri> tris_;
  std::unordered_map<std::string, int> node_index_;
  std::unordered_map<std::string, int> tri_index_;
};

struct OracleReport {
  int depth = 0;
  double step = 0.0;
  int pairs = 0;
  std::uint64_t seed = 0;
  double max_gap = 0.0;
  double mean_gap = 0.0;
  double min_gap = 0.0;
  double max_snap = 0.0;
  long violations = 0;  // gaps outside [0, gap_bound]
  double gap_bound = 0.0;
  bool pass = false;
};

/// Samples random canonical pairs (levels <= depth) and compares the mesh
/// oracle against the exact engine. Every gap must lie in [0, 2.5 * step].
OracleReport oracle_compare_suite(const RadiiTable& table, int depth,
                                  double step, int pairs, std::uint64_t seed);

}  // namespace rose
