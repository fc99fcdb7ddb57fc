// Acceptance suite: every criterion with its stated tolerance, one PASS/FAIL
// line each. Usage: rose_acceptance <cli-binary> <golden-dir> [work-dir]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "rose/mesh_oracle.h"
#include "rose/render.h"
#include "rose/verify.h"

using namespace rose;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;
std::string cli_path, golden_dir, work_dir = ".";

class Criterion {
 public:
  Criterion(int number, std::string what)
      : number_(number), what_(std::move(what)), ok_(true),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool cond, const char* detail) {
    if (!cond) {
      ok_ = false;
      notes_ += std::string("; FAILED: ") + detail;
    }
  }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }
  ~Criterion() {
    std::printf("[%s] criterion %2d: %s [%.2f s]%s\n", ok_ ? "PASS" : "FAIL",
                number_, what_.c_str(), seconds(), notes_.c_str());
    std::fflush(stdout);
    if (!ok_) ++failures;
  }

 private:
  int number_;
  std::string what_;
  bool ok_;
  std::string notes_;
  std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

long count_occurrences(const std::string& hay, const std::string& needle) {
  long n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

void criterion_1_radii() {
  Criterion c(1, "radii: r1 exact, r3 rational, tail bounds, sup bound");
  RadiiTable t(Curvature::Flat);
  c.require(t.radius(1) == 1.0, "r_1 == 1 exactly");
  c.require(std::fabs(t.radius(3) - 7.0 / 6.0) <= 1e-15, "r_3 = 7/6 @1e-15");
  const double pi26 = kPi * kPi / 6.0;
  for (int n : {10, 100, 1000, 10000}) {
    const double tail = pi26 - t.radius_squared(n);
    c.require(tail > 1.0 / (n + 1), "tail > 1/(n+1)");
    c.require(tail < 1.0 / n, "tail < 1/n");
  }
  const double sup = kPi / std::sqrt(6.0);
  bool below = true;
  for (int n = 1; n <= 100000; ++n) below = below && t.radius(n) < sup;
  c.require(below, "r_n < pi/sqrt(6) for n <= 1e5");
  c.require(c.seconds() < 1.0, "runtime < 1 s");
}

void criterion_2_figure_angles() {
  Criterion c(2, "angles match the flattened figure: 26.5651 and 43.1666 deg");
  RadiiTable t(Curvature::Flat);
  const double t1_deg = t.theta(1) * 180.0 / kPi;
  const double t12_deg = t.theta_sum(1, 2) * 180.0 / kPi;
  c.require(std::fabs(t1_deg - 26.5651) <= 1e-4, "theta_1 = 26.5651 +/- 0.0001");
  c.require(std::fabs(t12_deg - 43.1666) <= 2e-4,
            "theta_1+theta_2 = 43.1666 +/- 0.0002");
}

void criterion_3_angle_inequality() {
  Criterion c(3, "angle inequality sin(theta_n) pi (n+1) / sqrt(6) > 1");
  RadiiTable t(Curvature::Flat);
  bool ok = true;
  for (int n = 1; n <= 10000; ++n)
    ok = ok && std::sin(t.theta(n)) * kPi * (n + 1) / std::sqrt(6.0) > 1.0;
  c.require(ok, "holds for all n <= 1e4");
  c.require(c.seconds() < 1.0, "runtime < 1 s");
}

// Shared by criteria 4 (flat) and 10 (hyperbolic rerun at reduced size).
void oracle_equivalence(Criterion& c, Curvature k, int depth, double step,
                        int pairs, std::uint64_t seed) {
  RadiiTable t(k);
  const MeshGraph mesh(t, depth, step);
  RandomSource rng(seed);
  PointOptions opt;
  opt.max_level = depth;
  opt.boundary_prob = 0.25;
  opt.corner_prob = 0.05;

  std::vector<RosePoint> ps, qs;
  std::vector<double> coarse(pairs);
  double max_gap = 0.0;
  bool in_range = true;
  for (int i = 0; i < pairs; ++i) {
    ps.push_back(random_point(t, rng, opt));
    qs.push_back(random_point(t, rng, opt));
    const double engine = distance(t, ps[i], qs[i]);
    coarse[i] = mesh.query(ps[i], qs[i]).distance;
    const double gap = coarse[i] - engine;
    max_gap = std::max(max_gap, gap);
    in_range = in_range && gap >= 0.0 && gap <= 0.05;
  }
  c.require(in_range, "0 <= oracle - engine <= 0.05 for every pair");

  const MeshGraph fine(t, depth, 0.5 * step);
  bool monotone = true;
  for (int i = 0; i < std::min(pairs, 50); ++i)
    monotone = monotone && fine.query(ps[i], qs[i]).distance <= coarse[i];
  c.require(monotone, "halving the step never increases any oracle value");
}

void criterion_4_oracle() {
  Criterion c(4, "oracle equivalence at depth 4, step 0.02, 200 pairs");
  oracle_equivalence(c, Curvature::Flat, 4, 0.02, 200, 7);
  c.require(c.seconds() < 60.0, "runtime < 60 s");
}

void criterion_5_cat() {
  Criterion c(5, "comparison inequality: 500 flat + 200 hyperbolic triples");
  RadiiTable f(Curvature::Flat);
  const CheckReport rf = cat_comparison_suite(f, 500, 6, 3);
  c.require(rf.pass && rf.failures == 0, "flat: zero violations @1e-9");
  RadiiTable h(Curvature::Hyperbolic);
  const CheckReport rh = cat_comparison_suite(h, 200, 6, 3);
  c.require(rh.pass && rh.failures == 0, "hyperbolic: zero violations @1e-9");
}

void criterion_6_extreme() {
  Criterion c(6, "no extreme points: corners to level 8 + 1000 samples");
  RadiiTable t(Curvature::Flat);
  const CheckReport r = extreme_scan(t, 8, 1000, 42);
  c.require(r.failures == 0, "zero failures");
  c.require(r.max_err <= 1e-10, "max witness gap <= 1e-10");
}

void criterion_7_through_center() {
  Criterion c(7, "through-center threshold and the pi/3 law");
  RadiiTable t(Curvature::Flat);

  const int M = through_center_level(t, 1, kPi);
  const std::string golden = read_file(golden_dir + "/through_center_level_flat.txt");
  c.require(!golden.empty() && M == std::atoi(golden.c_str()),
            "M matches the golden file");

  RandomSource rng(7);
  PointOptions opt1;
  opt1.max_level = 1;
  bool split = true;
  for (int i = 0; i < 50; ++i) {
    const RosePoint p = random_point(t, rng, opt1);
    // A point of level >= M in the branch below p's own border.
    const int extra = rng.uniform_int(0, 3);
    std::string word(1, side_char(p.tri().side));
    word += random_address(rng, M - 2 + extra).word();
    const int level = static_cast<int>(word.size()) + 1;
    const double alpha = t.theta(level) * (1.0 - rng.uniform01());
    const double bound = boundary_radius(t.curvature(), t.radius(level), alpha);
    const RosePoint q =
        canonicalize(t, {PetalAddress(word), p.tri().side, p.tri().sheet},
                     bound * (1.0 - rng.uniform01()), alpha);
    const GeodesicPath g = geodesic(t, p, q);
    split = split && g.through_center &&
            distance(t, p, q) == p.rho() + q.rho();
  }
  c.require(split, "50 deep pairs: through_center and d = rho_p + rho_q exact");

  PointOptions opt;
  opt.max_level = 10;
  long hits = 0;
  bool law = true;
  for (int i = 0; i < 1000; ++i) {
    const RosePoint p = random_point(t, rng, opt);
    const RosePoint q = random_point(t, rng, opt);
    if (center_angle(t, p, q) >= kPi / 3) {
      ++hits;
      law = law && distance(t, p, q) >= std::min(p.rho(), q.rho()) - 1e-12;
    }
  }
  c.require(law && hits > 100, "pi/3 law on 1000 samples");
}

void criterion_8_cover() {
  Criterion c(8, "separation covers: exclusion, coverage, convexity");
  RadiiTable t(Curvature::Flat);
  RandomSource rng(8);
  PointOptions opt;
  opt.max_level = 6;
  bool shapes = true, excludes = true, covered = true, convex = true;

  for (int pair = 0; pair < 20; ++pair) {
    const RosePoint x = random_point(t, rng, opt);
    RosePoint y = random_point(t, rng, opt);
    if (y == x) y = random_point(t, rng, opt);
    const SeparationCover cover = separation_cover(t, x, y);
    shapes = shapes && cover.n == std::max(level_of(x), level_of(y)) + 1 &&
             cover.w_count == (1ull << cover.n) &&
             cover.w_roots.size() == cover.w_count;
    excludes = excludes && !cover_membership(t, cover, y).in_w &&
               cover_membership(t, cover, y).in_k;

    PointOptions sopt;
    sopt.max_level = cover.n + 3;
    sopt.boundary_prob = 0.3;
    sopt.corner_prob = 0.1;
    for (int i = 0; i < 50; ++i) {
      const CoverMembership m =
          cover_membership(t, cover, random_point(t, rng, sopt));
      covered = covered && (m.in_k || m.in_w);
    }

    for (int i = 0; i < 5; ++i) {
      const PetalAddress root =
          cover.w_roots[static_cast<std::size_t>(rng.bits() % cover.w_count)];
      auto sample_in_w = [&]() {
        PetalAddress addr(root.word() +
                          random_address(rng, rng.uniform_int(0, 3)).word());
        const int level = addr.level();
        const double alpha = t.theta(level) * (1.0 - rng.uniform01());
        const double bound =
            boundary_radius(t.curvature(), t.radius(level), alpha);
        return canonicalize(
            t, {addr, rng.chance(0.5) ? Side::L : Side::R, Sheet::Upper},
            bound * (1.0 - rng.uniform01()), alpha);
      };
      const GeodesicPath g = geodesic(t, sample_in_w(), sample_in_w());
      for (const RosePoint& bp : g.points) {
        if (bp.is_center()) continue;
        const CoverMembership m = cover_membership(t, cover, bp);
        convex = convex && m.in_w && m.w_root == root;
      }
    }
  }
  c.require(shapes, "|W| = 2^n with n = max levels + 1");
  c.require(excludes, "y lies in K and outside every W");
  c.require(covered, "1000 sampled points covered by K or some W");
  c.require(convex, "100 intra-W geodesics stay in W union the center");
}

void criterion_9_isometry() {
  Criterion c(9, "isometry invariance on 200 labelled actions");
  RadiiTable t(Curvature::Flat);
  const CheckReport r = isometry_suite(t, 200, 8, 5);
  c.require(r.failures == 0, "zero failures");
  c.require(r.max_err <= 1e-12, "max deviation <= 1e-12");
}

void criterion_10_hyperbolic() {
  Criterion c(10, "hyperbolic variant: radii drift + criteria 4-6 at depth 3");
  RadiiTable t(Curvature::Hyperbolic);
  bool mono = true;
  for (int n = 1; n < 2000; ++n) mono = mono && t.radius(n + 1) > t.radius(n);
  c.require(mono, "s_n strictly increasing to 2000");
  c.require(std::fabs(t.radius(2000) - t.radius(1000)) < 1e-3,
            "|s_2000 - s_1000| < 1e-3");

  oracle_equivalence(c, Curvature::Hyperbolic, 3, 0.02, 100, 7);

  const CheckReport cat = cat_comparison_suite(t, 100, 3, 3);
  c.require(cat.pass && cat.failures == 0, "comparison: zero violations @1e-9");

  const CheckReport ext = extreme_scan(t, 3, 100, 42);
  c.require(ext.failures == 0 && ext.max_err <= 1e-10,
            "extreme scan: zero failures, gap <= 1e-10");
}

void criterion_11_render() {
  Criterion c(11, "rendering: 126 triangles per sheet, byte-identical runs");
  const std::string f1 = work_dir + "/accept_render_1.svg";
  const std::string f2 = work_dir + "/accept_render_2.svg";
  const std::string base = "\"" + cli_path +
                           "\" render --depth 6 --mode spiral --out ";
  const int e1 = std::system((base + "\"" + f1 + "\" > /dev/null").c_str());
  const int e2 = std::system((base + "\"" + f2 + "\" > /dev/null").c_str());
  c.require(e1 == 0 && e2 == 0, "render exits 0");

  const std::string svg = read_file(f1);
  c.require(!svg.empty() && svg.rfind("<?xml", 0) == 0 &&
                svg.find("<svg") != std::string::npos &&
                svg.rfind("</svg>") != std::string::npos,
            "well-formed SVG envelope");
  c.require(svg == read_file(f2), "byte-identical across runs");
  c.require(count_occurrences(svg, "<polygon") == 252,
            "126 triangles per sheet, two sheets");
  c.require(svg.find("r=\"1.28254983\"") != std::string::npos,
            "bounding circle radius 1.28254983");

  // The sheets hold equally many triangles.
  const std::size_t lower = svg.find("sheet-lower");
  c.require(lower != std::string::npos &&
                count_occurrences(svg.substr(0, lower), "<polygon") == 126,
            "upper sheet holds exactly 126 triangles");
}

}  // namespace

int main(int argc, char** argv) {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <cli-binary> <golden-dir> [work-dir]\n",
                 argv[0]);
    return 2;
  }
  cli_path = argv[1];
  golden_dir = argv[2];
  if (argc > 3) work_dir = argv[3];

  std::printf("=== acceptance ===\n");
  criterion_1_radii();
  criterion_2_figure_angles();
  criterion_3_angle_inequality();
  criterion_4_oracle();
  criterion_5_cat();
  criterion_6_extreme();
  criterion_7_through_center();
  criterion_8_cover();
  criterion_9_isometry();
  criterion_10_hyperbolic();
  criterion_11_render();

  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
