// Command-line front end: metric queries, verification reports, and SVG
// renderings. Every command prints one JSON document on standard output:
//   {"command": ..., "config": ..., "result": ..., "checks": [...]}
// Exit status: 0 when all checks pass, 1 when any check fails, 2 on
// usage or parse errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rose/mesh_oracle.h"
#include "rose/metric.h"
#include "rose/render.h"
#include "rose/verify.h"

using nlohmann::json;
using namespace rose;

namespace {

constexpr double kPi = std::numbers::pi;

struct Config {
  std::string curvature = "flat";
  int depth = 8;
  std::uint64_t seed = 42;
  double step = 0.02;
  std::string out = "rose.svg";
  std::string mode = "spiral";
  double gap_tol = 1e-10;  // straddle-witness tolerance

  Curvature kappa() const {
    return curvature == "flat" ? Curvature::Flat : Curvature::Hyperbolic;
  }
  json to_json() const {
    return json{{"curvature", curvature}, {"depth", depth},
                {"seed", seed},           {"step", step},
                {"out", out},             {"mode", mode},
                {"gap_tol", gap_tol}};
  }
};

json check_json(const CheckReport& r) {
  return json{{"name", r.name}, {"pass", r.pass}, {"max_err", r.max_err}};
}

json report_json(const CheckReport& r) {
  json stats;
  for (const auto& [k, v] : r.stats) stats[k] = v;
  return json{{"name", r.name},
              {"pass", r.pass},
              {"max_err", r.max_err},
              {"failures", r.failures},
              {"count", r.count},
              {"stats", stats}};
}

int emit(const std::string& command, const Config& cfg, const json& result,
         const json& checks) {
  bool all_pass = true;
  for (const auto& c : checks)
    if (!c.at("pass").get<bool>()) all_pass = false;
  const json doc{{"command", command},
                 {"config", cfg.to_json()},
                 {"result", result},
                 {"checks", checks}};
  std::cout << doc.dump(2) << '\n';
  return all_pass ? 0 : 1;
}

double parse_angle(const std::string& text) {
  if (text == "pi") return kPi;
  if (text == "pi/2") return kPi / 2;
  if (text == "pi/3") return kPi / 3;
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an angle: pi, pi/2, pi/3 or a decimal", 0);
  }
}

json witness_json(const RadiiTable& table, const StraddleWitness& w) {
  return json{{"a", format_point(w.a)},
              {"b", format_point(w.b)},
              {"p", format_point(w.p)},
              {"t", w.t},
              {"gap", w.gap},
              {"leg_a", distance(table, w.a, w.p)},
              {"leg_b", distance(table, w.p, w.b)}};
}

// Root-petal literals start with "-/", which an option parser would eat.
// They can never be valid options, so escape them for CLI11 and strip the
// escape before parsing the literal.
std::string unescape_literal(const std::string& text) {
  return text.rfind("@", 0) == 0 ? text.substr(1) : text;
}

RosePoint cli_point(const RadiiTable& table, const std::string& text) {
  return parse_point(table, unescape_literal(text));
}

json run_verify(const RadiiTable& table, const Config& cfg,
                const std::string& which, json& checks) {
  json result;
  const bool flat = table.curvature() == Curvature::Flat;
  auto add = [&](const CheckReport& r) {
    checks.push_back(check_json(r));
    result[r.name] = report_json(r);
  };
  if (which == "extreme" || which == "all")
    add(extreme_scan(table, cfg.depth, 1000, cfg.seed));
  if (which == "cat" || which == "all")
    add(cat_comparison_suite(table, flat ? 500 : 200, cfg.depth, cfg.seed));
  if (which == "oracle" || which == "all")
    // The mesh oracle caps its truncation depth (node count grows as 2^depth).
    {
      const int d = std::min(cfg.depth, 4);
      const OracleReport o =
          oracle_compare_suite(table, d, cfg.step, 200, cfg.seed);
      CheckReport r;
      r.name = "oracle_equivalence";
      r.pass = o.pass;
      r.max_err = o.max_gap;
      r.failures = o.violations;
      r.count = o.pairs;
      r.stats = {{"depth", static_cast<double>(o.depth)},
                 {"step", o.step},
                 {"mean_gap", o.mean_gap},
                 {"min_gap", o.min_gap},
                 {"max_gap", o.max_gap},
                 {"gap_bound", o.gap_bound}};
      add(r);
    }
  if (which == "isometry" || which == "all")
    add(isometry_suite(table, 200, cfg.depth, cfg.seed));
  if (which == "radius" || which == "all") add(radius_report(table, 10000));
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact metric engine and verification suite for a bounded "
               "complete CAT(0)/CAT(-1) petal complex without extreme points"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--curvature", cfg.curvature, "Model curvature")
      ->check(CLI::IsMember({"flat", "hyperbolic"}))
      ->capture_default_str();
  app.add_option("--depth", cfg.depth, "Truncation/sample depth")
      ->check(CLI::Range(1, 4096))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--step", cfg.step, "Mesh oracle sample spacing")
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Output path (render)")->capture_default_str();
  app.add_option("--mode", cfg.mode, "Render mode")
      ->check(CLI::IsMember({"spiral", "petal"}))
      ->capture_default_str();
  app.add_option("--gap-tol", cfg.gap_tol, "Witness gap tolerance")
      ->capture_default_str();

  auto* c_dist = app.add_subcommand("dist", "Distance between two points");
  auto* c_geo = app.add_subcommand("geodesic", "Geodesic breakpoints");
  auto* c_mid = app.add_subcommand("midpoint", "Midpoint of two points");
  auto* c_ang = app.add_subcommand("angle", "Angle at the center");
  auto* c_wit = app.add_subcommand("witness", "Straddle witness for a point");
  auto* c_cov = app.add_subcommand("cover", "Separating convex cover");
  auto* c_ver = app.add_subcommand("verify", "Run verification suites");
  auto* c_thr = app.add_subcommand("threshold", "Through-center level");
  auto* c_ren = app.add_subcommand("render", "Render an SVG");

  // Global flags remain usable after the subcommand name.
  for (auto* c : {c_dist, c_geo, c_mid, c_ang, c_wit, c_cov, c_ver, c_thr, c_ren})
    c->fallthrough();

  std::string p_text, q_text, which = "all", m_text, target_text;
  for (auto* c : {c_dist, c_geo, c_mid, c_ang})
    c->add_option("P", p_text, "point literal")->required();
  for (auto* c : {c_dist, c_geo, c_mid, c_ang})
    c->add_option("Q", q_text, "point literal")->required();
  c_wit->add_option("P", p_text, "point literal")->required();
  c_cov->add_option("P", p_text, "point literal")->required();
  c_cov->add_option("Q", q_text, "point literal")->required();
  c_ver->add_option("WHICH", which, "suite")
      ->check(CLI::IsMember({"extreme", "cat", "oracle", "isometry", "radius", "all"}));
  c_thr->add_option("M", m_text, "base level")->required();
  c_thr->add_option("TARGET", target_text, "angle: pi, pi/2, pi/3 or decimal")
      ->required();

  std::vector<std::string> raw_args(argv, argv + argc);
  std::vector<char*> args;
  args.reserve(raw_args.size());
  for (std::string& a : raw_args) {
    if (a.rfind("-/", 0) == 0) a.insert(a.begin(), '@');
    args.push_back(a.data());
  }
  try {
    app.parse(argc, args.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    RadiiTable table(cfg.kappa());
    json checks = json::array();

    if (*c_dist) {
      const RosePoint p = cli_point(table, p_text);
      const RosePoint q = cli_point(table, q_text);
      return emit("dist", cfg, distance(table, p, q), checks);
    }
    if (*c_geo) {
      const RosePoint p = cli_point(table, p_text);
      const RosePoint q = cli_point(table, q_text);
      const GeodesicPath g = geodesic(table, p, q);
      json pts = json::array();
      for (const auto& b : g.points) pts.push_back(format_point(b));
      return emit("geodesic", cfg,
                  json{{"breakpoints", pts},
                       {"through_center", g.through_center},
                       {"length", g.length}},
                  checks);
    }
    if (*c_mid) {
      const RosePoint p = cli_point(table, p_text);
      const RosePoint q = cli_point(table, q_text);
      const RosePoint m = interpolate(table, p, q, 0.5);
      return emit("midpoint", cfg,
                  json{{"point", format_point(m)},
                       {"distance_p", distance(table, p, m)},
                       {"distance_q", distance(table, m, q)}},
                  checks);
    }
    if (*c_ang) {
      const RosePoint p = cli_point(table, p_text);
      const RosePoint q = cli_point(table, q_text);
      return emit("angle", cfg, center_angle(table, p, q), checks);
    }
    if (*c_wit) {
      const RosePoint p = cli_point(table, p_text);
      const StraddleWitness w = straddle_witness(table, p);
      CheckReport r;
      r.name = "straddle_gap";
      r.max_err = w.gap;
      r.pass = w.gap <= cfg.gap_tol && distance(table, w.a, w.p) > 0 &&
               distance(table, w.p, w.b) > 0;
      checks.push_back(check_json(r));
      return emit("witness", cfg, witness_json(table, w), checks);
    }
    if (*c_cov) {
      const RosePoint x = cli_point(table, p_text);
      const RosePoint y = cli_point(table, q_text);
      const SeparationCover cover = separation_cover(table, x, y);
      json roots = json::array();
      for (std::size_t i = 0; i < cover.w_roots.size() && i < 64; ++i)
        roots.push_back(cover.w_roots[i].word());

      // The non-center target must avoid every W; sampled points are covered.
      const RosePoint& target = y.is_center() ? x : y;
      CheckReport excl;
      excl.name = "cover_excludes_target";
      excl.pass = !cover_membership(table, cover, target).in_w;
      checks.push_back(check_json(excl));

      CheckReport sound;
      sound.name = "cover_soundness";
      RandomSource rng(cfg.seed);
      PointOptions opt;
      opt.max_level = cover.n + 3;
      opt.boundary_prob = 0.3;
      opt.corner_prob = 0.1;
      for (int i = 0; i < 1000; ++i) {
        const CoverMembership m =
            cover_membership(table, cover, random_point(table, rng, opt));
        ++sound.count;
        if (!m.in_k && !m.in_w) ++sound.failures;
      }
      sound.pass = sound.failures == 0;
      checks.push_back(check_json(sound));

      return emit("cover", cfg,
                  json{{"n", cover.n},
                       {"w_count", cover.w_count},
                       {"w_roots_sample", roots},
                       {"x", format_point(x)},
                       {"y", format_point(y)}},
                  checks);
    }
    if (*c_ver) {
      const json result = run_verify(table, cfg, which, checks);
      return emit("verify", cfg, json{{"which", which}, {"suites", result}},
                  checks);
    }
    if (*c_thr) {
      const int m = std::stoi(m_text);
      const double target = parse_angle(target_text);
      return emit("threshold", cfg, through_center_level(table, m, target),
                  checks);
    }
    if (*c_ren) {
      const RenderMode mode =
          cfg.mode == "spiral" ? RenderMode::Spiral : RenderMode::Petal;
      std::ostringstream buf;
      const RenderStats stats = render_svg(table, cfg.depth, mode, buf);
      const std::string svg = buf.str();
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output: " + cfg.out);
      file << svg;
      file.close();
      return emit("render", cfg,
                  json{{"path", cfg.out},
                       {"bytes", svg.size()},
                       {"triangles_per_sheet", stats.triangles_per_sheet},
                       {"cumulative_angle", stats.cumulative_angle},
                       {"circle_radius", stats.circle_radius}},
                  checks);
    }
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error at position %zu: %s\n", e.position(),
                 e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
