#include "rose/point.h"

#include <cassert>
#include <charconv>
#include <cmath>

namespace rose {

namespace {

constexpr double kSlack = 1e-9;

// Clamp x onto [lo, hi] when within `slack` of the bound; throw otherwise.
double clamp_or_fail(double x, double lo, double hi, double slack,
                     const char* what) {
  if (!(x >= lo - slack)) throw std::domain_error(what);
  if (!(x <= hi + slack)) throw std::domain_error(what);
  return std::fmin(std::fmax(x, lo), hi);
}

}  // namespace

RosePoint canonicalize(const RadiiTable& table, const TriangleId& tri,
                       double rho, double alpha) {
  if (!std::isfinite(rho) || !std::isfinite(alpha))
    throw std::domain_error("canonicalize: non-finite coordinates");
  const int n = tri.addr.level();
  const double th = table.theta(n);
  alpha = clamp_or_fail(alpha, 0.0, th, kSlack,
                        "canonicalize: alpha outside [0, theta]");
  const double bound = boundary_radius(table.curvature(), table.radius(n), alpha);
  rho = clamp_or_fail(rho, 0.0, bound, kSlack * (1.0 + bound),
                      "canonicalize: rho outside the triangle");
  if (rho == 0.0) return RosePoint::center();

  if (alpha == 0.0) {
    if (tri.addr.is_root()) {
      // Root median tie-break: side R.
      return RosePoint::raw({tri.addr, Side::R, tri.sheet}, rho, 0.0);
    }
    // A point on a non-root median lies on the parent's border; the parent
    // petal has the smaller level, so it carries the canonical chart.
    TriangleId up{tri.addr.parent(), tri.addr.last_side(), tri.sheet};
    return RosePoint::raw(std::move(up), rho, table.theta(n - 1));
  }
  return RosePoint::raw(tri, rho, alpha);
}

int level_of(const RosePoint& p) {
  if (p.is_center()) return 1;
  return p.tri().addr.level();
}

DirectionLocus direction_of(const RosePoint& p) {
  if (p.is_center())
    throw std::domain_error("direction_of: the center has no direction");
  return DirectionLocus{p.tri().sheet, p.tri().addr, p.tri().side, p.alpha()};
}

double boundary_radius_at(const RadiiTable& table, const RosePoint& p) {
  if (p.is_center())
    throw std::domain_error("boundary_radius_at: center");
  const int n = level_of(p);
  return boundary_radius(table.curvature(), table.radius(n), p.alpha());
}

namespace {

double parse_number(std::string_view text, std::size_t& pos) {
  const char* begin = text.data() + pos;
  const char* end = text.data() + text.size();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin)
    throw ParseError("expected a decimal number", pos);
  pos += static_cast<std::size_t>(ptr - begin);
  return value;
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  assert(ec == std::errc());
  return std::string(buf, ptr);
}

}  // namespace

RosePoint parse_point(const RadiiTable& table, std::string_view text) {
  if (text == "center") return RosePoint::center();

  std::size_t pos = 0;
  PetalAddress addr;
  if (pos < text.size() && text[pos] == '-') {
    ++pos;  // root
  } else {
    std::string word;
    while (pos < text.size() && (text[pos] == 'L' || text[pos] == 'R'))
      word.push_back(text[pos++]);
    if (word.empty())
      throw ParseError("expected address: '-' or a word over {L,R}", pos);
    addr = PetalAddress(std::move(word));
  }
  if (pos >= text.size() || text[pos] != '/')
    throw ParseError("expected '/' after the address", pos);
  ++pos;
  if (pos >= text.size() || (text[pos] != 'L' && text[pos] != 'R'))
    throw ParseError("expected side letter L or R", pos);
  const Side side = text[pos] == 'L' ? Side::L : Side::R;
  ++pos;
  if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
    throw ParseError("expected sheet sign '+' or '-'", pos);
  const Sheet sheet = text[pos] == '+' ? Sheet::Upper : Sheet::Lower;
  ++pos;
  if (pos >= text.size() || text[pos] != ':')
    throw ParseError("expected ':' before rho", pos);
  ++pos;
  const double rho = parse_number(text, pos);
  if (pos >= text.size() || text[pos] != ':')
    throw ParseError("expected ':' before alpha", pos);
  ++pos;
  const double alpha = parse_number(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters", pos);

  try {
    return canonicalize(table, {addr, side, sheet}, rho, alpha);
  } catch (const std::domain_error& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string format_point(const RosePoint& p) {
  if (p.is_center()) return "center";
  const TriangleId& t = p.tri();
  std::string out = t.addr.is_root() ? "-" : t.addr.word();
  out += '/';
  out += side_char(t.side);
  out += t.sheet == Sheet::Upper ? '+' : '-';
  out += ':';
  out += format_double(p.rho());
  out += ':';
  out += format_double(p.alpha());
  return out;
}

}  // namespace rose
