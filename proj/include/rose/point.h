#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rose/radii.h"

namespace rose {

enum class Side : std::uint8_t { L, R };
enum class Sheet : std::uint8_t { Upper, Lower };

inline Side opposite(Side s) { return s == Side::L ? Side::R : Side::L; }
inline Sheet opposite(Sheet s) {
  return s == Sheet::Upper ? Sheet::Lower : Sheet::Upper;
}
inline char side_char(Side s) { return s == Side::L ? 'L' : 'R'; }

/// Position of a petal in the gluing tree: the empty word is the root petal
/// (level 1); appending a letter descends to the petal glued on that border.
/// Addresses are lazy paths — the tree is never materialized.
class PetalAddress {
 public:
  PetalAddress() = default;
  explicit PetalAddress(std::string word) : word_(std::move(word)) {}

  int level() const { return static_cast<int>(word_.size()) + 1; }
  bool is_root() const { return word_.empty(); }
  const std::string& word() const { return word_; }

  Side last_side() const { return word_.back() == 'L' ? Side::L : Side::R; }
  PetalAddress parent() const {
    return PetalAddress(word_.substr(0, word_.size() - 1));
  }
  PetalAddress child(Side s) const { return PetalAddress(word_ + side_char(s)); }

  bool is_prefix_of(const PetalAddress& other) const {
    return other.word_.size() >= word_.size() &&
           other.word_.compare(0, word_.size(), word_) == 0;
  }

  friend bool operator==(const PetalAddress&, const PetalAddress&) = default;
  friend auto operator<=>(const PetalAddress&, const PetalAddress&) = default;

 private:
  std::string word_;
};

/// One of the four right triangles of a petal: (side, sheet) picks the
/// quadrant. At level n the triangle has legs radius(n) (the median) and
/// 1/(n+1) (half of the base), hypotenuse along the border.
struct TriangleId {
  PetalAddress addr;
  Side side = Side::R;
  Sheet sheet = Sheet::Upper;

  friend bool operator==(const TriangleId&, const TriangleId&) = default;
};

/// A point of the glued space in canonical coordinates: either the center,
/// or (triangle, rho, alpha) with rho the distance from the center and alpha
/// the angle from the petal's median, 0 <= alpha <= theta(level).
///
/// Canonical form: alpha = 0 only for the root petal with side R; points on
/// a non-root median are represented in the parent petal (alpha equal to the
/// parent's theta), so the address level equals the least level of any petal
/// containing the point.
class RosePoint {
 public:
  static RosePoint center() { return RosePoint(); }
  static RosePoint raw(TriangleId tri, double rho, double alpha) {
    RosePoint p;
    p.center_ = false;
    p.tri_ = std::move(tri);
    p.rho_ = rho;
    p.alpha_ = alpha;
    return p;
  }

  bool is_center() const { return center_; }
  const TriangleId& tri() const { return tri_; }
  double rho() const { return center_ ? 0.0 : rho_; }
  double alpha() const { return alpha_; }

  friend bool operator==(const RosePoint& a, const RosePoint& b) {
    if (a.center_ != b.center_) return false;
    if (a.center_) return true;
    return a.tri_ == b.tri_ && a.rho_ == b.rho_ && a.alpha_ == b.alpha_;
  }

 private:
  bool center_ = true;
  TriangleId tri_;
  double rho_ = 0.0;
  double alpha_ = 0.0;
};

/// A position in the tree of directions at the center (one tree per sheet):
/// on the arc swept by triangle (addr, side), at angular offset from the
/// median vertex of addr. Offset theta(level) is the vertex of addr.child(side).
struct DirectionLocus {
  Sheet sheet = Sheet::Upper;
  PetalAddress addr;
  Side side = Side::R;
  double offset = 0.0;
};

/// Brings a raw coordinate tuple to canonical form; validates containment
/// (0 <= alpha <= theta(level), 0 <= rho <= boundary radius) with a relative
/// slack of 1e-9, clamping onto the exact bound inside the slack.
/// Throws std::domain_error beyond it. Idempotent on canonical points.
RosePoint canonicalize(const RadiiTable& table, const TriangleId& tri,
                       double rho, double alpha);

inline RosePoint canonicalize(const RadiiTable& table, const RosePoint& p) {
  if (p.is_center()) return p;
  return canonicalize(table, p.tri(), p.rho(), p.alpha());
}

/// Least level of a petal containing the point; defined as 1 for the center.
int level_of(const RosePoint& p);

/// Projection to the space of directions. Requires p != center.
DirectionLocus direction_of(const RosePoint& p);

/// Maximal radius of the space in the direction of p, i.e. the base-edge
/// radius boundary_radius(radius(level), alpha).
double boundary_radius_at(const RadiiTable& table, const RosePoint& p);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Point literals: `center` or `<addr>/<side><sheet>:<rho>:<alpha>` with
/// addr `-` for the root or a word over {L,R}, side in {L,R}, sheet `+`
/// (upper) or `-` (lower), rho/alpha decimal. Parsing canonicalizes;
/// formatting emits the canonical form and round-trips bit-exactly.
RosePoint parse_point(const RadiiTable& table, std::string_view text);
std::string format_point(const RosePoint& p);

}  // namespace rose
